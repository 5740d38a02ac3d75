#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Miscellaneous helpers used throughout SoftTime."""

import os
from typing import Union


def load_file(*path_segments: str, mode: str = 'r') -> Union[str, bytes]:
    """Read a whole file; text files are decoded as UTF-8.

    :param path_segments: pieces of the path joined with `os.path.join`
    :param mode: 'r' for text, 'rb' for bytes
    :return: content of the file
    """
    path = os.path.join(*path_segments)
    if 'b' in mode:
        with open(path, mode) as f:
            return f.read()
    with open(path, mode, encoding='utf-8') as f:
        return f.read()


def write_file(data: Union[str, bytes], *path_segments: str, mode: str = 'w') -> int:
    """Write data into a file, creating missing parent directories.

    :param data: text or bytes
    :param path_segments: pieces of the path joined with `os.path.join`
    :param mode: 'w' for text, 'wb' for bytes
    :return: number of written characters or bytes
    """
    path = os.path.join(*path_segments)
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    if 'b' in mode:
        with open(path, mode) as f:
            return f.write(data)
    with open(path, mode, encoding='utf-8') as f:
        return f.write(data)
