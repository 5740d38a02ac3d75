#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause
import os

import pytest

from softtime.utils.misc import load_file, write_file


def test_write_and_load_text(tmpdir):
    path = os.path.join(tmpdir, 'nested', 'program.tsccp')
    text = "# ready\nmain: success\n"
    assert write_file(text, path) == len(text)
    assert load_file(path) == text
    assert load_file(tmpdir, 'nested', 'program.tsccp') == text


def test_write_and_load_binary(tmpdir):
    data = bytes(range(8))
    assert write_file(data, tmpdir, 'data.bin', mode='wb') == 8
    assert load_file(tmpdir, 'data.bin', mode='rb') == data


def test_load_missing_file(tmpdir):
    with pytest.raises(FileNotFoundError):
        load_file(tmpdir, 'missing.tsccp')


def test_load_from_data_dir(data_dir):
    assert load_file(data_dir, 'success.tsccp') == "# smallest program\nmain: success\n"
