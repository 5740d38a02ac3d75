#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

import os
from typing import List

from softtime.engine import RunOutcome, format_path
from softtime.lang import Program, load_program

# programs shipped with the repository
PROGRAMS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'programs')


def corpus_program(file_name: str) -> Program:
    """Load a program of the shipped corpus.

    :param file_name: name of the file in the `programs` directory
    :return: parsed program
    """
    return load_program(PROGRAMS_DIR, file_name)


def corpus_files(*extensions: str) -> List[str]:
    """Names of the corpus files with given extensions, sorted."""
    return sorted(name for name in os.listdir(PROGRAMS_DIR) if name.endswith(extensions))


def event_log(outcome: RunOutcome) -> List[str]:
    """One line per tick: `tick: rule@path rule@path ...`.

    :param outcome: run of either engine
    :return: lines without line endings
    """
    return [f"{record.tick}: " + ' '.join(f"{event.tag}@{format_path(event.path)}" for event in record.events)
            for record in outcome.ticks]


def compare_text_file(path: str, text: str) -> None:
    """Compare generated text with expected content stored in the file.

    If the content differs, the generated text is stored next to the file to allow analysis of the differences.

    :param path: absolute path of the file with expected content
    :param text: generated text
    """
    with open(path, 'r') as f:
        expected = f.read()
    if expected != text:
        with open(path + '.generated', 'w') as f:
            f.write(text)
        assert expected == text, f'file does not match: "{path}"'
