#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Tests of the pretty printer."""

import pytest

from softtime.lang import expand_idioms, format_agent, parse, pretty_print
from tests.misc import corpus_files, corpus_program


@pytest.mark.parametrize("file_name", corpus_files('.tsccp', '.tscci'))
def test_round_trip(file_name):
    program = corpus_program(file_name)
    assert parse(pretty_print(program)) == program


@pytest.mark.parametrize("file_name", ['example1.tsccp', 'example2.tsccp', 'example3.tsccp', 'auction.tsccp'])
def test_round_trip_expanded(file_name):
    expanded = expand_idioms(corpus_program(file_name))
    assert parse(pretty_print(expanded)) == expanded


def test_format_agent():
    program = corpus_program('example1.tsccp')
    assert format_agent(program.main.right) == 'tell(one) -1->[inf] ask(c1) ->[9] success'
    assert pretty_print(program.main.left) == 'tell(one) -2->[inf] tell(c2) ->[inf] success'


def test_parentheses():
    program = parse("""
        var x in {0, 1}
        main: (ask(one) -> success + ask(one) -> success) || (tell(one) -> success || success)
    """)
    text = format_agent(program.main)
    assert text == 'ask(one) -> success + ask(one) -> success || (tell(one) -> success || success)'
    assert parse(f"main: {text}").main == program.main


def test_program_header():
    text = pretty_print(corpus_program('fuzzy.tsccp'))
    lines = text.splitlines()
    assert lines[:3] == ['semiring fuzzy', 'dialect tsccp', 'var t in {cold, mild, hot}']
    assert '    mild -> 4/5' in lines
