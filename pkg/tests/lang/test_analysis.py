#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Tests of free variables, renaming and procedure instantiation."""

import pytest

from softtime.lang import (CallError, Exists, FreshNames, LangError, Parallel, Success, Tell, free_vars,
                           instantiate_call, is_fresh, is_success_shape, load_program, parse, substitute)
from tests.misc import corpus_program

HEADER = """
var x, y in {0, 1}
constraint cx(x) { 0 -> 0  1 -> 1 }
constraint cy(y) { 0 -> 0  1 -> 2 }
"""


def test_free_vars():
    program = corpus_program('hiding.tsccp')
    assert free_vars(program.main) == {program.variable('y')}
    program = parse(HEADER + "main: exists x. tell(cx) -> ask(cy) -> success")
    assert free_vars(program.main) == {program.variable('y')}
    assert free_vars(parse(HEADER + "main: exists x. tell(cx) -> success").main) == frozenset()


def test_success_shape():
    assert is_success_shape(Success())
    assert is_success_shape(parse("main: success || (success || success)").main)
    assert is_success_shape(parse(HEADER + "main: exists x. success").main)
    assert not is_success_shape(parse("main: success || tell(one) -> success").main)


def test_fresh_names():
    program = parse(HEADER + "main: success")
    x = program.variable('x')
    fresh = FreshNames()
    first = fresh.fresh(x)
    assert first.name == '$1'
    assert first.domain == x.domain
    assert is_fresh(first) and not is_fresh(x)
    renamed = substitute(parse(HEADER + "main: tell(cx) -> success").main, {'x': first})
    assert FreshNames.beyond(renamed).fresh(x).name == '$2'


def test_substitute():
    program = parse(HEADER + "main: tell(cx) -> exists x. tell(cx) -> success")
    y = program.variable('y')
    renamed = substitute(program.main, {'x': y})
    assert renamed.ref.constraint.variables == ('y',)
    # the bound occurrence is untouched
    assert renamed.cont == program.main.cont


def test_substitute_capture():
    program = parse(HEADER + "main: exists y. tell(cx) -> tell(cy) -> success")
    y = program.variable('y')
    with pytest.raises(LangError):
        substitute(program.main, {'x': y})
    renamed = substitute(program.main, {'x': y}, FreshNames())
    assert isinstance(renamed, Exists)
    assert renamed.var.name == '$1'
    assert renamed.body.ref.constraint.variables == ('y',)
    assert renamed.body.cont.ref.constraint.variables == ('$1',)


def test_instantiate_call_identity():
    program = parse(HEADER + "proc p(x) :: tell(cx) -> success\nmain: p(x)")
    assert instantiate_call(program, 'p', [program.variable('x')]) is program.procedure_map['p'].body


def test_instantiate_call_swap(data_dir):
    program = load_program(data_dir, 'swap.tsccp')
    x, y = program.variable('x'), program.variable('y')
    with pytest.raises(CallError):
        instantiate_call(program, 'p', [y, x])
    agent = instantiate_call(program, 'p', [y, x], FreshNames())
    assert isinstance(agent, Exists) and agent.var.name == '$1'
    assert isinstance(agent.body, Exists) and agent.body.var.name == '$2'
    link, body = agent.body.body.left, agent.body.body.right
    assert isinstance(agent.body.body, Parallel)
    assert isinstance(link, Tell)
    assert link.ref.name == 'd($1,y)*d($2,x)'
    assert body.ref.constraint.variables == ('$1',)
    assert free_vars(agent) == {x, y}


def test_instantiate_call_errors():
    program = parse(HEADER + "var b in {no, yes}\nproc p(x) :: success\nmain: p(x)")
    with pytest.raises(CallError):
        instantiate_call(program, 'q', [])
    with pytest.raises(CallError):
        instantiate_call(program, 'p', [])
    with pytest.raises(CallError):
        instantiate_call(program, 'p', [program.variable('b')])
