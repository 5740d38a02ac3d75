#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Pretty printer emitting the program grammar."""

import itertools
from typing import Callable, List, Union

from ..semiring import Grade
from .ast import (Agent, Ask, Askp, Call, ConstraintDecl, ConstraintThreshold, Delay, Exists, GradeThreshold, Now,
                  Parallel, Program, Success, Sum, Tell, Threshold, Timeout, Watchdog)
from .exceptions import LangError

# precedence levels of the agent grammar
_PARALLEL, _CHOICE, _PREFIX = range(3)


def format_threshold(threshold: Threshold) -> str:
    """`[g]`, `{name}` or nothing for the zero constraint."""
    if isinstance(threshold, GradeThreshold):
        return f"[{threshold.grade}]"
    assert isinstance(threshold, ConstraintThreshold)
    if threshold.ref.name == 'zero':
        return ''
    return f"{{{threshold.ref.name}}}"


def _action(agent: Agent, ticks: int = None) -> str:
    assert isinstance(agent, (Tell, Ask))
    keyword = 'tell' if isinstance(agent, Tell) else 'ask'
    arrow = '->' if ticks is None else f"-{ticks}->"
    return f"{keyword}({agent.ref.name}) {arrow}{format_threshold(agent.threshold)} {_agent(agent.cont, _PREFIX)}"


def _agent(agent: Agent, level: int) -> str:
    text = _bare(agent)
    needs_parens = (
        (isinstance(agent, Parallel) and level > _PARALLEL)
        or (isinstance(agent, Sum) and len(agent.branches) > 1 and level > _CHOICE)
        or (isinstance(agent, Watchdog) and agent.orelse is None and level == _PREFIX)
    )
    return f"({text})" if needs_parens else text


def _bare(agent: Agent) -> str:
    # pylint: disable=too-many-return-statements
    if isinstance(agent, Success):
        return 'success'
    if isinstance(agent, (Tell, Ask)):
        return _action(agent)
    if isinstance(agent, Delay):
        return _action(agent.action, agent.ticks)
    if isinstance(agent, Sum):
        return ' + '.join(_agent(branch, _PREFIX) for branch in agent.branches)
    if isinstance(agent, Parallel):
        return f"{_agent(agent.left, _PARALLEL)} || {_agent(agent.right, _CHOICE)}"
    if isinstance(agent, Exists):
        return f"exists {agent.var.name}. {_agent(agent.body, _PREFIX)}"
    if isinstance(agent, Call):
        return f"{agent.name}({', '.join(var.name for var in agent.actuals)})"
    if isinstance(agent, Now):
        return (f"now{format_threshold(agent.threshold)} {agent.ref.name} then {_agent(agent.then, _PREFIX)} "
                f"else {_agent(agent.orelse, _PREFIX)}")
    if isinstance(agent, Askp):
        return (f"askp {agent.ticks} ({agent.ref.name}) ?{format_threshold(agent.threshold)} "
                f"{_agent(agent.then, _PREFIX)} : {_agent(agent.orelse, _PREFIX)}")
    if isinstance(agent, Timeout):
        guards = ' + '.join(_agent(branch, _PREFIX) for branch in agent.branches)
        return f"({guards}) timeout({agent.ticks}) {_agent(agent.orelse, _PREFIX)}"
    if isinstance(agent, Watchdog):
        text = (f"do {_agent(agent.body, _PREFIX)} watching{format_threshold(agent.threshold)} "
                f"{agent.ref.name}")
        return text if agent.orelse is None else f"{text} else {_agent(agent.orelse, _PREFIX)}"
    raise LangError(f"Cannot print {agent!r}")


def format_agent(agent: Agent) -> str:
    """Single-line text of an agent."""
    return _bare(agent)


def _constraint_decl(decl: ConstraintDecl, semiring_format: Callable[[Grade], str]) -> List[str]:
    params = ', '.join(var.name for var in decl.params)
    lines = [f"constraint {decl.name}({params}) {{"]
    if not decl.params:
        lines.append(f"    default -> {semiring_format(decl.constraint.table[0])}")
    for key in itertools.product(*(var.domain for var in decl.params)):
        grade = decl.constraint.eval(dict(zip((var.name for var in decl.params), key)))
        cell = key[0] if len(key) == 1 else f"({', '.join(key)})"
        lines.append(f"    {cell} -> {semiring_format(grade)}")
    lines.append('}')
    return lines


def pretty_print(item: Union[Program, Agent]) -> str:
    """Render a program or an agent in the concrete syntax.

    A printed program parses back to an equal program.

    :param item: program or agent
    :return: text
    """
    if not isinstance(item, Program):
        return format_agent(item)
    program = item
    lines = [f"semiring {program.semiring.name}", f"dialect {program.dialect}"]
    for var in program.variables:
        lines.append(f"var {var.name} in {{{', '.join(var.domain)}}}")
    for decl in program.constraints:
        lines.extend(_constraint_decl(decl, program.semiring.format))
    lines.append('')
    for proc in program.procedures:
        formals = ', '.join(var.name for var in proc.formals)
        lines.append(f"proc {proc.name}({formals}) :: {format_agent(proc.body)}")
    lines.append(f"main: {format_agent(program.main)}")
    return '\n'.join(lines) + '\n'
