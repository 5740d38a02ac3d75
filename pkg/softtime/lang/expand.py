#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Translation of the delay, timeout and watchdog idioms into core agents."""

import logging
import re
from dataclasses import replace
from typing import Dict, List, Optional, Tuple

from .analysis import free_vars
from .ast import (Agent, Ask, Askp, Call, ConstraintRef, Delay, Exists, Now, Parallel, ProcDecl, Program, Success,
                  Sum, Tell, Threshold, Timeout, WATCH_SUFFIX, Watchdog, one_ref, zero_threshold)
from .exceptions import ExpansionError

logger = logging.getLogger("LANG:EXPAND")

_WATCH_INDEX = re.compile(re.escape(WATCH_SUFFIX) + r'(\d+)$')

WatchKey = Tuple[str, ConstraintRef, Threshold, Agent]


class IdiomExpander:
    """Expands the idioms of one program; procedure copies made for watchdogs are collected in `generated`."""

    def __init__(self, program: Program) -> None:
        """Initialize the expander.

        :param program: program whose procedures may be called from watched agents
        """
        self.program = program
        self.generated: List[ProcDecl] = []
        self._bodies: Dict[str, Agent] = {}
        self._copies: Dict[WatchKey, str] = {}
        self._formals = {proc.name: proc.formals for proc in program.procedures}
        indexes = [int(match.group(1)) for match in (_WATCH_INDEX.search(proc.name) for proc in program.procedures)
                   if match]
        self._next_index = max(indexes, default=0) + 1

    def body(self, name: str) -> Agent:
        """Expanded body of a declared procedure."""
        if name not in self._bodies:
            proc = self.program.procedure_map.get(name)
            if proc is None:
                raise ExpansionError(f"undeclared procedure '{name}'")
            self._bodies[name] = self.expand(proc.body)
        return self._bodies[name]

    def expand(self, agent: Agent) -> Agent:
        """Core agent equivalent to `agent`; idioms nested in idioms are expanded first.

        :param agent: any agent
        :return: agent without Delay, Timeout and Watchdog nodes
        :raises ExpansionError: watchdog over a hiding of a watched variable
        """
        # pylint: disable=too-many-return-statements
        if isinstance(agent, (Success, Call)):
            return agent
        if isinstance(agent, (Tell, Ask)):
            return replace(agent, cont=self.expand(agent.cont))
        if isinstance(agent, Sum):
            return replace(agent, branches=tuple(self.expand(branch) for branch in agent.branches))
        if isinstance(agent, Parallel):
            return replace(agent, left=self.expand(agent.left), right=self.expand(agent.right))
        if isinstance(agent, Exists):
            return replace(agent, body=self.expand(agent.body))
        if isinstance(agent, (Now, Askp)):
            return replace(agent, then=self.expand(agent.then), orelse=self.expand(agent.orelse))
        if isinstance(agent, Delay):
            return self._delay(agent.ticks, self.expand(agent.action))
        if isinstance(agent, Timeout):
            return self._timeout(agent)
        if isinstance(agent, Watchdog):
            orelse = Success(pos=agent.pos) if agent.orelse is None else self.expand(agent.orelse)
            return self._watch(self.expand(agent.body), agent.ref, agent.threshold, orelse)
        raise ExpansionError(f"Unknown agent {agent!r}")

    def _delay(self, ticks: int, action: Agent) -> Agent:
        if ticks == 0:
            return action
        assert isinstance(action, (Tell, Ask))
        semiring = self.program.semiring
        padding = Tell(one_ref(semiring), zero_threshold(semiring), action.cont, pos=action.pos)
        return replace(action, cont=self._delay(ticks - 1, padding))

    def _timeout(self, agent: Timeout) -> Agent:
        branches = tuple(self.expand(branch) for branch in agent.branches)
        for branch in branches:
            if not isinstance(branch, Ask):
                raise ExpansionError("timeout branches must be ask-guarded")
        guarded: Agent = branches[0] if len(branches) == 1 else Sum(branches, pos=agent.pos)
        semiring = self.program.semiring
        result = self.expand(agent.orelse)
        for _ in range(agent.ticks + 1):
            chain: Agent = Ask(one_ref(semiring), zero_threshold(semiring), result, pos=agent.pos)
            for branch in reversed(branches):
                assert isinstance(branch, Ask)
                chain = Now(branch.ref, branch.threshold, guarded, chain, pos=agent.pos)
            result = chain
        return result

    def _watch(self, agent: Agent, signal: ConstraintRef, threshold: Threshold, orelse: Agent) -> Agent:
        # pylint: disable=too-many-return-statements
        def watch(inner: Agent) -> Agent:
            return self._watch(inner, signal, threshold, orelse)

        def guard(inner: Agent) -> Agent:
            return Now(signal, threshold, orelse, inner, pos=agent.pos)

        if isinstance(agent, Success):
            return agent
        if isinstance(agent, (Tell, Ask)):
            return guard(replace(agent, cont=watch(agent.cont)))
        if isinstance(agent, Sum):
            return guard(replace(agent, branches=tuple(replace(branch, cont=watch(branch.cont))
                                                       for branch in agent.branches)))
        if isinstance(agent, Now):
            return replace(agent, then=watch(agent.then), orelse=watch(agent.orelse))
        if isinstance(agent, Parallel):
            return replace(agent, left=watch(agent.left), right=watch(agent.right))
        if isinstance(agent, Exists):
            watched = set(signal.constraint.support) | free_vars(orelse)
            watched |= free_vars(Now(signal, threshold, Success(), Success()))
            if agent.var in watched:
                raise ExpansionError(f"cannot watch '{signal.name}' across the hiding of '{agent.var.name}'")
            return replace(agent, body=watch(agent.body))
        if isinstance(agent, Call):
            return guard(replace(agent, name=self._watched_copy(agent.name, signal, threshold, orelse)))
        raise ExpansionError(f"'{type(agent).__name__.lower()}' cannot be watched")

    def _watched_copy(self, name: str, signal: ConstraintRef, threshold: Threshold, orelse: Agent) -> str:
        key = (name, signal, threshold, orelse)
        copy = self._copies.get(key)
        if copy is not None:
            return copy
        source = self.body(name)
        base = _WATCH_INDEX.sub('', name)
        copy = f"{base}{WATCH_SUFFIX}{self._next_index}"
        self._next_index += 1
        self._copies[key] = copy
        formals = self._formals[name]
        self._formals[copy] = formals
        logger.debug(f"Procedure copy {copy} of {name} watching {signal.name}")
        slot = len(self.generated)
        self.generated.append(ProcDecl(copy, formals, Success()))
        body = self._watch(source, signal, threshold, orelse)
        self._bodies[copy] = body
        self.generated[slot] = ProcDecl(copy, formals, body)
        return copy


def expand_idioms(program: Program, expander: Optional[IdiomExpander] = None) -> Program:
    """Program with every idiom replaced by core agents.

    :param program: parsed program
    :param expander: expander to use, a new one by default
    :return: program whose procedures include the watchdog copies
    """
    expander = expander or IdiomExpander(program)
    procedures = [ProcDecl(proc.name, proc.formals, expander.body(proc.name)) for proc in program.procedures]
    main = expander.expand(program.main)
    procedures.extend(expander.generated)
    logger.debug(f"Expanded {program.source or 'program'}: {len(expander.generated)} procedure copies")
    return replace(program, procedures=tuple(procedures), main=main)
