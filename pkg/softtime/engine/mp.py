#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Interpreter of tsccp under maximal parallelism."""

import logging
from dataclasses import replace
from typing import Callable, List, Optional, Sequence

from ..constraint import SoftConstraint
from ..lang import (TSCCP, Agent, Ask, Call, Exists, FreshNames, Now, Parallel, Program, Success, Sum, Tell,
                    expand_idioms, fresh_rename, instantiate_call, is_success_shape)
from .common import (Chooser, Event, Exploration, FirstChooser, Observables, Path, RunOutcome, RunStatus, StepResult,
                     TickRecord, format_path, initial_configuration)
from .exceptions import DialectMismatchError, UnsupportedAgentError
from .explore import Successor, explore_states, observables_of
from .rules import RuleId, now_rule

logger = logging.getLogger("ENGINE:MP")

# given the path of a choice and its enabled branches, the branches to follow
Pick = Callable[[str, Sequence[int]], Sequence[int]]


def _first(path: str, enabled: Sequence[int]) -> Sequence[int]:
    return enabled[:1]


def _every(path: str, enabled: Sequence[int]) -> Sequence[int]:
    return enabled


class _Derivation:
    """Derives the transitions of the agents of one tick; the store is fixed during the tick."""

    def __init__(self, program: Program, store: SoftConstraint, pick: Pick, fresh: FreshNames) -> None:
        self.program = program
        self.store = store
        self.pick = pick
        self.fresh = fresh
        self.one = SoftConstraint.one(program.semiring)

    def _ask_enabled(self, agent: Ask) -> bool:
        return self.store.entails(agent.ref.constraint) and agent.threshold.admits(self.store)

    def derive(self, agent: Agent, path: Path) -> List[StepResult]:
        """All steps of `agent`, restricted by `pick` at every choice."""
        # pylint: disable=too-many-return-statements
        if isinstance(agent, Success):
            return []
        if isinstance(agent, Tell):
            if not agent.threshold.admits(self.store.combine(agent.ref.constraint)):
                return []
            rule = RuleId.R1 if agent.threshold.valued else RuleId.R2
            event = Event(rule, path, agent.ref.name, pos=agent.pos)
            return [StepResult(agent.cont, agent.ref.constraint, (event,))]
        if isinstance(agent, Ask):
            if not self._ask_enabled(agent):
                return []
            rule = RuleId.R3 if agent.threshold.valued else RuleId.R4
            return [StepResult(agent.cont, self.one, (Event(rule, path, pos=agent.pos),))]
        if isinstance(agent, Sum):
            return self._choice(agent, path)
        if isinstance(agent, Parallel):
            return self._parallel(agent, path)
        if isinstance(agent, Exists):
            body, _ = fresh_rename(agent.body, agent.var, self.fresh)
            event = Event(RuleId.R16, path, pos=agent.pos)
            return [replace(step, events=(event,) + step.events, rule=RuleId.R16) for step in self.derive(body, path)]
        if isinstance(agent, Call):
            body = instantiate_call(self.program, agent.name, agent.actuals, self.fresh)
            return [StepResult(body, self.one, (Event(RuleId.R17, path, pos=agent.pos),))]
        if isinstance(agent, Now):
            return self._now(agent, path)
        raise UnsupportedAgentError(f"{type(agent).__name__} in a tsccp computation")

    def _choice(self, agent: Sum, path: Path) -> List[StepResult]:
        enabled = []
        for index, branch in enumerate(agent.branches):
            if not isinstance(branch, Ask):
                raise UnsupportedAgentError(f"choice branch {type(branch).__name__}")
            if self._ask_enabled(branch):
                enabled.append(index)
        if not enabled:
            return []
        where = format_path(path)
        steps = []
        for index in self.pick(where, enabled):
            branch = agent.branches[index]
            assert isinstance(branch, Ask)
            event = Event(RuleId.R7, path, pos=branch.pos)
            steps.append(StepResult(branch.cont, self.one, (event,), ((where, index),)))
        return steps

    def _parallel(self, agent: Parallel, path: Path) -> List[StepResult]:
        lefts = self.derive(agent.left, path + (0,))
        rights = self.derive(agent.right, path + (1,))
        if lefts and rights:
            return [
                StepResult(replace(agent, left=left.agent, right=right.agent), left.delta.combine(right.delta),
                           left.events + right.events, left.decisions + right.decisions, RuleId.R5)
                for left in lefts for right in rights
            ]
        if lefts:
            return [replace(left, agent=replace(agent, left=left.agent), rule=RuleId.R6) for left in lefts]
        return [replace(right, agent=replace(agent, right=right.agent), rule=RuleId.R6) for right in rights]

    def _now(self, agent: Now, path: Path) -> List[StepResult]:
        if not agent.threshold.admits(self.store):
            return []
        entailed = self.store.entails(agent.ref.constraint)
        branch = agent.then if entailed else agent.orelse
        steps = self.derive(branch, path)
        event = Event(now_rule(agent.threshold.valued, entailed, bool(steps)), path, pos=agent.pos)
        if steps:
            return [replace(step, events=(event,) + step.events, rule=event.rule) for step in steps]
        return [StepResult(branch, self.one, (event,))]


def prepare(program: Program) -> Program:
    """Program with idioms expanded, checked to be a tsccp program.

    :raises DialectMismatchError: the program is written in another dialect
    """
    if program.dialect != TSCCP:
        raise DialectMismatchError(f"maximal parallelism runs tsccp programs, not {program.dialect}")
    return expand_idioms(program)


def step(program: Program, agent: Agent, store: SoftConstraint, chooser: Chooser,
         fresh: Optional[FreshNames] = None) -> Optional[StepResult]:
    """One tick of maximal parallelism.

    :param program: expanded program providing the declarations
    :param agent: core agent
    :param store: current store
    :param chooser: resolves every choice with several enabled branches
    :param fresh: source of names for hiding, by default beyond every name in use
    :return: step, None when the agent is suspended
    """
    fresh = fresh or FreshNames.beyond(agent, store)
    steps = _Derivation(program, store, lambda path, enabled: [chooser.choose(path, enabled)], fresh).derive(agent, ())
    return steps[0] if steps else None


def can_step(program: Program, agent: Agent, store: SoftConstraint) -> bool:
    """True iff some step exists."""
    return bool(_Derivation(program, store, _first, FreshNames.beyond(agent, store)).derive(agent, ()))


def transitions(program: Program, agent: Agent, store: SoftConstraint,
                fresh: Optional[FreshNames] = None) -> List[StepResult]:
    """Steps for every combination of choices, in document order of the decisions."""
    fresh = fresh or FreshNames.beyond(agent, store)
    return _Derivation(program, store, _every, fresh).derive(agent, ())


def run(program: Program, chooser: Optional[Chooser] = None, max_steps: int = 100,
        initial_store: Optional[SoftConstraint] = None) -> RunOutcome:
    """Run the main agent until it succeeds, suspends or exhausts the step budget.

    :param program: tsccp program, idioms are expanded here
    :param chooser: resolves choices, first enabled branch by default
    :param max_steps: maximal number of ticks
    :param initial_store: start store, 1 by default; any other store makes the run non-standard
    :return: outcome with one record per tick
    """
    program = prepare(program)
    chooser = chooser or FirstChooser()
    start = initial_configuration(program, initial_store)
    agent, store = start.agent, start.store
    outcome = RunOutcome(RunStatus.SUCCESS, agent, store, 0,
                         nonstandard=store != SoftConstraint.one(program.semiring))
    while True:
        if is_success_shape(agent):
            status = RunStatus.SUCCESS
            break
        if outcome.clock >= max_steps:
            status = RunStatus.BUDGET
            break
        mark = len(chooser.decisions)
        result = step(program, agent, store, chooser)
        if result is None:
            status = RunStatus.SUSPENDED
            break
        after = store.combine(result.delta)
        outcome.ticks.append(TickRecord(outcome.clock, store, after, result.delta, result.events,
                                        decisions=tuple(chooser.decisions[mark:]), rule=result.root_rule))
        logger.debug(f"t={outcome.clock}: {' '.join(f'{e.tag}@{format_path(e.path)}' for e in result.events)}")
        agent, store = result.agent, after
        outcome.clock += 1
    outcome.status, outcome.agent, outcome.store = status, agent, store
    logger.info(f"Run {outcome.status_tag} at clock {outcome.clock}")
    return outcome


def _successors(program: Program) -> Callable[[Agent, SoftConstraint], List[Successor]]:
    def successors(agent: Agent, store: SoftConstraint) -> List[Successor]:
        return [(result.agent, store.combine(result.delta), result.decisions)
                for result in transitions(program, agent, store)]

    return successors


def explore_mp(program: Program, max_steps: int = 100, state_budget: int = 20000) -> Exploration:
    """Every resolution of the choices of the program, up to the budgets.

    :return: terminals with a witness decision log each
    """
    program = prepare(program)
    return explore_states(initial_configuration(program), _successors(program), max_steps, state_budget)


def observables_mp(program: Program, max_steps: int = 100, state_budget: int = 20000) -> Observables:
    """Final stores of the successful computations projected onto the free variables of main."""
    program = prepare(program)
    exploration = explore_states(initial_configuration(program), _successors(program), max_steps, state_budget)
    return observables_of(program.main, exploration)
