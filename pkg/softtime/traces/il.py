#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Labeled reactive sequences of tsccp-i.

Every set offers, besides its computational steps, a time step that leaves the store alone; a
sequence closes with a computational stuttering step.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..constraint import SoftConstraint, Variable
from ..engine import Label
from ..engine import il as engine_il
from ..lang import (Agent, Ask, Askp, Call, Exists, FreshNames, Parallel, Program, Success, Sum, Tell, Threshold,
                    instantiate_call, is_success_shape, substitute, zero_threshold)
from .exceptions import TracesError
from .sets import EPSILON, Deferred, Enumeration, SequenceSet, Step, materialize

Branch = Tuple[SoftConstraint, Threshold, SequenceSet]


def _one(store: SoftConstraint) -> SoftConstraint:
    return SoftConstraint.one(store.semiring)


class _TimedSet(SequenceSet):
    """Set whose sequences may always start with a time step back into the same set."""

    def _computational(self, store: SoftConstraint) -> List[Step]:
        raise NotImplementedError()

    def _steps(self, store: SoftConstraint) -> List[Step]:
        return self._computational(store) + [(Label.TAU, _one(store), self)]


# ----- operational sets ----------------------------------------------------------------------------------------------
class OperationalSet(SequenceSet):
    """Labeled sequences generated by a transition system of tsccp-i, closed on success-shaped agents."""

    def __init__(self, program: Program, agent: Agent, fresh: FreshNames, prime: bool = True,
                 table: Optional[Dict[Agent, 'OperationalSet']] = None) -> None:
        """Initialize the set.

        :param program: expanded tsccp-i program
        :param agent: agent the sequences start from
        :param fresh: names for hiding, shared by every set of one enumeration
        :param prime: use the system where inactive agents let time pass
        :param table: sets already built, by agent
        """
        super().__init__()
        self.program = program
        self.agent = agent
        self.fresh = fresh
        self.prime = prime
        self.table = {} if table is None else table

    def _set(self, agent: Agent) -> 'OperationalSet':
        if agent not in self.table:
            self.table[agent] = OperationalSet(self.program, agent, self.fresh, self.prime, self.table)
        return self.table[agent]

    def _steps(self, store: SoftConstraint) -> List[Step]:
        enumerate_transitions = engine_il.transitions_prime if self.prime else engine_il.transitions
        found: List[Step] = [(t.label, t.delta, self._set(t.agent))
                             for t in enumerate_transitions(self.program, self.agent, store, self.fresh)]
        if is_success_shape(self.agent):
            found.append((Label.OMEGA, _one(store), EPSILON))
        return found


# ----- semantic operators --------------------------------------------------------------------------------------------
class _SuccessSet(_TimedSet):
    def _computational(self, store: SoftConstraint) -> List[Step]:
        return [(Label.OMEGA, _one(store), EPSILON)]


def bar_success() -> SequenceSet:
    """Time steps closed by one computational stuttering step."""
    return _SuccessSet()


class _TellSet(_TimedSet):
    def __init__(self, constraint: SoftConstraint, threshold: Threshold, rest: SequenceSet) -> None:
        super().__init__()
        self.constraint, self.threshold, self.rest = constraint, threshold, rest

    def _computational(self, store: SoftConstraint) -> List[Step]:
        if not self.threshold.admits(store.combine(self.constraint)):
            return []
        return [(Label.OMEGA, self.constraint, self.rest)]


def bar_tell(constraint: SoftConstraint, threshold: Threshold, rest: SequenceSet) -> SequenceSet:
    """Time steps, then a computational step adding `constraint` when the threshold admits the result."""
    return _TellSet(constraint, threshold, rest)


class _SumSet(_TimedSet):
    def __init__(self, branches: Sequence[Branch]) -> None:
        super().__init__()
        self.branches = tuple(branches)

    def _computational(self, store: SoftConstraint) -> List[Step]:
        return [(Label.OMEGA, _one(store), rest) for constraint, threshold, rest in self.branches
                if store.entails(constraint) and threshold.admits(store)]


def bar_sum(branches: Sequence[Branch]) -> SequenceSet:
    """Time steps, then a computational step into a branch whose guard holds."""
    return _SumSet(branches)


class _ParallelSet(SequenceSet):
    def __init__(self, left: SequenceSet, right: SequenceSet) -> None:
        super().__init__()
        self.left, self.right = left, right
        self.nullable = left.nullable and right.nullable

    def _steps(self, store: SoftConstraint) -> List[Step]:
        found: List[Step] = []
        for left_label, left_delta, left_rest in self.left.steps(store):
            for right_label, right_delta, right_rest in self.right.steps(store):
                if left_label == Label.OMEGA and right_label == Label.OMEGA:
                    # both close together
                    if left_rest.nullable and right_rest.nullable and left_delta == right_delta == _one(store):
                        found.append((Label.OMEGA, left_delta, EPSILON))
                    continue
                label = Label.OMEGA if Label.OMEGA in (left_label, right_label) else Label.TAU
                found.append((label, left_delta.combine(right_delta), _ParallelSet(left_rest, right_rest)))
        return found


def bar_parallel(left: SequenceSet, right: SequenceSet) -> SequenceSet:
    """Interleaving: at most one side makes a computational step per time-unit, the other lets time pass."""
    return _ParallelSet(left, right)


class _AskpSet(_TimedSet):
    # pylint: disable=too-many-arguments
    def __init__(self, ticks: int, constraint: SoftConstraint, threshold: Threshold, then: SequenceSet,
                 orelse: SequenceSet) -> None:
        super().__init__()
        self.ticks, self.constraint, self.threshold, self.then, self.orelse = ticks, constraint, threshold, then, orelse
        self._later: Optional[SequenceSet] = None

    @property
    def later(self) -> SequenceSet:
        """Set of the same agent one time-unit later."""
        if self.ticks == 0:
            return self
        if self._later is None:
            self._later = _AskpSet(self.ticks - 1, self.constraint, self.threshold, self.then, self.orelse)
        return self._later

    def _computational(self, store: SoftConstraint) -> List[Step]:
        if self.ticks == 0 or not self.threshold.admits(store):
            return [(Label.OMEGA, _one(store), self.orelse)]
        if store.entails(self.constraint):
            return [(Label.OMEGA, _one(store), self.then)]
        return [(Label.OMEGA, _one(store), self.later)]

    def _steps(self, store: SoftConstraint) -> List[Step]:
        return self._computational(store) + [(Label.TAU, _one(store), self.later)]


def bar_askp(ticks: int, constraint: SoftConstraint, threshold: Threshold, then: SequenceSet,
             orelse: SequenceSet) -> SequenceSet:
    """Wait up to `ticks` time-units for `constraint`; every time-unit counts, computational or not."""
    if ticks < 0:
        raise TracesError(f"negative askp bound {ticks}")
    return _AskpSet(ticks, constraint, threshold, then, orelse)


def bar_exists(var: Variable, body: Callable[[Variable], SequenceSet], fresh: FreshNames) -> SequenceSet:
    """Sequences of the body with `var` replaced by a new variable."""
    return Deferred(lambda: body(fresh.fresh(var)))


# ----- denotation ----------------------------------------------------------------------------------------------------
@dataclass
class Denotation:
    """Compositional labeled sequence sets of the agents of one tsccp-i program."""

    program: Program
    fresh: FreshNames

    def __call__(self, agent: Agent) -> SequenceSet:
        """Set of `agent`."""
        # pylint: disable=too-many-return-statements
        if isinstance(agent, Success):
            return bar_success()
        if isinstance(agent, Tell):
            return bar_tell(agent.ref.constraint, agent.threshold, self(agent.cont))
        if isinstance(agent, Ask):
            return bar_sum([(agent.ref.constraint, agent.threshold, self(agent.cont))])
        if isinstance(agent, Sum):
            branches = []
            for branch in agent.branches:
                if not isinstance(branch, Ask):
                    raise TracesError(f"choice branch {type(branch).__name__}")
                branches.append((branch.ref.constraint, branch.threshold, self(branch.cont)))
            return bar_sum(branches)
        if isinstance(agent, Parallel):
            return bar_parallel(self(agent.left), self(agent.right))
        if isinstance(agent, Askp):
            return bar_askp(agent.ticks, agent.ref.constraint, agent.threshold, self(agent.then), self(agent.orelse))
        if isinstance(agent, Exists):
            return bar_exists(agent.var, lambda var: self(substitute(agent.body, {agent.var.name: var}, self.fresh)),
                              self.fresh)
        if isinstance(agent, Call):
            body = Deferred(lambda: self(instantiate_call(self.program, agent.name, agent.actuals, self.fresh)))
            one = SoftConstraint.one(self.program.semiring)
            return bar_sum([(one, zero_threshold(self.program.semiring), body)])
        raise TracesError(f"no tsccp-i denotation for {type(agent).__name__}")


def _start(program: Program, agent: Optional[Agent]) -> Tuple[Program, Agent, FreshNames, List[SoftConstraint]]:
    program = engine_il.prepare(program)
    agent = program.main if agent is None else agent
    return program, agent, FreshNames.beyond(program.main, agent), [SoftConstraint.one(program.semiring)]


def enumerate_R_il(program: Program, agent: Optional[Agent] = None, pool: Sequence[SoftConstraint] = (),
                   maxlen: int = 8, connected: bool = False, state_budget: int = 200000,
                   prime: bool = True) -> Enumeration:
    """Successful labeled sequences generated by a transition system of tsccp-i.

    :param program: tsccp-i program
    :param agent: agent of the program, main by default
    :param pool: constraints the environment may add, 1 is always included
    :param maxlen: length bound
    :param connected: keep only sequences of computational steps where the environment adds nothing
    :param state_budget: maximal number of expansions
    :param prime: use the system where inactive agents let time pass
    """
    program, agent, fresh, default = _start(program, agent)
    return materialize(OperationalSet(program, agent, fresh, prime), list(pool) or default, maxlen, labeled=True,
                       connected=connected, state_budget=state_budget)


def denote_il(program: Program, agent: Optional[Agent] = None, pool: Sequence[SoftConstraint] = (),
              maxlen: int = 8, connected: bool = False, state_budget: int = 200000) -> Enumeration:
    """Labeled sequences of the compositional denotation, bounded like `enumerate_R_il`."""
    program, agent, fresh, default = _start(program, agent)
    return materialize(Denotation(program, fresh)(agent), list(pool) or default, maxlen, labeled=True,
                       connected=connected, state_budget=state_budget)
