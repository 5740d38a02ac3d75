#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Reactive sequences of tsccp: operational sets, semantic operators and the compositional denotation."""

from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..constraint import SoftConstraint, Variable
from ..engine import mp as engine_mp
from ..lang import (Agent, Ask, Call, Exists, FreshNames, Now, Parallel, Program, Success, Sum, Tell, Threshold,
                    instantiate_call, is_success_shape, substitute, zero_threshold)
from .exceptions import TracesError
from .sets import Deferred, Enumeration, SequenceSet, Step, materialize

# guard constraint, threshold, set of the sequences after the guard holds
Branch = Tuple[SoftConstraint, Threshold, SequenceSet]


def _one(store: SoftConstraint) -> SoftConstraint:
    return SoftConstraint.one(store.semiring)


def _ready(store: SoftConstraint, constraint: SoftConstraint, threshold: Threshold) -> bool:
    return store.entails(constraint) and threshold.admits(store)


# ----- operational sets ----------------------------------------------------------------------------------------------
class OperationalSet(SequenceSet):
    """Sequences generated by the transition system: a step when one exists, a stuttering step otherwise."""

    def __init__(self, program: Program, agent: Agent, fresh: FreshNames,
                 table: Optional[Dict[Tuple[Agent, bool], 'OperationalSet']] = None, nullable: bool = False) -> None:
        """Initialize the set.

        :param program: expanded tsccp program
        :param agent: agent the sequences start from
        :param fresh: names for hiding, shared by every set of one enumeration
        :param table: sets already built, by agent
        :param nullable: the agent already stuttered as a success agent
        """
        super().__init__()
        self.program = program
        self.agent = agent
        self.fresh = fresh
        self.table = {} if table is None else table
        self.nullable = nullable

    def _set(self, agent: Agent, nullable: bool = False) -> 'OperationalSet':
        key = (agent, nullable)
        if key not in self.table:
            self.table[key] = OperationalSet(self.program, agent, self.fresh, self.table, nullable)
        return self.table[key]

    def _steps(self, store: SoftConstraint) -> List[Step]:
        results = engine_mp.transitions(self.program, self.agent, store, self.fresh)
        if results:
            return [(None, result.delta, self._set(result.agent)) for result in results]
        return [(None, _one(store), self._set(self.agent, nullable=is_success_shape(self.agent)))]


# ----- semantic operators --------------------------------------------------------------------------------------------
class _SuccessSet(SequenceSet):
    def __init__(self, nullable: bool = False) -> None:
        super().__init__()
        self.nullable = nullable
        self._rest = self if nullable else None

    def _steps(self, store: SoftConstraint) -> List[Step]:
        if self._rest is None:
            self._rest = _SuccessSet(nullable=True)
        return [(None, _one(store), self._rest)]


def sem_success() -> SequenceSet:
    """Non-empty sequences of stuttering steps."""
    return _SuccessSet()


class _TellSet(SequenceSet):
    def __init__(self, constraint: SoftConstraint, threshold: Threshold, rest: SequenceSet) -> None:
        super().__init__()
        self.constraint, self.threshold, self.rest = constraint, threshold, rest

    def _steps(self, store: SoftConstraint) -> List[Step]:
        if not self.threshold.admits(store.combine(self.constraint)):
            return []
        return [(None, self.constraint, self.rest)]


def sem_tell(constraint: SoftConstraint, threshold: Threshold, rest: SequenceSet) -> SequenceSet:
    """Sequences adding `constraint` at once, when the threshold admits the result, then continuing in `rest`."""
    return _TellSet(constraint, threshold, rest)


class _SumSet(SequenceSet):
    def __init__(self, branches: Sequence[Branch]) -> None:
        super().__init__()
        self.branches = tuple(branches)

    def _steps(self, store: SoftConstraint) -> List[Step]:
        ready = [rest for constraint, threshold, rest in self.branches if _ready(store, constraint, threshold)]
        if not ready:
            return [(None, _one(store), self)]
        return [(None, _one(store), rest) for rest in ready]


def sem_sum(branches: Sequence[Branch]) -> SequenceSet:
    """Stuttering steps while no guard holds, one more on a store where a guard holds, then that branch."""
    return _SumSet(branches)


class _ParallelSet(SequenceSet):
    def __init__(self, left: SequenceSet, right: SequenceSet) -> None:
        super().__init__()
        self.left, self.right = left, right
        self.nullable = left.nullable and right.nullable

    def _steps(self, store: SoftConstraint) -> List[Step]:
        return [(None, left_delta.combine(right_delta), _ParallelSet(left_rest, right_rest))
                for _, left_delta, left_rest in self.left.steps(store)
                for _, right_delta, right_rest in self.right.steps(store)]


def sem_parallel(left: SequenceSet, right: SequenceSet) -> SequenceSet:
    """Pairs of sequences of equal length on the same assumptions, contributions combined per time-unit."""
    return _ParallelSet(left, right)


class _NowSet(SequenceSet):
    def __init__(self, constraint: SoftConstraint, threshold: Threshold, then: SequenceSet,
                 orelse: SequenceSet) -> None:
        super().__init__()
        self.constraint, self.threshold, self.then, self.orelse = constraint, threshold, then, orelse

    def _steps(self, store: SoftConstraint) -> List[Step]:
        if not self.threshold.admits(store):
            return []
        return (self.then if store.entails(self.constraint) else self.orelse).steps(store)


def sem_now(constraint: SoftConstraint, threshold: Threshold, then: SequenceSet, orelse: SequenceSet) -> SequenceSet:
    """Sequences of `then` or `orelse` chosen by the first store, which the threshold must admit."""
    return _NowSet(constraint, threshold, then, orelse)


def sem_exists(var: Variable, body: Callable[[Variable], SequenceSet], fresh: FreshNames) -> SequenceSet:
    """Sequences of the body with `var` replaced by a new variable.

    :param var: local variable
    :param body: set of the body for a given name of the local variable
    :param fresh: source of new names
    """
    return Deferred(lambda: body(fresh.fresh(var)))


# ----- denotation ----------------------------------------------------------------------------------------------------
class Denotation:
    """Compositional sequence sets of the agents of one program; calls unfold when enumeration reaches them."""

    def __init__(self, program: Program, fresh: FreshNames) -> None:
        """Initialize the denotation.

        :param program: expanded tsccp program
        :param fresh: names for hiding and parameter passing
        """
        self.program = program
        self.fresh = fresh
        self.one = SoftConstraint.one(program.semiring)

    def __call__(self, agent: Agent) -> SequenceSet:
        """Set of `agent`."""
        # pylint: disable=too-many-return-statements
        if isinstance(agent, Success):
            return sem_success()
        if isinstance(agent, Tell):
            return sem_tell(agent.ref.constraint, agent.threshold, self(agent.cont))
        if isinstance(agent, Ask):
            return sem_sum([(agent.ref.constraint, agent.threshold, self(agent.cont))])
        if isinstance(agent, Sum):
            branches = []
            for branch in agent.branches:
                if not isinstance(branch, Ask):
                    raise TracesError(f"choice branch {type(branch).__name__}")
                branches.append((branch.ref.constraint, branch.threshold, self(branch.cont)))
            return sem_sum(branches)
        if isinstance(agent, Parallel):
            return sem_parallel(self(agent.left), self(agent.right))
        if isinstance(agent, Now):
            return sem_now(agent.ref.constraint, agent.threshold, self(agent.then), self(agent.orelse))
        if isinstance(agent, Exists):
            return sem_exists(agent.var, lambda var: self(substitute(agent.body, {agent.var.name: var}, self.fresh)),
                              self.fresh)
        if isinstance(agent, Call):
            body = Deferred(lambda: self(instantiate_call(self.program, agent.name, agent.actuals, self.fresh)))
            return sem_sum([(self.one, zero_threshold(self.program.semiring), body)])
        raise TracesError(f"no tsccp denotation for {type(agent).__name__}")


def _start(program: Program, agent: Optional[Agent]) -> Tuple[Program, Agent, FreshNames]:
    program = engine_mp.prepare(program)
    agent = program.main if agent is None else agent
    return program, agent, FreshNames.beyond(program.main, agent)


def enumerate_R(program: Program, agent: Optional[Agent] = None, pool: Sequence[SoftConstraint] = (),
                maxlen: int = 8, connected: bool = False, state_budget: int = 200000) -> Enumeration:
    """Successful reactive sequences generated by the transition system.

    :param program: tsccp program
    :param agent: agent of the program, main by default
    :param pool: constraints the environment may add, 1 is always included
    :param maxlen: length bound
    :param connected: keep only sequences where the environment adds nothing
    :param state_budget: maximal number of expansions
    """
    program, agent, fresh = _start(program, agent)
    pool = list(pool) or [SoftConstraint.one(program.semiring)]
    return materialize(OperationalSet(program, agent, fresh), pool, maxlen, connected=connected,
                       state_budget=state_budget)


def denote_mp(program: Program, agent: Optional[Agent] = None, pool: Sequence[SoftConstraint] = (),
              maxlen: int = 8, connected: bool = False, state_budget: int = 200000) -> Enumeration:
    """Reactive sequences of the compositional denotation, bounded like `enumerate_R`."""
    program, agent, fresh = _start(program, agent)
    pool = list(pool) or [SoftConstraint.one(program.semiring)]
    return materialize(Denotation(program, fresh)(agent), pool, maxlen, connected=connected,
                       state_budget=state_budget)
