#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Interpreter of tsccp-i: one computational step per tick while time passes for every agent.

Two transition systems are provided. The plain one fires a parallel component alone when its
sibling cannot let time pass; the primed one gives every inactive agent a time step instead.
"""

import logging
from dataclasses import replace
from typing import Callable, Dict, List, Optional, Tuple

from ..constraint import SoftConstraint
from ..lang import (TSCCP_I, Agent, Ask, Askp, Call, Exists, FreshNames, Parallel, Program, Success, Sum, Tell,
                    expand_idioms, fresh_rename, instantiate_call, is_success_shape)
from .common import (Event, Exploration, LabeledTransition, Observables, Path, PriorityScheduler, RunOutcome,
                     RunStatus, Scheduler, TickRecord, format_path, initial_configuration)
from .exceptions import DialectMismatchError, UnsupportedAgentError
from .explore import Successor, explore_states, observables_of
from .rules import Label, RuleId

logger = logging.getLogger("ENGINE:IL")

# (valued rule, rule with a cut constraint) of every askp case
_ASKP_RULES = {
    'then': (RuleId.Q10, RuleId.Q15),
    'else': (RuleId.Q11, RuleId.Q16),
    'check': (RuleId.Q12, RuleId.Q17),
    'tick': (RuleId.Q13, RuleId.Q18),
    'expired': (RuleId.Q14, RuleId.Q19),
    'expired_idle': (RuleId.Q14P, RuleId.Q19P),
}


def _canonical(transitions: List[LabeledTransition]) -> List[LabeledTransition]:
    unique: Dict[Tuple[int, Agent, SoftConstraint], LabeledTransition] = {}
    for transition in transitions:
        unique.setdefault((transition.label, transition.agent, transition.delta), transition)
    return sorted(unique.values(), key=lambda t: (t.label != Label.OMEGA, t.signature))


class _Transitions:
    """Enumerates the labeled transitions of the agents of one tick."""

    def __init__(self, program: Program, store: SoftConstraint, fresh: FreshNames, prime: bool) -> None:
        self.program = program
        self.store = store
        self.fresh = fresh
        self.prime = prime
        self.one = SoftConstraint.one(program.semiring)

    def _move(self, label: int, agent: Agent, rule: int, path: Path, delta: Optional[SoftConstraint] = None,
              told: Optional[str] = None, source: Optional[Agent] = None) -> LabeledTransition:
        pos = getattr(source, 'pos', None)
        event = Event(rule, path, told, label, pos)
        return LabeledTransition(label, agent, self.one if delta is None else delta, rule, (event,))

    def _idle(self, agent: Agent, rule: int, path: Path) -> List[LabeledTransition]:
        return [self._move(Label.TAU, agent, rule, path, source=agent)] if self.prime else []

    def derive(self, agent: Agent, path: Path) -> List[LabeledTransition]:
        """All transitions of `agent` found at `path` of the parallel tree."""
        # pylint: disable=too-many-return-statements
        if isinstance(agent, Success):
            return self._idle(agent, RuleId.Q0P, path)
        if isinstance(agent, Tell):
            valued = agent.threshold.valued
            found = self._idle(agent, RuleId.Q1P if valued else RuleId.Q2P, path)
            if agent.threshold.admits(self.store.combine(agent.ref.constraint)):
                found.append(self._move(Label.OMEGA, agent.cont, RuleId.Q1 if valued else RuleId.Q2, path,
                                        agent.ref.constraint, agent.ref.name, agent))
            return found
        if isinstance(agent, Ask):
            valued = agent.threshold.valued
            found = self._idle(agent, RuleId.Q3P if valued else RuleId.Q4P, path)
            if self.store.entails(agent.ref.constraint) and agent.threshold.admits(self.store):
                found.append(self._move(Label.OMEGA, agent.cont, RuleId.Q3 if valued else RuleId.Q4, path,
                                        source=agent))
            return found
        if isinstance(agent, Sum):
            return self._choice(agent, path)
        if isinstance(agent, Parallel):
            return self._parallel(agent, path)
        if isinstance(agent, Exists):
            body, _ = fresh_rename(agent.body, agent.var, self.fresh)
            return [replace(t, rule=RuleId.Q9,
                            events=(Event(RuleId.Q9, path, label=t.label, pos=agent.pos),) + t.events)
                    for t in self.derive(body, path)]
        if isinstance(agent, Call):
            body = instantiate_call(self.program, agent.name, agent.actuals, self.fresh)
            found = [self._move(Label.OMEGA, body, RuleId.Q8, path, source=agent)]
            if self.prime:
                found.append(self._move(Label.TAU, body, RuleId.Q8P, path, source=agent))
            return found
        if isinstance(agent, Askp):
            return self._askp(agent, path)
        raise UnsupportedAgentError(f"{type(agent).__name__} in a tsccp-i computation")

    def _choice(self, agent: Sum, path: Path) -> List[LabeledTransition]:
        found = self._idle(agent, RuleId.Q7P, path)
        for branch in agent.branches:
            if not isinstance(branch, Ask):
                raise UnsupportedAgentError(f"choice branch {type(branch).__name__}")
            if self.store.entails(branch.ref.constraint) and branch.threshold.admits(self.store):
                found.append(self._move(Label.OMEGA, branch.cont, RuleId.Q7, path, source=branch))
        return found

    def _askp(self, agent: Askp, path: Path) -> List[LabeledTransition]:
        kind = 0 if agent.threshold.valued else 1
        if agent.ticks == 0:
            found = [self._move(Label.OMEGA, agent.orelse, _ASKP_RULES['expired'][kind], path, source=agent)]
            if self.prime:
                found.append(self._move(Label.TAU, agent, _ASKP_RULES['expired_idle'][kind], path, source=agent))
            return found
        later = replace(agent, ticks=agent.ticks - 1)
        if not agent.threshold.admits(self.store):
            found = [self._move(Label.OMEGA, agent.orelse, _ASKP_RULES['else'][kind], path, source=agent)]
        elif self.store.entails(agent.ref.constraint):
            found = [self._move(Label.OMEGA, agent.then, _ASKP_RULES['then'][kind], path, source=agent)]
        else:
            found = [self._move(Label.OMEGA, later, _ASKP_RULES['check'][kind], path, source=agent)]
        found.append(self._move(Label.TAU, later, _ASKP_RULES['tick'][kind], path, source=agent))
        return found

    def _parallel(self, agent: Parallel, path: Path) -> List[LabeledTransition]:
        lefts = self.derive(agent.left, path + (0,))
        rights = self.derive(agent.right, path + (1,))
        left_ticks = [t for t in lefts if t.label == Label.TAU]
        right_ticks = [t for t in rights if t.label == Label.TAU]
        found = []
        pairs = [(left, right) for left in lefts for right in right_ticks]
        pairs += [(left, right) for left in left_ticks for right in rights if right.label == Label.OMEGA]
        for left, right in pairs:
            label = Label.OMEGA if Label.OMEGA in (left.label, right.label) else Label.TAU
            found.append(LabeledTransition(label, replace(agent, left=left.agent, right=right.agent),
                                           left.delta.combine(right.delta), RuleId.Q5, left.events + right.events))
        if not self.prime:
            if not right_ticks:
                found.extend(replace(t, agent=replace(agent, left=t.agent), rule=RuleId.Q6) for t in lefts)
            if not left_ticks:
                found.extend(replace(t, agent=replace(agent, right=t.agent), rule=RuleId.Q6) for t in rights)
        return _canonical(found)


def prepare(program: Program) -> Program:
    """Program with idioms expanded, checked to be a tsccp-i program.

    :raises DialectMismatchError: the program is written in another dialect
    """
    if program.dialect != TSCCP_I:
        raise DialectMismatchError(f"interleaving runs tsccp-i programs, not {program.dialect}")
    return expand_idioms(program)


def transitions(program: Program, agent: Agent, store: SoftConstraint,
                fresh: Optional[FreshNames] = None) -> List[LabeledTransition]:
    """Every transition of the plain system, computational steps first then by derivation.

    :param program: expanded program providing the declarations
    :param agent: core agent
    :param store: current store
    :param fresh: source of names for hiding, by default beyond every name in use
    :return: canonically ordered transitions without duplicates
    """
    fresh = fresh or FreshNames.beyond(agent, store)
    return _canonical(_Transitions(program, store, fresh, prime=False).derive(agent, ()))


def transitions_prime(program: Program, agent: Agent, store: SoftConstraint,
                      fresh: Optional[FreshNames] = None) -> List[LabeledTransition]:
    """Every transition of the system where inactive agents let time pass."""
    fresh = fresh or FreshNames.beyond(agent, store)
    return _canonical(_Transitions(program, store, fresh, prime=True).derive(agent, ()))


def run_il(program: Program, scheduler: Optional[Scheduler] = None, max_steps: int = 100,
           initial_store: Optional[SoftConstraint] = None, prime: bool = False) -> RunOutcome:
    """Run the main agent picking one transition per tick.

    :param program: tsccp-i program, idioms are expanded here
    :param scheduler: picks the transition, `PriorityScheduler` by default
    :param max_steps: maximal number of ticks
    :param initial_store: start store, 1 by default; any other store makes the run non-standard
    :param prime: use the system where inactive agents let time pass
    :return: outcome with one labeled record per tick
    """
    program = prepare(program)
    scheduler = scheduler or PriorityScheduler()
    enumerate_transitions = transitions_prime if prime else transitions
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
        found = enumerate_transitions(program, agent, store)
        if not found:
            status = RunStatus.SUSPENDED
            break
        mark = len(scheduler.decisions)
        chosen = found[scheduler.choose(found)]
        after = store.combine(chosen.delta)
        outcome.ticks.append(TickRecord(outcome.clock, store, after, chosen.delta, chosen.events, chosen.label,
                                        chosen.rule, tuple(scheduler.decisions[mark:])))
        logger.debug(f"t={outcome.clock} {Label.name(chosen.label)}: "
                     f"{' '.join(f'{e.tag}@{format_path(e.path)}' for e in chosen.events)}")
        agent, store = chosen.agent, after
        outcome.clock += 1
    outcome.status, outcome.agent, outcome.store = status, agent, store
    logger.info(f"Run {outcome.status_tag} at clock {outcome.clock}")
    return outcome


def _successors(program: Program, prime: bool) -> Callable[[Agent, SoftConstraint], List[Successor]]:
    enumerate_transitions = transitions_prime if prime else transitions

    def successors(agent: Agent, store: SoftConstraint) -> List[Successor]:
        return [(t.agent, store.combine(t.delta), (('-', index),))
                for index, t in enumerate(enumerate_transitions(program, agent, store)) if t.label == Label.OMEGA]

    return successors


def explore(program: Program, max_steps: int = 100, state_budget: int = 20000, prime: bool = False) -> Exploration:
    """Every sequence of computational steps of the program, up to the budgets.

    Witnesses index the full transition lists, so `ReplayScheduler` reproduces them with `run_il`.

    :param prime: explore the system where inactive agents let time pass
    """
    program = prepare(program)
    return explore_states(initial_configuration(program), _successors(program, prime), max_steps, state_budget)


def observables_il(program: Program, max_steps: int = 100, state_budget: int = 20000) -> Observables:
    """Projected final stores of the successful computations of the plain system."""
    program = prepare(program)
    return observables_of(program.main, explore(program, max_steps, state_budget))


def observables_il_prime(program: Program, max_steps: int = 100, state_budget: int = 20000) -> Observables:
    """Projected final stores of the successful computations where inactive agents let time pass."""
    program = prepare(program)
    return observables_of(program.main, explore(program, max_steps, state_budget, prime=True))
