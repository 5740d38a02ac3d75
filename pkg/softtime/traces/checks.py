#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Bounded checks relating the interpreters, the operational sequence sets and the compositional denotations."""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, FrozenSet, Iterable, List, Optional, Sequence

from ..constraint import SoftConstraint
from ..engine import il as engine_il
from ..engine import mp as engine_mp
from ..engine import observables_il, observables_il_prime, observables_mp
from ..lang import TSCCP, FreshNames, Parallel, Program, free_vars
from ..utils.easy_enum import Enum
from . import il as traces_il
from . import mp as traces_mp
from .exceptions import TracesError
from .sequences import normalize
from .sets import Enumeration, SequenceSet, materialize

logger = logging.getLogger("TRACES")


class Verdict(Enum):
    """Outcome of a check; values are the exit codes of the command line."""

    PASS = (0, 'pass', 'Every comparison agrees')
    FAIL = (5, 'fail', 'A complete comparison disagrees')
    INCONCLUSIVE = (6, 'inconclusive', 'A budget ran out before a disagreement was found')


def _format(item: Any) -> str:
    return item.format()


@dataclass
class Comparison:
    """Two sets that should be equal."""

    left: str
    right: str
    left_items: FrozenSet
    right_items: FrozenSet
    complete: bool = True

    @property
    def equal(self) -> bool:
        """True when both sides hold the same items."""
        return self.left_items == self.right_items

    @property
    def witness(self) -> Optional[str]:
        """First item found on one side only, prefixed with the side holding it."""
        only = [(_format(item), self.left) for item in self.left_items - self.right_items]
        only += [(_format(item), self.right) for item in self.right_items - self.left_items]
        if not only:
            return None
        text, side = min(only)
        return f"{side}: {text}"

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            'left': self.left,
            'right': self.right,
            'left_size': len(self.left_items),
            'right_size': len(self.right_items),
            'equal': self.equal,
            'complete': self.complete,
            'witness': self.witness,
        }


@dataclass
class CheckReport:
    """Comparisons made by one check and the resulting verdict."""

    property: str
    comparisons: List[Comparison] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def verdict(self) -> int:
        """Fail on any complete disagreement, inconclusive when some side is incomplete, pass otherwise."""
        if any(not comparison.equal and comparison.complete for comparison in self.comparisons):
            return Verdict.FAIL
        if any(not comparison.complete for comparison in self.comparisons):
            return Verdict.INCONCLUSIVE
        return Verdict.PASS

    @property
    def verdict_tag(self) -> str:
        """Printable verdict."""
        return Verdict.name(self.verdict)

    def add(self, comparison: Comparison) -> None:
        """Record a comparison."""
        state = 'equal' if comparison.equal else f"differ ({comparison.witness})"
        logger.info(f"{self.property}: {comparison.left} vs {comparison.right}: {state}")
        self.comparisons.append(comparison)

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            'property': self.property,
            'verdict': self.verdict_tag,
            'comparisons': [comparison.to_dict() for comparison in self.comparisons],
            'notes': list(self.notes),
        }


def _sequences(left: str, left_found: Enumeration, right: str, right_found: Enumeration, maxlen: int,
               visible: Optional[Iterable[str]] = None) -> Comparison:
    return Comparison(left, right, normalize(left_found.sequences, visible, maxlen),
                      normalize(right_found.sequences, visible, maxlen), left_found.complete and right_found.complete)


def _finals(found: Enumeration, visible: Sequence[str]) -> FrozenSet[SoftConstraint]:
    return frozenset(sequence.final.project(visible) for sequence in found.sequences)


def check_correctness(program: Program, maxlen: int = 8, state_budget: int = 200000) -> CheckReport:
    """Compare the observables of the interpreter with the operational and the compositional sequences.

    Only connected sequences take part: the environment contributes nothing, as in a computation.

    :param program: program of either dialect
    :param maxlen: length bound of the sequences; computations get one step less
    :param state_budget: budget of every enumeration and exploration
    :return: report with verdict
    """
    tsccp = program.dialect == TSCCP
    prepared = (engine_mp if tsccp else engine_il).prepare(program)
    visible = tuple(var.name for var in free_vars(prepared.main))
    report = CheckReport('correctness')
    if tsccp:
        observables = observables_mp(prepared, maxlen - 1, state_budget)
        operational = traces_mp.enumerate_R(prepared, maxlen=maxlen, connected=True, state_budget=state_budget)
        denotation = traces_mp.denote_mp(prepared, maxlen=maxlen, connected=True, state_budget=state_budget)
        computed = operational
    else:
        observables = observables_il(prepared, maxlen - 1, state_budget)
        computed = traces_il.enumerate_R_il(prepared, maxlen=maxlen, connected=True, state_budget=state_budget,
                                            prime=False)
        operational = traces_il.enumerate_R_il(prepared, maxlen=maxlen, connected=True, state_budget=state_budget)
        denotation = traces_il.denote_il(prepared, maxlen=maxlen, connected=True, state_budget=state_budget)
    # the depth bound is the horizon shared with the sequences, only the state budget leaves gaps
    report.add(Comparison('observables', 'final stores of R', observables.stores, _finals(computed, visible),
                          not observables.exhausted and computed.complete))
    report.add(_sequences('R', operational, 'D', denotation, maxlen))
    return report


def _components(prepared: Program) -> Parallel:
    if not isinstance(prepared.main, Parallel):
        raise TracesError("compositionality needs a main agent of the form A || B")
    return prepared.main


def check_compositionality(program: Program, pool: Sequence[SoftConstraint] = (), maxlen: int = 5,
                           state_budget: int = 200000) -> CheckReport:
    """Compare the sequences of `A || B` with the parallel composition of the sequences of `A` and `B`.

    :param program: program of either dialect whose main agent is a parallel composition
    :param pool: constraints the environment may add
    :param maxlen: length bound
    :param state_budget: budget of every enumeration
    :return: report with verdict
    :raises TracesError: the main agent is not a parallel composition
    """
    tsccp = program.dialect == TSCCP
    prepared = (engine_mp if tsccp else engine_il).prepare(program)
    main = _components(prepared)
    pool = list(pool) or [SoftConstraint.one(prepared.semiring)]
    fresh = FreshNames.beyond(main, *pool)
    report = CheckReport('compositionality')

    def enumerate_set(sequences: SequenceSet, connected: bool = False) -> Enumeration:
        return materialize(sequences, pool, maxlen, labeled=not tsccp, connected=connected,
                           state_budget=state_budget)

    operational: Callable[..., SequenceSet]
    if tsccp:
        operational = traces_mp.OperationalSet
        compose: Callable[[SequenceSet, SequenceSet], SequenceSet] = traces_mp.sem_parallel
        denotation = traces_mp.Denotation(prepared, fresh)(main)
    else:
        operational = traces_il.OperationalSet
        compose = traces_il.bar_parallel
        denotation = traces_il.Denotation(prepared, fresh)(main)
    whole = enumerate_set(operational(prepared, main, fresh))
    parts = enumerate_set(compose(operational(prepared, main.left, fresh), operational(prepared, main.right, fresh)))
    report.add(_sequences('R(A || B)', whole, 'R(A) || R(B)', parts, maxlen))
    if tsccp:
        report.add(_sequences('R', whole, 'D', enumerate_set(denotation), maxlen))
    else:
        # calls unfold in a time step of the transition system but wait for a computational step in D
        report.notes.append("R and D compared on connected sequences")
        report.add(_sequences('R', enumerate_set(operational(prepared, main, fresh), connected=True), 'D',
                              enumerate_set(denotation, connected=True), maxlen))
    return report


def check_t_prime_equivalence(program: Program, max_steps: int = 12, state_budget: int = 20000) -> CheckReport:
    """Compare the observables of the two transition systems of tsccp-i.

    :param program: tsccp-i program
    :param max_steps: depth bound of the explorations
    :param state_budget: budget of every exploration
    :return: report with verdict
    """
    plain = observables_il(program, max_steps, state_budget)
    prime = observables_il_prime(program, max_steps, state_budget)
    report = CheckReport('t-prime-equivalence')
    report.add(Comparison('observables of T', "observables of T'", plain.stores, prime.stores,
                          plain.complete and prime.complete))
    return report


# property name -> check, as selected on the command line
CHECKS = {
    'correctness': check_correctness,
    'compositionality': check_compositionality,
    't-prime-equivalence': check_t_prime_equivalence,
}
