#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Sets of reactive sequences given by their first reactions.

A set answers, for every store the environment may offer, which reactions its sequences can start
with and which set the rest of those sequences belongs to. Recursive definitions then cost nothing
until enumerated, and enumeration up to a length bound yields the finite part of the set.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..constraint import SoftConstraint
from ..engine import Label
from .exceptions import TracesError
from .sequences import ReactiveSeq, Reaction, make_sequence

logger = logging.getLogger("TRACES")

# label (None in maximal parallelism), constraint contributed, set of the remaining sequences
Step = Tuple[Optional[int], SoftConstraint, 'SequenceSet']


class SequenceSet:
    """Set of sequences; `nullable` tells whether the empty sequence belongs to it."""

    nullable = False

    def __init__(self) -> None:
        """Initialize the cache of first reactions."""
        self._cache: Dict[SoftConstraint, List[Step]] = {}

    def _steps(self, store: SoftConstraint) -> List[Step]:
        raise NotImplementedError()

    def steps(self, store: SoftConstraint) -> List[Step]:
        """First reactions of the sequences assuming `store`."""
        cached = self._cache.get(store)
        if cached is None:
            cached = self._cache[store] = self._steps(store)
        return cached


class _Epsilon(SequenceSet):
    """Only the empty sequence."""

    nullable = True

    def _steps(self, store: SoftConstraint) -> List[Step]:
        return []


class _Empty(SequenceSet):
    """No sequence at all."""

    def _steps(self, store: SoftConstraint) -> List[Step]:
        return []


EPSILON = _Epsilon()
EMPTY = _Empty()


class Deferred(SequenceSet):
    """Non-empty sequences of a set built on first use; procedure bodies unfold only as deep as enumerated."""

    def __init__(self, build: Callable[[], SequenceSet]) -> None:
        """Initialize the deferred set.

        :param build: returns the actual set
        """
        super().__init__()
        self._build: Optional[Callable[[], SequenceSet]] = build
        self._target: Optional[SequenceSet] = None

    @property
    def target(self) -> SequenceSet:
        """The actual set."""
        if self._target is None:
            assert self._build
            self._target, self._build = self._build(), None
        return self._target

    def _steps(self, store: SoftConstraint) -> List[Step]:
        return self.target.steps(store)


@dataclass
class Enumeration:
    """Sequences of a set up to a length; `complete` is False when the expansion budget ran out."""

    sequences: FrozenSet[ReactiveSeq]
    complete: bool = True
    expansions: int = 0


def _is_closing(reaction: Reaction, labeled: bool) -> bool:
    return reaction.stutter and (not labeled or reaction.label == Label.OMEGA)


def materialize(sequences: SequenceSet, pool: Sequence[SoftConstraint], maxlen: int, labeled: bool = False,
                connected: bool = False, state_budget: int = 200000) -> Enumeration:
    """Enumerate the sequences of a set whose length does not exceed `maxlen`.

    The environment starts with a store of `pool` and, before every further reaction, adds one more
    constraint of `pool` to the store left by the previous reaction.

    :param sequences: set to enumerate
    :param pool: what the environment may contribute; 1 is always added
    :param maxlen: length bound, at least 1
    :param labeled: build labeled sequences
    :param connected: only sequences where the environment never contributes, and, when labeled,
        made of computational steps only
    :param state_budget: maximal number of expanded (set, store) pairs
    :return: sequences found and whether the enumeration is complete
    :raises TracesError: maxlen below 1
    """
    if maxlen < 1:
        raise TracesError(f"maxlen must be at least 1, not {maxlen}")
    if not pool:
        raise TracesError("empty environment pool")
    one = SoftConstraint.one(pool[0].semiring)
    envs = [one]
    for store in pool:
        if store not in envs:
            envs.append(store)
    if connected:
        envs = [one]
    found = set()
    result = Enumeration(frozenset())
    stack: List[Tuple[SequenceSet, SoftConstraint, Tuple[Reaction, ...]]] = [(sequences, env, ()) for env in envs]
    while stack:
        current, store, prefix = stack.pop()
        result.expansions += 1
        if result.expansions > state_budget:
            logger.warning(f"Expansion budget {state_budget} exhausted")
            result.complete = False
            break
        for label, delta, rest in current.steps(store):
            if connected and labeled and label == Label.TAU:
                continue
            reaction = Reaction(store, store.combine(delta), label if labeled else None)
            sequence = prefix + (reaction,)
            if rest.nullable and _is_closing(reaction, labeled):
                found.add(make_sequence(sequence, labeled))
            if len(sequence) < maxlen:
                stack.extend((rest, reaction.after.combine(env), sequence) for env in envs)
    result.sequences = frozenset(found)
    logger.debug(f"Enumerated {len(found)} sequences in {result.expansions} expansions")
    return result
