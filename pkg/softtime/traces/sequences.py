#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Timed reactive sequences: what an agent assumes and contributes at every time-unit."""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Optional, Tuple

from ..constraint import SoftConstraint
from ..engine import Label, RunOutcome
from ..lang import is_fresh
from .exceptions import SequenceError


@dataclass(frozen=True)
class Reaction:
    """One time-unit: the store assumed from the environment and the store left after the agent acted."""

    before: SoftConstraint
    after: SoftConstraint
    label: Optional[int] = None

    @property
    def stutter(self) -> bool:
        """True when the agent contributed nothing."""
        return self.before == self.after

    def project(self, keep: Iterable[str]) -> 'Reaction':
        """Reaction with both stores projected onto `keep`."""
        keep = tuple(keep)
        return Reaction(self.before.project(keep), self.after.project(keep), self.label)

    def format(self) -> str:
        """`<before,after>` or `<before,after,label>`."""
        label = '' if self.label is None else ',' + Label.name(self.label)
        return f"<{self.before.format()},{self.after.format()}{label}>"


@dataclass(frozen=True)
class ReactiveSeq:
    """Monotone sequence of reactions ending with a stuttering step."""

    steps: Tuple[Reaction, ...]

    labeled = False

    def __post_init__(self) -> None:
        if not self.steps:
            raise SequenceError("empty sequence")
        previous = None
        for index, step in enumerate(self.steps):
            if not step.after.entails(step.before):
                raise SequenceError(f"reaction {index} withdraws information")
            if previous is not None and not step.before.entails(previous.after):
                raise SequenceError(f"reaction {index} forgets the previous contribution")
            previous = step
        if not self.steps[-1].stutter:
            raise SequenceError("last reaction is not a stuttering step")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Reaction]:
        return iter(self.steps)

    @property
    def final(self) -> SoftConstraint:
        """Store of the closing stuttering step."""
        return self.steps[-1].after

    def format(self) -> str:
        """Reactions separated by spaces."""
        return ' '.join(step.format() for step in self.steps)

    def to_list(self) -> list:
        """Serializable form."""
        result = []
        for step in self.steps:
            item = {'in': step.before.format(), 'out': step.after.format()}
            if step.label is not None:
                item['label'] = Label.name(step.label)
            result.append(item)
        return result


@dataclass(frozen=True)
class LabeledReactiveSeq(ReactiveSeq):
    """Reactive sequence of the interleaving semantics; every reaction carries its label."""

    labeled = True

    def __post_init__(self) -> None:
        super().__post_init__()
        for index, step in enumerate(self.steps):
            if step.label is None:
                raise SequenceError(f"reaction {index} has no label")
            if step.label == Label.TAU and not step.stutter:
                raise SequenceError(f"time step {index} changes the store")
        if self.steps[-1].label != Label.OMEGA:
            raise SequenceError("last reaction is not a computational step")


def make_sequence(steps: Iterable[Reaction], labeled: bool) -> ReactiveSeq:
    """Sequence of the right kind."""
    return (LabeledReactiveSeq if labeled else ReactiveSeq)(tuple(steps))


def sequence_of_run(outcome: RunOutcome, labeled: Optional[bool] = None) -> ReactiveSeq:
    """Reactive sequence of a run: one reaction per tick, closed by a stuttering step on the final store.

    :param outcome: run of either engine
    :param labeled: build a labeled sequence; by default when the tick records carry labels
    :return: sequence of len(ticks) + 1 reactions
    """
    if labeled is None:
        labeled = any(record.label is not None for record in outcome.ticks)
    steps = [Reaction(record.before, record.after, record.label if labeled else None) for record in outcome.ticks]
    steps.append(Reaction(outcome.store, outcome.store, Label.OMEGA if labeled else None))
    return make_sequence(steps, labeled)


def is_connected(sequence: ReactiveSeq) -> bool:
    """True when the sequence starts on 1 and assumes nothing beyond its own contributions.

    Labeled sequences must also consist of computational steps only.
    """
    first = sequence.steps[0].before
    if first != SoftConstraint.one(first.semiring):
        return False
    for previous, step in zip(sequence.steps, sequence.steps[1:]):
        if step.before != previous.after:
            return False
    if sequence.labeled:
        return all(step.label == Label.OMEGA for step in sequence.steps)
    return True


def _visible(store: SoftConstraint) -> Tuple[str, ...]:
    return tuple(var.name for var in store.support if not is_fresh(var))


def normalize_sequence(sequence: ReactiveSeq, visible: Optional[Iterable[str]] = None) -> ReactiveSeq:
    """Project every store onto `visible`, by default onto the non-fresh variables, and drop repeated final stutters."""
    if visible is None:
        steps = [Reaction(step.before.project(_visible(step.before)), step.after.project(_visible(step.after)),
                          step.label) for step in sequence.steps]
    else:
        keep = tuple(visible)
        steps = [step.project(keep) for step in sequence.steps]
    while len(steps) > 1 and steps[-1] == steps[-2]:
        steps.pop()
    return make_sequence(steps, sequence.labeled)


def normalize(sequences: Iterable[ReactiveSeq], visible: Optional[Iterable[str]] = None,
              maxlen: Optional[int] = None) -> FrozenSet[ReactiveSeq]:
    """Normalized sequences; with `maxlen` only those strictly shorter are kept.

    Cutting below the enumeration bound gives both sides of a comparison the same horizon.
    """
    keep = None if visible is None else tuple(visible)
    result = set()
    for sequence in sequences:
        normalized = normalize_sequence(sequence, keep)
        if maxlen is None or len(normalized) < maxlen:
            result.add(normalized)
    return frozenset(result)
