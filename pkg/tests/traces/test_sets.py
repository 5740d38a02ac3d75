#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

import pytest

from softtime.constraint import SoftConstraint
from softtime.engine import Label
from softtime.lang import zero_threshold
from softtime.traces import (EMPTY, EPSILON, Deferred, TracesError, bar_success, bar_tell, materialize, normalize,
                             sem_parallel, sem_success, sem_sum, sem_tell)
from tests.misc import corpus_program


@pytest.fixture
def program():
    return corpus_program('example1.tsccp')


def constraints(program):
    return [program.constraint(name).constraint for name in ('c1', 'c2')]


def test_success(program):
    one = SoftConstraint.one(program.semiring)
    found = materialize(sem_success(), [one], maxlen=3)
    assert found.complete
    assert len(found.sequences) == 3
    assert len(normalize(found.sequences)) == 1
    assert materialize(EPSILON, [one], maxlen=3).sequences == frozenset()
    assert materialize(EMPTY, [one], maxlen=3).sequences == frozenset()


def test_tell(program):
    c1, _ = constraints(program)
    one = SoftConstraint.one(program.semiring)
    found = materialize(sem_tell(c1, zero_threshold(program.semiring), sem_success()), [one], maxlen=3)
    assert {len(sequence) for sequence in found.sequences} == {2, 3}
    assert all(sequence.steps[0].after == c1 for sequence in found.sequences)


def test_ask_waits(program):
    c1, _ = constraints(program)
    one = SoftConstraint.one(program.semiring)
    ask = sem_sum([(c1, zero_threshold(program.semiring), sem_success())])
    # nobody tells c1
    assert materialize(ask, [one], maxlen=4, connected=True).sequences == frozenset()
    found = materialize(ask, [c1], maxlen=3)
    assert found.sequences
    assert all(sequence.final.entails(c1) for sequence in found.sequences)


def test_parallel(program):
    c1, c2 = constraints(program)
    one = SoftConstraint.one(program.semiring)
    zero = zero_threshold(program.semiring)
    both = sem_parallel(sem_tell(c1, zero, sem_success()), sem_tell(c2, zero, sem_success()))
    found = materialize(both, [one], maxlen=2)
    assert len(found.sequences) == 1
    sequence, = found.sequences
    assert sequence.steps[0].after == c1.combine(c2)


def test_deferred(program):
    calls = []

    def build():
        calls.append(1)
        return sem_success()

    deferred = Deferred(build)
    assert not calls
    materialize(deferred, [SoftConstraint.one(program.semiring)], maxlen=2)
    materialize(deferred, [SoftConstraint.one(program.semiring)], maxlen=2)
    assert calls == [1]


def test_labeled(program):
    c1, _ = constraints(program)
    one = SoftConstraint.one(program.semiring)
    tell = bar_tell(c1, zero_threshold(program.semiring), bar_success())
    found = materialize(tell, [one], maxlen=3, labeled=True)
    assert found.sequences
    assert all(sequence.labeled for sequence in found.sequences)
    connected = materialize(tell, [one], maxlen=3, labeled=True, connected=True)
    assert connected.sequences
    for sequence in connected.sequences:
        assert all(step.label == Label.OMEGA for step in sequence)
        assert sequence.steps[0].after == c1


def test_budget(program):
    found = materialize(sem_success(), [SoftConstraint.one(program.semiring)], maxlen=50, state_budget=10)
    assert not found.complete


def test_invalid_bounds(program):
    with pytest.raises(TracesError):
        materialize(sem_success(), [SoftConstraint.one(program.semiring)], maxlen=0)
    with pytest.raises(TracesError):
        materialize(sem_success(), [], maxlen=2)
