#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

import pytest

from softtime.constraint import SoftConstraint
from softtime.engine import Label, run, run_il
from softtime.traces import (LabeledReactiveSeq, Reaction, ReactiveSeq, SequenceError, is_connected, make_sequence,
                             normalize, normalize_sequence, sequence_of_run)
from tests.misc import corpus_program


@pytest.fixture
def stores():
    program = corpus_program('example1.tsccp')
    c1 = program.constraint('c1').constraint
    c2 = program.constraint('c2').constraint
    return SoftConstraint.one(program.semiring), c1, c2, c1.combine(c2)


def test_sequence_of_run():
    program = corpus_program('example1.tsccp')
    c2 = program.constraint('c2').constraint
    sequence = sequence_of_run(run(program))
    assert not sequence.labeled
    assert len(sequence) == 6
    assert sequence.steps[-1] == Reaction(c2, c2)
    assert sequence.final == c2
    assert is_connected(sequence)
    assert sequence.to_list()[-1] == {'in': c2.format(), 'out': c2.format()}


def test_sequence_of_il_run():
    sequence = sequence_of_run(run_il(corpus_program('three_agents.tscci')))
    assert sequence.labeled
    assert isinstance(sequence, LabeledReactiveSeq)
    assert len(sequence) == 5
    assert all(step.label == Label.OMEGA for step in sequence)
    assert is_connected(sequence)
    assert sequence.to_list()[0]['label'] == 'omega'


@pytest.mark.parametrize(
    "indexes, message",
    [
        ([], "empty sequence"),
        ([(1, 0)], "withdraws information"),
        ([(0, 1), (0, 0)], "forgets the previous contribution"),
        ([(0, 1)], "not a stuttering step"),
    ],
)
def test_invalid_sequences(stores, indexes, message):
    steps = tuple(Reaction(stores[before], stores[after]) for before, after in indexes)
    with pytest.raises(SequenceError, match=message):
        ReactiveSeq(steps)


def test_invalid_labeled_sequences(stores):
    one, c1, _, _ = stores
    with pytest.raises(SequenceError, match="has no label"):
        LabeledReactiveSeq((Reaction(one, one),))
    with pytest.raises(SequenceError, match="changes the store"):
        LabeledReactiveSeq((Reaction(one, c1, Label.TAU), Reaction(c1, c1, Label.OMEGA)))
    with pytest.raises(SequenceError, match="not a computational step"):
        LabeledReactiveSeq((Reaction(one, one, Label.TAU),))


def test_connected(stores):
    one, c1, c2, c3 = stores
    assert is_connected(make_sequence([Reaction(one, c1), Reaction(c1, c1)], labeled=False))
    # the environment added c2 between the reactions
    assert not is_connected(make_sequence([Reaction(one, c1), Reaction(c3, c3)], labeled=False))
    assert not is_connected(make_sequence([Reaction(c2, c2)], labeled=False))
    timed = make_sequence([Reaction(one, one, Label.TAU), Reaction(one, one, Label.OMEGA)], labeled=True)
    assert not is_connected(timed)


def test_normalize(stores):
    one, c1, _, _ = stores
    long = make_sequence([Reaction(one, c1), Reaction(c1, c1), Reaction(c1, c1)], labeled=False)
    short = make_sequence([Reaction(one, c1), Reaction(c1, c1)], labeled=False)
    assert normalize_sequence(long) == short
    assert normalize([long, short]) == frozenset([short])
    assert normalize([long, short], maxlen=2) == frozenset()
    assert short.format() == f"<{one.format()},{c1.format()}> <{c1.format()},{c1.format()}>"


def test_normalize_hides_fresh_variables():
    program = corpus_program('hiding.tsccp')
    sequence = normalize_sequence(sequence_of_run(run(program)))
    assert all(set(step.after.variables) <= {'y'} for step in sequence)
    assert sequence.final.variables == ('y',)
