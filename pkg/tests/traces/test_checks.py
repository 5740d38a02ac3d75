#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

import pytest

from softtime.traces import (CHECKS, CheckReport, Comparison, TracesError, Verdict, check_compositionality,
                             check_correctness, check_t_prime_equivalence, denote_mp, enumerate_R, normalize)
from tests.misc import corpus_files, corpus_program


def comparison(program, left, right, complete=True):
    items = [program.constraint(name).constraint for name in ('c1', 'c2')]
    return Comparison('left', 'right', frozenset(items[:left]), frozenset(items[:right]), complete)


def test_verdicts():
    program = corpus_program('example1.tsccp')
    report = CheckReport('test')
    assert report.verdict == Verdict.PASS
    report.add(comparison(program, 1, 1))
    assert report.verdict == Verdict.PASS
    report.add(comparison(program, 1, 2, complete=False))
    assert report.verdict == Verdict.INCONCLUSIVE
    assert report.verdict_tag == 'inconclusive'
    report.add(comparison(program, 2, 1))
    assert report.verdict == Verdict.FAIL
    data = report.to_dict()
    assert data['verdict'] == 'fail'
    assert [item['equal'] for item in data['comparisons']] == [True, False, False]
    c2 = program.constraint('c2').constraint
    assert data['comparisons'][2]['witness'] == f"left: {c2.format()}"
    assert data['comparisons'][0]['witness'] is None


def test_registry():
    assert set(CHECKS) == {'correctness', 'compositionality', 't-prime-equivalence'}
    assert Verdict.from_int(5) == Verdict.FAIL


# the auctions need twelve or more ticks to reach success
LONG_RUNS = {'auction.tsccp': 16, 'new_auction.tsccp': 16}


@pytest.mark.parametrize("file_name", corpus_files('.tsccp', '.tscci'))
def test_correctness(file_name):
    report = check_correctness(corpus_program(file_name), maxlen=LONG_RUNS.get(file_name, 8))
    assert report.verdict == Verdict.PASS, report.to_dict()
    assert len(report.comparisons) == 2
    if file_name in LONG_RUNS:
        assert report.comparisons[0].left_items


def test_operational_and_denotational_sets():
    program = corpus_program('example1.tsccp')
    operational = enumerate_R(program, maxlen=7, connected=True)
    denotation = denote_mp(program, maxlen=7, connected=True)
    assert operational.complete and denotation.complete
    assert normalize(operational.sequences, maxlen=7) == normalize(denotation.sequences, maxlen=7)
    c2 = program.constraint('c2').constraint
    assert {sequence.final for sequence in operational.sequences} == {c2}


def test_compositionality():
    program = corpus_program('parallel_tells.tsccp')
    pool = [program.constraint('c1').constraint]
    report = check_compositionality(program, pool, maxlen=3)
    assert report.verdict == Verdict.PASS, report.to_dict()
    assert [(item.left, item.right) for item in report.comparisons] == [('R(A || B)', 'R(A) || R(B)'), ('R', 'D')]


@pytest.mark.parametrize(
    "file_name,pool",
    [
        ("parallel_tells.tsccp", ['c1']),
        ("example1.tsccp", ['c1']),
        ("example2.tsccp", ['c1']),
        ("example3.tsccp", ['c1']),
        ("boolean.tsccp", []),
    ]
)
def test_compositionality_mp(file_name, pool):
    program = corpus_program(file_name)
    constraints = [program.constraint(name).constraint for name in pool]
    report = check_compositionality(program, constraints, maxlen=6)
    assert report.verdict == Verdict.PASS, report.to_dict()


def test_compositionality_il():
    report = check_compositionality(corpus_program('parallel_tells.tscci'), maxlen=3)
    assert report.verdict == Verdict.PASS, report.to_dict()
    assert report.notes


def test_compositionality_needs_parallel_main():
    with pytest.raises(TracesError):
        check_compositionality(corpus_program('fuzzy.tsccp'))


@pytest.mark.parametrize("file_name", corpus_files('.tscci'))
def test_t_prime_equivalence(file_name):
    report = check_t_prime_equivalence(corpus_program(file_name))
    assert report.verdict == Verdict.PASS
    assert report.comparisons[0].left_items


def test_budget_makes_inconclusive():
    report = check_correctness(corpus_program('example1.tsccp'), maxlen=7, state_budget=3)
    assert report.verdict == Verdict.INCONCLUSIVE
