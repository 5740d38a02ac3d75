#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Tests of the maximal-parallelism engine."""

import pytest

from softtime.constraint import SoftConstraint, combine_all
from softtime.engine import (DialectMismatchError, FirstChooser, RandomChooser, ReplayChooser, ReplayError, RuleId,
                             RunStatus, can_step, explore_mp, observables_mp, run, run_il, step, transitions_mp)
from softtime.lang import expand_idioms, parse
from tests.misc import corpus_files, corpus_program, event_log


def constraint(program, name):
    return program.constraint(name).constraint


def test_example1():
    program = corpus_program('example1.tsccp')
    outcome = run(program)
    assert outcome.status == RunStatus.SUCCESS
    assert outcome.clock == 5
    assert outcome.store == constraint(program, 'c2')
    assert str(outcome.store.blevel()) == '5'
    # the ask of the second agent waits until tick 4
    assert event_log(outcome) == [
        '0: R1@0 R1@1',
        '1: R2@0 R2@1',
        '2: R2@0',
        '3: R1@0',
        '4: R3@1',
    ]
    # parallel composition is the rule at the root of every tick
    assert [record.rule for record in outcome.ticks] == [RuleId.R5, RuleId.R5, RuleId.R6, RuleId.R6, RuleId.R6]
    assert not outcome.nonstandard
    assert outcome.decisions == []


def test_example2_timeout():
    program = corpus_program('example2.tsccp')
    outcome = run(program)
    assert outcome.status == RunStatus.SUCCESS
    assert outcome.clock == 5
    assert outcome.store == constraint(program, 'c3')
    first = [event.rule for event in outcome.ticks[0].events if event.path == (0,)]
    assert first == [RuleId.R10, RuleId.R10, RuleId.R4]
    # from tick 2 on the first agent waits in the time-out branch
    assert [event.rule for event in outcome.ticks[4].events] == [RuleId.R3]


def test_example3_watchdog():
    program = corpus_program('example3.tsccp')
    outcome = run(program)
    assert outcome.status == RunStatus.SUCCESS
    assert outcome.clock == 2
    c3 = constraint(program, 'c3')
    assert outcome.store == c3.combine(c3)
    assert event_log(outcome) == ['0: R10@0 R1@0 R1@1', '1: R8@0 R1@0']


def test_suspension():
    outcome = run(corpus_program('valued_block.tsccp'))
    assert outcome.status == RunStatus.SUSPENDED
    assert outcome.clock == 0
    assert outcome.status_tag == 'suspended'


def test_budget():
    program = parse("proc p() :: tell(one) -> p()\nmain: p()")
    outcome = run(program, max_steps=7)
    assert outcome.status == RunStatus.BUDGET
    assert outcome.clock == 7
    assert len(outcome.ticks) == 7


def test_success_at_clock_zero():
    outcome = run(corpus_program('success.tsccp'))
    assert outcome.status == RunStatus.SUCCESS
    assert outcome.clock == 0
    assert outcome.ticks == []


def test_parallel_tells():
    program = corpus_program('parallel_tells.tsccp')
    outcome = run(program)
    assert outcome.clock == 1
    assert outcome.store == constraint(program, 'c1').combine(constraint(program, 'c2'))
    assert event_log(outcome) == ['0: R2@0 R2@1']


def test_now_with_cut_constraint():
    program = corpus_program('now_phi.tsccp')
    outcome = run(program)
    assert outcome.status == RunStatus.SUCCESS
    assert outcome.clock == 2
    assert event_log(outcome) == ['0: R2@-', '1: R12@- R2@-']


def test_guarded_recursion():
    program = corpus_program('guarded_recursion.tsccp')
    outcome = run(program)
    assert outcome.status == RunStatus.SUCCESS
    assert outcome.clock == 4
    assert outcome.store == constraint(program, 'done')
    assert event_log(outcome) == ['0: R17@-', '1: R14@- R2@-', '2: R17@-', '3: R13@-']


def test_hiding():
    program = corpus_program('hiding.tsccp')
    outcome = run(program)
    assert outcome.status == RunStatus.SUCCESS
    assert outcome.clock == 3
    assert [event.rule for event in outcome.ticks[0].events] == [RuleId.R16, RuleId.R2]
    assert outcome.ticks[0].rule == RuleId.R16
    # the local variable is renamed apart
    assert set(outcome.store.variables) == {'y', '$1'}
    y = program.variable('y')
    semiring = program.semiring
    expected = SoftConstraint(semiring, (y,), [semiring.grade(0), semiring.grade(3)])
    assert observables_mp(program).stores == {expected}


def test_boolean_and_fuzzy():
    program = corpus_program('boolean.tsccp')
    outcome = run(program)
    assert outcome.status == RunStatus.SUCCESS
    assert outcome.clock == 3
    assert outcome.store == constraint(program, 'closed').combine(constraint(program, 'lit'))
    program = corpus_program('fuzzy.tsccp')
    outcome = run(program)
    assert outcome.status == RunStatus.SUCCESS
    assert outcome.store.blevel() == program.semiring.grade('0.7')


def test_choice():
    program = corpus_program('sum_race.tsccp')
    outcome = run(program)
    assert outcome.decisions == [('-', 0)]
    assert outcome.store == constraint(program, 'pick_a')
    outcome = run(program, ReplayChooser([('-', 1)]))
    assert outcome.store == constraint(program, 'pick_b')
    outcomes = {run(program, RandomChooser(seed)).store for seed in range(20)}
    assert outcomes <= {constraint(program, 'pick_a'), constraint(program, 'pick_b')}


def test_replay_errors():
    program = corpus_program('sum_race.tsccp')
    with pytest.raises(ReplayError):
        run(program, ReplayChooser([]))
    with pytest.raises(ReplayError):
        run(program, ReplayChooser([('-', 5)]))


def test_initial_store():
    program = corpus_program('example1.tsccp')
    c2 = constraint(program, 'c2')
    outcome = run(program, initial_store=c2)
    assert outcome.nonstandard
    assert outcome.status == RunStatus.SUCCESS
    # the ask is enabled as soon as the delay allows
    assert outcome.ticks[2].events[-1].rule == RuleId.R3


def test_single_steps():
    program = expand_idioms(corpus_program('example1.tsccp'))
    one = SoftConstraint.one(program.semiring)
    ask = program.main.right.cont.cont
    assert not can_step(program, ask, one)
    assert can_step(program, ask, constraint(program, 'c2'))
    result = step(program, ask, constraint(program, 'c2'), FirstChooser())
    assert result.delta == one
    assert [event.rule for event in result.events] == [RuleId.R3]
    assert step(program, ask, one, FirstChooser()) is None


def test_transitions():
    program = expand_idioms(corpus_program('sum_race.tsccp'))
    one = SoftConstraint.one(program.semiring)
    found = transitions_mp(program, program.main, one)
    assert [result.decisions for result in found] == [(('-', 0),), (('-', 1),)]


def test_explore():
    program = corpus_program('sum_race.tsccp')
    exploration = explore_mp(program)
    assert exploration.complete
    assert sorted(exploration.stores(), key=lambda c: c.format()) == [constraint(program, 'pick_a'),
                                                                        constraint(program, 'pick_b')]
    witnesses = {terminal.store: terminal.witness for terminal in exploration.terminals.values()}
    assert witnesses[constraint(program, 'pick_b')] == (('-', 1),)
    assert len(observables_mp(program).stores) == 2


def test_observables_example1():
    program = corpus_program('example1.tsccp')
    assert observables_mp(program).stores == {constraint(program, 'c2')}


def test_auction():
    program = corpus_program('auction.tsccp')
    outcome = run(program, max_steps=200)
    assert outcome.status == RunStatus.SUCCESS
    assert outcome.clock == 12
    assert outcome.store.entails(constraint(program, 'win1'))
    assert outcome.store.entails(constraint(program, 'service_end'))


def test_new_auction():
    program = corpus_program('new_auction.tsccp')
    outcome = run(program, max_steps=200)
    assert outcome.status == RunStatus.SUCCESS
    # the auctioneer prefers the second bidder
    assert outcome.store.entails(constraint(program, 'win2'))
    exploration = explore_mp(program, max_steps=200)
    assert exploration.complete
    assert all(store.entails(constraint(program, 'win2')) for store in exploration.stores())


def test_dialect_mismatch():
    with pytest.raises(DialectMismatchError) as exc:
        run(corpus_program('three_agents.tscci'))
    assert exc.value.exit_code == 2


def test_three_tells_in_one_tick():
    program = parse("""
        var x in {0, 1, 2, 3}
        constraint c1(x) { 0 -> 3  1 -> 4  2 -> 5  3 -> 6 }
        main: tell(c1) -> success || tell(c1) -> success || tell(c1) -> success
    """)
    outcome = run(program)
    assert outcome.clock == 1
    assert outcome.store == combine_all(program.semiring, [constraint(program, 'c1')] * 3)


@pytest.mark.parametrize("file_name", corpus_files('.tsccp', '.tscci'))
def test_store_monotonicity(file_name):
    program = corpus_program(file_name)
    outcome = run(program, max_steps=200) if program.dialect == 'tsccp' else run_il(program, max_steps=200)
    store = SoftConstraint.one(program.semiring)
    for record in outcome.ticks:
        assert record.before == store
        assert record.after == record.before.combine(record.delta)
        assert record.after.entails(record.before)
        store = record.after
    assert outcome.store == store


WATCHED_BODIES = [
    "tell(c1) -> ask(c1) -> success",
    "tell(c1) -> (ask(c1) -> tell(c1) -> success + ask(c2) -> success)",
    "tell(one) -1-> tell(c1) -> success || ask(c1) -> success",
]


@pytest.mark.parametrize("body", WATCHED_BODIES)
def test_watchdog_inertness(body):
    header = """
        var x in {0, 1, 2, 3}
        constraint c1(x) { 0 -> 3  1 -> 4  2 -> 5  3 -> 6 }
        constraint c2(x) { 0 -> 5  1 -> 6  2 -> 7  3 -> 8 }
        constraint never(x) { 0 -> 90  1 -> 90  2 -> 90  3 -> 90 }
    """
    bare = run(parse(header + f"main: {body}"))
    watched = run(parse(header + f"main: do ({body}) watching never else (tell(c2) -> success)"))
    assert watched.status == bare.status == RunStatus.SUCCESS
    assert watched.clock == bare.clock
    assert [record.delta for record in watched.ticks] == [record.delta for record in bare.ticks]
    assert watched.store == bare.store
