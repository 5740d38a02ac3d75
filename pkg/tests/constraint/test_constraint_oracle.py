#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Cylindric operations compared with direct enumeration of the assignments."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from softtime.constraint import SoftConstraint, Variable
from softtime.semiring import INF, get_semiring

weighted = get_semiring('weighted')
VARIABLES = [Variable(name, tuple(str(value) for value in range(size)), (0, rank))
             for rank, (name, size) in enumerate([('a', 2), ('b', 3), ('c', 3)])]
COSTS = st.one_of(st.just(INF), st.integers(min_value=0, max_value=9)).map(weighted.grade)


@st.composite
def constraints(draw):
    support = draw(st.lists(st.sampled_from(VARIABLES), max_size=3, unique=True))
    size = 1
    for var in support:
        size *= len(var.domain)
    grades = draw(st.lists(COSTS, min_size=size, max_size=size))
    return SoftConstraint(weighted, support, grades)


def assignments():
    names = [var.name for var in VARIABLES]
    for key in itertools.product(*(var.domain for var in VARIABLES)):
        yield dict(zip(names, key))


@settings(max_examples=300, deadline=None)
@given(constraints(), constraints())
def test_combine(first, second):
    both = first.combine(second)
    for assignment in assignments():
        assert both.eval(assignment) == weighted.times(first.eval(assignment), second.eval(assignment))


@settings(max_examples=300, deadline=None)
@given(constraints(), st.sets(st.sampled_from([var.name for var in VARIABLES])))
def test_project(constraint, keep):
    projected = constraint.project(keep)
    assert set(projected.variables) <= keep
    for assignment in assignments():
        matching = [other for other in assignments() if all(other[name] == assignment[name] for name in keep)]
        expected = weighted.sum(constraint.eval(other) for other in matching)
        assert projected.eval(assignment) == expected


@settings(max_examples=300, deadline=None)
@given(constraints(), constraints())
def test_order(first, second):
    expected = all(weighted.leq(first.eval(assignment), second.eval(assignment)) for assignment in assignments())
    assert first.leq(second) == expected
    assert first.blevel() == weighted.sum(first.eval(assignment) for assignment in assignments())
