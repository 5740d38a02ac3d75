#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Tests of the bundled c-semirings."""

from fractions import Fraction

import pytest

from softtime.semiring import (INF, SEMIRINGS, GradeLiteralError, MixedSemiringError, SemiringError, get_semiring,
                               leq, not_lt, plus, times)

weighted = get_semiring('weighted')
fuzzy = get_semiring('fuzzy')
boolean = get_semiring('boolean')
probabilistic = get_semiring('probabilistic')


def test_get_semiring():
    assert set(SEMIRINGS) == {'boolean', 'fuzzy', 'weighted', 'probabilistic'}
    assert get_semiring('weighted') is weighted
    with pytest.raises(SemiringError):
        get_semiring('tropical')


@pytest.mark.parametrize(
    "name, zero, one",
    [
        ('boolean', False, True),
        ('fuzzy', Fraction(0), Fraction(1)),
        ('probabilistic', Fraction(0), Fraction(1)),
        ('weighted', INF, Fraction(0)),
    ]
)
def test_units(name, zero, one):
    semiring = get_semiring(name)
    assert semiring.zero.value == zero
    assert semiring.one.value == one


def test_fuzzy_operations():
    assert plus(fuzzy.grade('0.3'), fuzzy.grade('0.7')) == fuzzy.grade('0.7')
    assert times(fuzzy.grade('0.3'), fuzzy.grade('0.7')) == fuzzy.grade('0.3')


def test_probabilistic_operations():
    assert times(probabilistic.grade('1/2'), probabilistic.grade('1/2')) == probabilistic.grade('1/4')
    assert plus(probabilistic.grade('1/2'), probabilistic.grade('1/4')) == probabilistic.grade('1/2')


def test_weighted_operations():
    assert plus(weighted.grade(9), weighted.grade(5)) == weighted.grade(5)
    assert times(weighted.grade(3), weighted.grade(5)) == weighted.grade(8)
    assert times(weighted.grade(3), weighted.zero) == weighted.zero
    assert plus(weighted.zero, weighted.grade(3)) == weighted.grade(3)


def test_boolean_operations():
    true, false = boolean.one, boolean.zero
    assert plus(true, false) == true
    assert times(true, false) == false


def test_weighted_order():
    # smaller cost is better
    assert leq(weighted.grade(9), weighted.grade(5))
    assert not leq(weighted.grade(5), weighted.grade(9))
    assert not_lt(weighted.grade(5), weighted.grade(9))
    assert not not_lt(weighted.grade(9), weighted.grade(5))
    assert leq(weighted.zero, weighted.grade(1000))
    assert not_lt(weighted.grade(5), weighted.zero)


@pytest.mark.parametrize(
    "name, text, expected",
    [
        ('weighted', '5', Fraction(5)),
        ('weighted', '3/2', Fraction(3, 2)),
        ('weighted', '0.25', Fraction(1, 4)),
        ('weighted', 'inf', INF),
        ('fuzzy', '0.3', Fraction(3, 10)),
        ('probabilistic', '1', Fraction(1)),
        ('boolean', 'true', True),
        ('boolean', 'false', False),
    ]
)
def test_parse_literal(name, text, expected):
    assert get_semiring(name).parse_literal(text).value == expected


@pytest.mark.parametrize(
    "name, text",
    [
        ('weighted', 'true'),
        ('weighted', 'abc'),
        ('weighted', '1/0'),
        ('fuzzy', 'inf'),
        ('fuzzy', '1.5'),
        ('probabilistic', '2'),
        ('boolean', '1'),
    ]
)
def test_parse_literal_invalid(name, text):
    with pytest.raises(GradeLiteralError):
        get_semiring(name).parse_literal(text)


@pytest.mark.parametrize(
    "grade, text",
    [
        (weighted.zero, 'inf'),
        (weighted.grade(5), '5'),
        (fuzzy.grade('0.5'), '1/2'),
        (boolean.one, 'true'),
    ]
)
def test_format(grade, text):
    assert str(grade) == text
    assert get_semiring(grade.kind).parse_literal(text) == grade


def test_mixed_semirings():
    with pytest.raises(MixedSemiringError):
        plus(weighted.grade(1), fuzzy.grade(1))
    with pytest.raises(MixedSemiringError):
        weighted.times(weighted.grade(1), fuzzy.grade(1))
    with pytest.raises(SemiringError):
        leq(weighted.grade(1), 1)


def test_infinity_is_a_symbol():
    assert weighted.grade(INF).value is INF
    assert str(INF) == 'inf'
    assert repr(INF) == 'INF'
