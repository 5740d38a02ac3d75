#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Module implementing c-semirings and their grades."""

from .exceptions import GradeLiteralError, MixedSemiringError, SemiringError
from .semiring import (INF, SEMIRINGS, BooleanSemiring, FuzzySemiring, Grade, ProbabilisticSemiring, Semiring,
                       WeightedSemiring, get_semiring, leq, not_lt, plus, times)

__all__ = [
    # classes
    'Grade',
    'Semiring',
    'BooleanSemiring',
    'FuzzySemiring',
    'WeightedSemiring',
    'ProbabilisticSemiring',
    # constants
    'INF',
    'SEMIRINGS',
    # functions
    'get_semiring',
    'plus',
    'times',
    'leq',
    'not_lt',
    # exceptions
    'SemiringError',
    'MixedSemiringError',
    'GradeLiteralError',
]
