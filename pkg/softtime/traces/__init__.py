#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Module implementing reactive sequences, their operational and compositional sets and the bounded checks."""

from .checks import (CHECKS, CheckReport, Comparison, Verdict, check_compositionality, check_correctness,
                     check_t_prime_equivalence)
from .exceptions import SequenceError, TracesError
from .il import bar_askp, bar_exists, bar_parallel, bar_success, bar_sum, bar_tell, denote_il, enumerate_R_il
from .mp import denote_mp, enumerate_R, sem_exists, sem_now, sem_parallel, sem_success, sem_sum, sem_tell
from .sequences import (LabeledReactiveSeq, Reaction, ReactiveSeq, is_connected, make_sequence, normalize,
                        normalize_sequence, sequence_of_run)
from .sets import EMPTY, EPSILON, Deferred, Enumeration, SequenceSet, materialize

__all__ = [
    # sequences
    'Reaction',
    'ReactiveSeq',
    'LabeledReactiveSeq',
    'make_sequence',
    'sequence_of_run',
    'is_connected',
    'normalize',
    'normalize_sequence',
    # sets
    'SequenceSet',
    'Deferred',
    'Enumeration',
    'EPSILON',
    'EMPTY',
    'materialize',
    # tsccp
    'sem_success',
    'sem_tell',
    'sem_sum',
    'sem_parallel',
    'sem_now',
    'sem_exists',
    'enumerate_R',
    'denote_mp',
    # tsccp-i
    'bar_success',
    'bar_tell',
    'bar_sum',
    'bar_parallel',
    'bar_askp',
    'bar_exists',
    'enumerate_R_il',
    'denote_il',
    # checks
    'Verdict',
    'Comparison',
    'CheckReport',
    'CHECKS',
    'check_correctness',
    'check_compositionality',
    'check_t_prime_equivalence',
    # exceptions
    'TracesError',
    'SequenceError',
]
