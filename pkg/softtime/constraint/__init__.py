#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Module implementing finite-domain soft constraints."""

from .constraint import (Assignment, SoftConstraint, Variable, blevel, combine, combine_all, constant, diagonal,
                         entails, eval_constraint, hide, leq_constraint, project, strictly_below)
from .exceptions import AssignmentError, ConstraintError, DomainMismatchError

__all__ = [
    # classes
    'Variable',
    'SoftConstraint',
    'Assignment',
    # functions
    'eval_constraint',
    'combine',
    'combine_all',
    'project',
    'blevel',
    'leq_constraint',
    'strictly_below',
    'entails',
    'hide',
    'diagonal',
    'constant',
    # exceptions
    'ConstraintError',
    'AssignmentError',
    'DomainMismatchError',
]
