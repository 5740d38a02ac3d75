#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Exceptions used in the constraint module."""

from ..exceptions import SoftTimeError


########################################################################################################################
# Constraint Exceptions
########################################################################################################################

class ConstraintError(SoftTimeError):
    """Constraint Module: Base Exception."""
    fmt = 'Constraint: {description}'


class AssignmentError(ConstraintError):
    """Constraint Module: assignment does not cover the support or uses a foreign symbol."""
    fmt = 'Constraint: bad assignment -> {description}'


class DomainMismatchError(ConstraintError):
    """Constraint Module: variables with different domains used together."""
    fmt = 'Constraint: domain mismatch -> {description}'
