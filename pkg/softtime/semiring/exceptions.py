#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Exceptions used in the semiring module."""

from ..exceptions import SoftTimeError


########################################################################################################################
# Semiring Exceptions
########################################################################################################################

class SemiringError(SoftTimeError):
    """Semiring Module: Base Exception."""
    fmt = 'Semiring: {description}'


class MixedSemiringError(SemiringError):
    """Semiring Module: operands belong to different instances."""
    fmt = 'Semiring: mixed instances -> {description}'


class GradeLiteralError(SemiringError):
    """Semiring Module: literal is not a value of the instance."""
    fmt = 'Semiring: invalid grade -> {description}'
