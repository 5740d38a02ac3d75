#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Exceptions used in the traces module."""

from ..exceptions import SoftTimeError


########################################################################################################################
# Traces Exceptions
########################################################################################################################

class TracesError(SoftTimeError):
    """Traces Module: Base Exception."""
    fmt = 'Traces: {description}'


class SequenceError(TracesError):
    """Traces Module: reactions do not form a monotone reactive sequence."""
    fmt = 'Traces: invalid sequence -> {description}'
