#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Exceptions used in the engine module."""

from ..exceptions import SoftTimeError


########################################################################################################################
# Engine Exceptions
########################################################################################################################

class EngineError(SoftTimeError):
    """Engine Module: Base Exception."""
    fmt = 'Engine: {description}'


class UnsupportedAgentError(EngineError):
    """Engine Module: agent kind not interpreted by the engine (idiom or other dialect)."""
    fmt = 'Engine: unsupported agent -> {description}'


class ReplayError(EngineError):
    """Engine Module: recorded decisions do not fit the run being replayed."""
    fmt = 'Engine: replay failed -> {description}'


class DialectMismatchError(EngineError):
    """Engine Module: program dialect does not fit the semantics requested."""
    fmt = 'Engine: dialect mismatch -> {description}'
    exit_code = 2
