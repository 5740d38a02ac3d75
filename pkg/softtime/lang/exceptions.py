#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Exceptions used in the lang module."""

from typing import Optional

from ..exceptions import SoftTimeError


########################################################################################################################
# Lang Exceptions
########################################################################################################################

class LangError(SoftTimeError):
    """Lang Module: Base Exception."""
    fmt = 'Lang: {description}'


class ParseError(LangError):
    """Lang Module: program text does not follow the grammar."""
    fmt = 'Parse: {location}{description}'

    def __init__(self, desc: str = None, line: Optional[int] = None, column: Optional[int] = None,
                 source: Optional[str] = None) -> None:
        """Initialize the Parse Error exception.

        :param desc: what went wrong
        :param line: 1-based line of the offending token
        :param column: 1-based column of the offending token
        :param source: name of the program file
        """
        super().__init__(desc)
        self.line = line
        self.column = column
        self.source = source

    @property
    def location(self) -> str:
        """Prefix `file:line:column: ` built from the known parts."""
        parts = [str(part) for part in (self.source, self.line, self.column) if part is not None]
        return ':'.join(parts) + ': ' if parts else ''

    def __str__(self) -> str:
        return self.fmt.format(location=self.location, description=self.description)


class NameResolutionError(ParseError):
    """Lang Module: unknown or duplicate name."""
    fmt = 'Name: {location}{description}'


class DialectError(ParseError):
    """Lang Module: construct not allowed by the program dialect."""
    fmt = 'Dialect: {location}{description}'
    exit_code = 2


class ExpansionError(LangError):
    """Lang Module: idiom cannot be expanded."""
    fmt = 'Expansion: {description}'


class CallError(LangError):
    """Lang Module: procedure call does not match its declaration."""
    fmt = 'Call: {description}'
