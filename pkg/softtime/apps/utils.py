#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Module for general utilities used by applications."""

import sys
from functools import wraps
from typing import Any, Callable, List

import click

from ..constraint import SoftConstraint
from ..exceptions import SoftTimeError
from ..lang import Program


class ConstraintName(click.ParamType):
    """Name of a constraint declared by the program, or `one`/`zero`; resolved once the program is loaded."""
    name = 'constraint'

    def convert(self, value: str, param: click.Parameter = None, ctx: click.Context = None) -> str:
        """Check the shape of the name.

        :param value: value to convert
        :param param: Click parameter, defaults to None
        :param ctx: Click context, defaults to None
        :return: the name
        """
        if not value.isidentifier():
            self.fail(f"{value!r} is not a constraint name", param, ctx)
        return value


def resolve_constraints(program: Program, names: List[str]) -> List[SoftConstraint]:
    """Constraints of the program with given names.

    :raises SoftTimeError: unknown name
    """
    result = []
    for name in names:
        try:
            result.append(program.constraint(name).constraint)
        except KeyError as exc:
            raise SoftTimeError(f"Unknown constraint '{name}'") from exc
    return result


def catch_softtime_error(function: Callable) -> Callable:
    """Catch the SoftTimeError and exit with its exit code."""

    @wraps(function)
    def wrapper(*args: tuple, **kwargs: dict) -> Any:
        try:
            retval = function(*args, **kwargs)
            return retval
        except SoftTimeError as softtime_exc:
            click.echo(f"ERROR:{softtime_exc}", err=True)
            sys.exit(softtime_exc.exit_code)
        except Exception as base_exc:  # pylint: disable=W0703
            click.echo(f"GENERAL ERROR:{base_exc}", err=True)
            sys.exit(1)

    return wrapper
