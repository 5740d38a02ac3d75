#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Base for SoftTime exceptions."""

#######################################################################
# # SoftTime Exceptions
#######################################################################


class SoftTimeError(Exception):
    """SoftTime Base Exception."""

    fmt = 'SoftTime: {description}'
    exit_code = 1

    def __init__(self, desc: str = None) -> None:
        """Initialize the base SoftTime Exception."""
        super().__init__()
        self.description = "Unknown Error" if desc is None else desc

    def __str__(self) -> str:
        return self.fmt.format(description=self.description)
