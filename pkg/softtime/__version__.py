#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""SoftTime version.

Having the version in a separate file makes it easier to share it with setup.py
"""

__version__ = "0.1.0"
