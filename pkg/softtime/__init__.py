#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""SoftTime is an interpreter for timed soft concurrent constraint programs.

It provides
    - c-semirings and finite-domain soft constraints
    - a parser for tsccp and tsccp-i programs including the delay, timeout and watchdog idioms
    - small-step engines for maximal parallelism and for interleaving
    - bounded reactive-sequence semantics with executable correctness checks
It is delivered as a python library with its functionality also presented as the `tsccp` CLI utility.
"""

import os

from .__version__ import __version__ as version
from .exceptions import SoftTimeError

SOFTTIME_DATA_FOLDER = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")

__author__ = "NXP"
__license__ = "BSD-3-Clause"
__version__ = version
__release__ = "alpha"
