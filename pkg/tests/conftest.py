#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause
import pytest

from tests.misc import PROGRAMS_DIR


@pytest.fixture
def programs_dir():
    return PROGRAMS_DIR
