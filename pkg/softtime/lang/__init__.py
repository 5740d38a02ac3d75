#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Module implementing the tsccp and tsccp-i languages: syntax tree, parser, printer and idiom expansion."""

from .analysis import (FreshNames, all_vars, children, free_vars, fresh_rename, instantiate_call, is_fresh,
                       is_success_shape, iter_agents, substitute)
from .ast import (DIALECTS, IDIOMS, TSCCP, TSCCP_I, Agent, Ask, Askp, Call, ConstraintDecl, ConstraintRef,
                  ConstraintThreshold, Delay, Exists, GradeThreshold, Now, Parallel, ProcDecl, Program, Success, Sum,
                  Tell, Threshold, Timeout, Watchdog, one_ref, zero_threshold)
from .exceptions import CallError, DialectError, ExpansionError, LangError, NameResolutionError, ParseError
from .expand import IdiomExpander, expand_idioms
from .parser import load_program, parse
from .printer import format_agent, pretty_print

__all__ = [
    # classes
    'Agent',
    'Success',
    'Tell',
    'Ask',
    'Sum',
    'Parallel',
    'Exists',
    'Call',
    'Now',
    'Askp',
    'Delay',
    'Timeout',
    'Watchdog',
    'GradeThreshold',
    'ConstraintThreshold',
    'Threshold',
    'ConstraintRef',
    'ConstraintDecl',
    'ProcDecl',
    'Program',
    'FreshNames',
    'IdiomExpander',
    # constants
    'TSCCP',
    'TSCCP_I',
    'DIALECTS',
    'IDIOMS',
    # functions
    'parse',
    'load_program',
    'pretty_print',
    'format_agent',
    'expand_idioms',
    'free_vars',
    'all_vars',
    'children',
    'iter_agents',
    'substitute',
    'fresh_rename',
    'instantiate_call',
    'is_success_shape',
    'is_fresh',
    'one_ref',
    'zero_threshold',
    # exceptions
    'LangError',
    'ParseError',
    'NameResolutionError',
    'DialectError',
    'ExpansionError',
    'CallError',
]
