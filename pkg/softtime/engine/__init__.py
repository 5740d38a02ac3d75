#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Module implementing the operational semantics: maximal parallelism (tsccp) and interleaving (tsccp-i)."""

from .common import (Chooser, Configuration, Decision, Event, Exploration, FirstChooser, LabeledTransition,
                     Observables, PriorityScheduler, RandomChooser, RandomScheduler, ReplayChooser, ReplayScheduler,
                     RunOutcome, RunStatus, Scheduler, StepResult, Terminal, TickRecord, column_names, format_path,
                     initial_configuration, parse_path, top_level_agents)
from .exceptions import DialectMismatchError, EngineError, ReplayError, UnsupportedAgentError
from .explore import explore_states, observables_of
from .il import explore, observables_il, observables_il_prime, run_il, transitions, transitions_prime
from .mp import can_step, explore_mp, observables_mp, run, step
from .mp import transitions as transitions_mp
from .rules import Label, RuleId

__all__ = [
    # classes
    'Configuration',
    'Event',
    'StepResult',
    'LabeledTransition',
    'TickRecord',
    'RunOutcome',
    'Terminal',
    'Exploration',
    'Observables',
    'Chooser',
    'FirstChooser',
    'RandomChooser',
    'ReplayChooser',
    'Scheduler',
    'PriorityScheduler',
    'RandomScheduler',
    'ReplayScheduler',
    # enums
    'RunStatus',
    'RuleId',
    'Label',
    # types
    'Decision',
    # functions
    'step',
    'can_step',
    'run',
    'transitions_mp',
    'explore_mp',
    'observables_mp',
    'transitions',
    'transitions_prime',
    'run_il',
    'explore',
    'observables_il',
    'observables_il_prime',
    'explore_states',
    'observables_of',
    'initial_configuration',
    'top_level_agents',
    'column_names',
    'format_path',
    'parse_path',
    # exceptions
    'EngineError',
    'DialectMismatchError',
    'UnsupportedAgentError',
    'ReplayError',
]
