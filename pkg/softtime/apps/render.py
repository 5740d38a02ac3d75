#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Trace documents of runs and their text renderings."""

import os
from typing import Any, Dict, List, Optional, Sequence

from jinja2 import Environment, FileSystemLoader

from .. import SOFTTIME_DATA_FOLDER
from ..engine import (Decision, Exploration, Label, RuleId, RunOutcome, RunStatus, TickRecord, column_names,
                      format_path, top_level_agents)
from ..lang import Agent, Program, free_vars

TEMPLATES_FOLDER = os.path.join(SOFTTIME_DATA_FOLDER, "templates")
TRACE_SCHEMA = "softtime-trace/1"


def _environment() -> Environment:
    return Environment(loader=FileSystemLoader(TEMPLATES_FOLDER), keep_trailing_newline=True)


def _delta_name(record: TickRecord) -> str:
    told = [event.told for event in record.events if event.told is not None]
    return '*'.join(told) if told else 'one'


def _tick(program: Program, record: TickRecord) -> Dict[str, Any]:
    fmt = program.semiring.format
    data: Dict[str, Any] = {'tick': record.tick}
    if record.label is not None:
        data['label'] = Label.name(record.label)
    if record.rule is not None:
        data['rule'] = RuleId.name(record.rule)
    data['events'] = [event.to_dict() for event in record.events]
    data['delta'] = {'name': _delta_name(record), 'table': record.delta.to_rows()}
    data['blevel'] = fmt(record.after.blevel())
    data['decisions'] = [list(decision) for decision in record.decisions]
    return data


def trace_document(program: Program, outcome: RunOutcome, semantics: str, file_name: str, max_steps: int,
                   initial_store: Optional[str] = None) -> Dict[str, Any]:
    """Serializable trace of a run.

    :param program: expanded program that ran
    :param outcome: result of the run
    :param semantics: mp or il
    :param file_name: name of the program file
    :param max_steps: step budget of the run
    :param initial_store: name of the constraint the run started from, None for 1
    :return: document of schema `softtime-trace/1`
    """
    fmt = program.semiring.format
    return {
        'schema': TRACE_SCHEMA,
        'program': {
            'file': file_name,
            'semiring': program.semiring.name,
            'dialect': program.dialect,
            'semantics': semantics,
            'columns': column_names(program.main),
        },
        'options': {'max_steps': max_steps, 'initial_store': initial_store},
        'nonstandard': outcome.nonstandard,
        'ticks': [_tick(program, record) for record in outcome.ticks],
        'outcome': {
            'status': outcome.status_tag,
            'clock': outcome.clock,
            'blevel': fmt(outcome.store.blevel()),
            'store': outcome.store.format(),
        },
        'decisions': [list(decision) for decision in outcome.decisions],
    }


def decisions_of(document: Dict[str, Any]) -> List[Decision]:
    """Decision log stored in a trace document."""
    return [(str(where), int(index)) for where, index in document.get('decisions', [])]


def _cells(main: Agent, tick: Dict[str, Any]) -> List[str]:
    paths = [format_path(path) for path, _ in top_level_agents(main)]
    cells: List[List[str]] = [[] for _ in paths]
    for event in tick['events']:
        column = 0
        for index, path in enumerate(paths):
            if path == '-' or event['path'] == path or event['path'].startswith(path + '.'):
                column = index
                break
        cells[column].append(event['rule'])
    return [' '.join(cell) or '.' for cell in cells]


def render_timeline(program: Program, document: Dict[str, Any]) -> str:
    """Timeline with one row per tick and one column per top-level parallel agent.

    :param program: expanded program that ran
    :param document: its trace document
    :return: text
    """
    labeled = any('label' in tick for tick in document['ticks'])
    header = ['t'] + (['label'] if labeled else []) + document['program']['columns'] + ['delta', 'blevel']
    rows = []
    for tick in document['ticks']:
        rows.append([str(tick['tick'])] + ([tick.get('label', '')] if labeled else [])
                    + _cells(program.main, tick) + [tick['delta']['name'], tick['blevel']])
    widths = [max(len(row[index]) for row in [header] + rows) for index in range(len(header))]
    template = _environment().get_template("timeline.txt.j2")
    return template.render(document=document, header=header, rows=rows, widths=widths)


def render_check(report: Dict[str, Any]) -> str:
    """Text form of a check report."""
    return _environment().get_template("check_report.txt.j2").render(report=report)


def exploration_document(program: Program, exploration: Exploration) -> Dict[str, Any]:
    """Observables of an exploration, each with the decisions of one computation reaching it.

    :param program: expanded program that was explored
    :param exploration: result of the exploration
    :return: serializable listing
    """
    visible = [var.name for var in free_vars(program.main)]
    observables: Dict[str, Sequence[Decision]] = {}
    counts = {RunStatus.name(status): 0 for status in RunStatus.tags()}
    for (status, store), terminal in sorted(exploration.terminals.items(), key=lambda item: item[1].store.format()):
        counts[RunStatus.name(status)] += 1
        if status == RunStatus.SUCCESS:
            observables.setdefault(store.project(visible).format(), terminal.witness)
    return {
        'observables': [{'store': store, 'witness': [list(decision) for decision in witness]}
                        for store, witness in sorted(observables.items())],
        'terminals': counts,
        'states': exploration.states,
        'complete': exploration.complete,
    }
