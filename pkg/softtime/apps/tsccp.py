#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Console script for running and checking timed soft concurrent constraint programs."""

import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional

import click
import commentjson
from click_option_group import MutuallyExclusiveOptionGroup, optgroup

from .. import __version__ as softtime_version
from ..engine import (FirstChooser, PriorityScheduler, RandomChooser, RandomScheduler, ReplayChooser, ReplayScheduler,
                      explore, explore_mp, run, run_il)
from ..lang import TSCCP, Program, expand_idioms, load_program, pretty_print
from ..traces import check_compositionality, check_correctness, check_t_prime_equivalence
from ..utils.misc import write_file
from .render import decisions_of, exploration_document, render_check, render_timeline, trace_document
from .tsccp_helper import ToolConfig
from .utils import ConstraintName, catch_softtime_error, resolve_constraints

logger = logging.getLogger("TSCCP")

SEMANTICS = ['mp', 'il']
PROPERTIES = ['correctness', 'compositionality', 't-prime-equivalence']


def _default_semantics(program: Program) -> str:
    return 'mp' if program.dialect == TSCCP else 'il'


def _emit(text: str, output: Optional[str]) -> None:
    """Print `text` or save it into `output`."""
    if output:
        write_file(text, output)
        logger.info(f"Output written to {output}")
    else:
        click.echo(text, nl=not text.endswith('\n'))


def _dump(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2) + '\n'


@click.group()
@click.option('-c', '--config', type=click.Path(exists=True, dir_okay=False),
              help='JSON file (comments allowed) with option defaults per command')
@click.option('-v', '--verbose', 'log_level', flag_value=logging.INFO, help='Display more verbose output')
@click.option('-d', '--debug', 'log_level', flag_value=logging.DEBUG, help='Display debugging info')
@click.version_option(softtime_version, '--version')
@click.help_option('--help')
@click.pass_context
def main(ctx: click.Context, config: str, log_level: int) -> int:
    """Interpreter and checker of timed soft concurrent constraint programs."""
    logging.basicConfig(level=log_level or logging.WARNING)
    if config:
        ctx.default_map = ToolConfig.load(config).default_map
    return 0


@main.command(name='run')
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('-s', '--semantics', type=click.Choice(SEMANTICS),
              help='mp for maximal parallelism (tsccp), il for interleaving (tsccp-i); by default from the dialect')
@optgroup.group('Scheduling', cls=MutuallyExclusiveOptionGroup)
@optgroup.option('--seed', type=int, help='Resolve choices randomly with given seed')
@optgroup.option('--priority', 'order', flag_value='priority',
                 help='First enabled branch, or highest priority transition in document order (default)')
@optgroup.option('--reverse-priority', 'order', flag_value='reverse',
                 help='Highest priority transition in reverse document order (il only)')
@optgroup.option('--replay', type=click.File('r'), help='Repeat the decisions stored in a JSON trace')
@click.option('-m', '--max-steps', type=int, default=100, show_default=True, help='Step budget')
@click.option('-f', '--format', 'output_format', type=click.Choice(['timeline', 'json']), default='timeline',
              show_default=True, help='Output format')
@click.option('-i', '--initial-store', type=ConstraintName(),
              help='Start from a declared constraint instead of 1; the run is marked non-standard')
@click.option('-o', '--output', type=click.Path(), help='Save the output into a file instead of console')
@catch_softtime_error
def run_command(file: str, semantics: str, seed: Optional[int], order: Optional[str], replay: Optional[click.File],
                max_steps: int, output_format: str, initial_store: Optional[str], output: str) -> None:
    """Run the main agent of FILE and show its timeline.

    \b
    Exit status: 0 success, 3 suspended, 4 step budget exhausted.
    """
    program = load_program(file)
    decisions = None
    if replay:
        document = commentjson.load(replay)
        semantics = document['program']['semantics']
        max_steps = document['options']['max_steps']
        initial_store = document['options']['initial_store']
        decisions = decisions_of(document)
    semantics = semantics or _default_semantics(program)
    start = resolve_constraints(program, [initial_store])[0] if initial_store else None
    if semantics == 'mp':
        if decisions is not None:
            chooser = ReplayChooser(decisions)
        else:
            chooser = RandomChooser(seed) if seed is not None else FirstChooser()
        outcome = run(program, chooser, max_steps, start)
    else:
        if decisions is not None:
            scheduler = ReplayScheduler(decisions)
        elif seed is not None:
            scheduler = RandomScheduler(seed)
        else:
            scheduler = PriorityScheduler(reverse=order == 'reverse')
        outcome = run_il(program, scheduler, max_steps, start)
    expanded = expand_idioms(program)
    document = trace_document(expanded, outcome, semantics, os.path.basename(file), max_steps, initial_store)
    text = _dump(document) if output_format == 'json' else render_timeline(expanded, document)
    _emit(text, output)
    sys.exit(outcome.status)


@main.command(name='explore')
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('-m', '--max-steps', type=int, default=100, show_default=True, help='Depth bound')
@click.option('-b', '--state-budget', type=int, default=20000, show_default=True,
              help='Maximal number of expanded configurations')
@click.option('-p', '--prime', is_flag=True, help='Let inactive agents take time steps (tsccp-i only)')
@click.option('-f', '--format', 'output_format', type=click.Choice(['text', 'json']), default='text',
              show_default=True, help='Output format')
@click.option('-o', '--output', type=click.Path(), help='Save the output into a file instead of console')
@catch_softtime_error
def explore_command(file: str, max_steps: int, state_budget: int, prime: bool, output_format: str,
                    output: str) -> None:
    """List the observables of FILE, each with the decisions of one computation reaching it."""
    program = load_program(file)
    if program.dialect == TSCCP:
        exploration = explore_mp(program, max_steps, state_budget)
    else:
        exploration = explore(program, max_steps, state_budget, prime=prime)
    listing = exploration_document(expand_idioms(program), exploration)
    if not exploration.complete:
        bound = 'state budget' if exploration.exhausted else 'depth bound'
        click.echo(f"WARNING: {bound} reached, the listing is incomplete", err=True)
    if output_format == 'json':
        _emit(_dump(listing), output)
        return
    lines = [f"observables: {len(listing['observables'])}"]
    for item in listing['observables']:
        witness = ' '.join(f"{where}:{index}" for where, index in item['witness']) or '-'
        lines.append(f"  {item['store']}  witness {witness}")
    lines.append(', '.join(f"{status}: {count}" for status, count in listing['terminals'].items()))
    _emit('\n'.join(lines) + '\n', output)


@main.command(name='check')
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('-p', '--property', 'prop', type=click.Choice(PROPERTIES), default='correctness', show_default=True,
              help='Property to check')
@click.option('-l', '--maxlen', type=int, help='Length bound of the sequences [default: 8, 5 for compositionality]')
@click.option('-m', '--max-steps', type=int, default=12, show_default=True,
              help='Depth bound of t-prime-equivalence')
@click.option('-b', '--state-budget', type=int, help='Budget of every enumeration or exploration')
@click.option('--pool', multiple=True, type=ConstraintName(),
              help='Constraint the environment may add (compositionality); may be repeated')
@click.option('-f', '--format', 'output_format', type=click.Choice(['text', 'json']), default='text',
              show_default=True, help='Output format')
@click.option('-o', '--output', type=click.Path(), help='Save the output into a file instead of console')
@catch_softtime_error
def check_command(file: str, prop: str, maxlen: Optional[int], max_steps: int, state_budget: Optional[int],
                  pool: List[str], output_format: str, output: str) -> None:
    """Check a property of FILE on bounded sequences.

    \b
    Exit status: 0 pass, 5 fail, 6 inconclusive.
    """
    program = load_program(file)
    budget = {} if state_budget is None else {'state_budget': state_budget}
    if prop == 'correctness':
        report = check_correctness(program, maxlen or 8, **budget)
    elif prop == 'compositionality':
        report = check_compositionality(program, resolve_constraints(program, list(pool)), maxlen or 5, **budget)
    else:
        report = check_t_prime_equivalence(program, max_steps, **budget)
    data = report.to_dict()
    _emit(_dump(data) if output_format == 'json' else render_check(data), output)
    logger.info(f"{prop}: {report.verdict_tag}")
    sys.exit(report.verdict)


@main.command(name='expand')
@click.argument('file', type=click.Path(exists=True, dir_okay=False))
@click.option('-o', '--output', type=click.Path(), help='Save the output into a file instead of console')
@catch_softtime_error
def expand_command(file: str, output: str) -> None:
    """Print FILE with the delay, timeout and watchdog idioms translated into core agents."""
    _emit(pretty_print(expand_idioms(load_program(file))) + '\n', output)


@catch_softtime_error
def safe_main() -> Any:
    """Call the main function."""
    sys.exit(main())  # pylint: disable=no-value-for-parameter


if __name__ == "__main__":
    safe_main()  # pragma: no cover
