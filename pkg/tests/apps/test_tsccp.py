#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause
"""Tests for the tsccp utility."""
import json
import os

from click.testing import CliRunner

from softtime.apps.tsccp import main
from softtime.apps.tsccp_helper import ToolConfigError
from softtime.utils.misc import load_file, write_file
from tests.misc import compare_text_file


def program(programs_dir, name):
    return os.path.join(programs_dir, name)


def test_command_line_interface():
    """Test for main menu options."""
    runner = CliRunner()
    result = runner.invoke(main, ['--help'])
    assert result.exit_code == 0, result.output

    assert 'main [OPTIONS] COMMAND [ARGS]' in result.output
    assert 'Interpreter and checker of timed soft concurrent constraint programs.' in result.output
    for command in ('run', 'explore', 'check', 'expand'):
        assert command in result.output


def test_run_timeline(programs_dir):
    runner = CliRunner()
    result = runner.invoke(main, ['run', program(programs_dir, 'example1.tsccp')])
    assert result.exit_code == 0, result.output
    assert 'example1.tsccp (mp, weighted semiring)' in result.output
    assert 'outcome: success at clock 5, blevel 5' in result.output
    lines = result.output.splitlines()
    assert lines[1].split(' | ')[:3] == ['t', 'A1', 'A2']
    assert lines[2].split(' | ')[:3] == ['0', 'R1', 'R1']


def test_run_il_timeline(programs_dir):
    runner = CliRunner()
    result = runner.invoke(main, ['run', '--reverse-priority', program(programs_dir, 'three_agents.tscci')])
    assert result.exit_code == 0, result.output
    assert 'three_agents.tscci (il, weighted semiring)' in result.output
    assert 'label' in result.output.splitlines()[1]
    assert 'outcome: success at clock 4, blevel 11' in result.output


def test_run_json_and_replay(tmpdir, programs_dir):
    first = os.path.join(tmpdir, 'first.json')
    second = os.path.join(tmpdir, 'second.json')
    file_name = program(programs_dir, 'sum_race.tsccp')
    runner = CliRunner()
    result = runner.invoke(main, ['run', '--seed', '3', '-f', 'json', '-o', first, file_name])
    assert result.exit_code == 0, result.output
    document = json.loads(load_file(first))
    assert document['schema'] == 'softtime-trace/1'
    assert document['program']['semantics'] == 'mp'
    assert len(document['decisions']) == 1
    assert document['ticks'][0]['rule'] == 'R7'
    result = runner.invoke(main, ['run', '--replay', first, '-f', 'json', '-o', second, file_name])
    assert result.exit_code == 0, result.output
    assert json.loads(load_file(second)) == document


def test_run_exit_codes(programs_dir):
    runner = CliRunner()
    result = runner.invoke(main, ['run', program(programs_dir, 'valued_block.tsccp')])
    assert result.exit_code == 3, result.output
    assert 'outcome: suspended at clock 0' in result.output
    result = runner.invoke(main, ['run', '-m', '2', program(programs_dir, 'example1.tsccp')])
    assert result.exit_code == 4, result.output


def test_run_initial_store(programs_dir):
    runner = CliRunner()
    result = runner.invoke(main, ['run', '-i', 'c2', program(programs_dir, 'example1.tsccp')])
    assert result.exit_code == 0, result.output
    assert 'non-standard run from c2' in result.output
    result = runner.invoke(main, ['run', '-i', 'missing', program(programs_dir, 'example1.tsccp')])
    assert result.exit_code == 1, result.output
    assert "Unknown constraint 'missing'" in result.output


def test_run_wrong_semantics(programs_dir):
    runner = CliRunner()
    result = runner.invoke(main, ['run', '-s', 'mp', program(programs_dir, 'three_agents.tscci')])
    assert result.exit_code == 2, result.output
    assert 'ERROR:' in result.output


def test_run_syntax_error(tmpdir):
    file_name = os.path.join(tmpdir, 'bad.tsccp')
    write_file("main: tell(one) ->\n", file_name)
    result = CliRunner().invoke(main, ['run', file_name])
    assert result.exit_code == 1, result.output
    assert 'bad.tsccp:' in result.output


def test_explore(programs_dir):
    runner = CliRunner()
    result = runner.invoke(main, ['explore', program(programs_dir, 'sum_race.tsccp')])
    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[0] == 'observables: 2'
    assert 'witness -:1' in result.output
    result = runner.invoke(main, ['explore', '-f', 'json', program(programs_dir, 'three_agents.tscci')])
    assert result.exit_code == 0, result.output
    listing = json.loads(result.output)
    assert listing['complete']
    assert len(listing['observables']) == 2
    result = runner.invoke(main, ['explore', '-m', '1', program(programs_dir, 'example1.tsccp')])
    assert result.exit_code == 0, result.output
    assert 'WARNING: depth bound reached' in result.output
    assert 'observables: 0' in result.output


def test_check(programs_dir):
    runner = CliRunner()
    result = runner.invoke(main, ['check', '-l', '5', program(programs_dir, 'parallel_tells.tsccp')])
    assert result.exit_code == 0, result.output
    assert 'property: correctness' in result.output
    assert 'verdict: pass' in result.output
    result = runner.invoke(main, ['check', '-p', 'compositionality', '-l', '3', '--pool', 'c1', '-f', 'json',
                                  program(programs_dir, 'parallel_tells.tsccp')])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)['verdict'] == 'pass'
    result = runner.invoke(main, ['check', '-p', 't-prime-equivalence', program(programs_dir, 'askp_race.tscci')])
    assert result.exit_code == 0, result.output


def test_check_inconclusive(programs_dir):
    runner = CliRunner()
    result = runner.invoke(main, ['check', '-l', '7', '-b', '3', program(programs_dir, 'example1.tsccp')])
    assert result.exit_code == 6, result.output
    assert 'verdict: inconclusive' in result.output
    # a depth bound below the horizon of the program leaves the explorations incomplete
    result = runner.invoke(main, ['check', '-p', 't-prime-equivalence', '-m', '2',
                                  program(programs_dir, 'three_agents.tscci')])
    assert result.exit_code == 6, result.output
    assert 'verdict: inconclusive' in result.output


def test_expand(tmpdir, programs_dir):
    output = os.path.join(tmpdir, 'expanded.tsccp')
    runner = CliRunner()
    result = runner.invoke(main, ['expand', '-o', output, program(programs_dir, 'example3.tsccp')])
    assert result.exit_code == 0, result.output
    text = load_file(output)
    assert 'watching' not in text
    assert 'now' in text
    # the expansion is itself a program
    result = runner.invoke(main, ['run', output])
    assert result.exit_code == 0, result.output
    assert 'outcome: success at clock 2' in result.output


def test_config_file(tmpdir, programs_dir):
    config = os.path.join(tmpdir, 'config.json')
    write_file('{\n  // short runs\n  "run": {"max_steps": 3}\n}\n', config)
    runner = CliRunner()
    result = runner.invoke(main, ['-c', config, 'run', program(programs_dir, 'example1.tsccp')])
    assert result.exit_code == 4, result.output
    write_file('{"run": {"max_steps": "many"}}', config)
    result = runner.invoke(main, ['-c', config, 'run', program(programs_dir, 'example1.tsccp')])
    assert result.exit_code != 0
    assert isinstance(result.exception, ToolConfigError)


def test_timeline_golden(tmpdir, data_dir, programs_dir):
    output = os.path.join(tmpdir, 'example1.timeline.txt')
    result = CliRunner().invoke(main, ['run', '-o', output, program(programs_dir, 'example1.tsccp')])
    assert result.exit_code == 0, result.output
    compare_text_file(os.path.join(data_dir, 'example1.timeline.txt'), load_file(output))
