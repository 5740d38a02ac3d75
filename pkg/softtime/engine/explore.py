#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Depth-first exploration of every computation of a program up to a depth and a state budget."""

import logging
from typing import Callable, Dict, Iterable, List, Tuple

from ..constraint import SoftConstraint
from ..lang import Agent, free_vars, is_success_shape
from .common import Configuration, Decision, Exploration, Observables, RunStatus, Terminal

logger = logging.getLogger("ENGINE:EXPLORE")

# successor agent, successor store, decisions taken
Successor = Tuple[Agent, SoftConstraint, Tuple[Decision, ...]]
Successors = Callable[[Agent, SoftConstraint], Iterable[Successor]]


def explore_states(start: Configuration, successors: Successors, max_steps: int = 100,
                   state_budget: int = 20000) -> Exploration:
    """Enumerate the terminal configurations reachable from `start`.

    A configuration already expanded with at least the same remaining depth is skipped, so cyclic
    computations end either on a revisit or at the depth bound.

    :param start: initial configuration
    :param successors: all successors of a configuration
    :param max_steps: depth bound, deeper computations end with status budget
    :param state_budget: maximal number of expanded configurations
    :return: terminals with the decisions of one computation reaching each of them
    """
    result = Exploration()
    seen: Dict[Tuple[Agent, SoftConstraint], int] = {}
    stack: List[Tuple[Agent, SoftConstraint, int, Tuple[Decision, ...]]] = [(start.agent, start.store, 0, ())]
    while stack:
        agent, store, depth, witness = stack.pop()
        if is_success_shape(agent):
            result.add(Terminal(RunStatus.SUCCESS, store, agent, witness))
            continue
        if depth >= max_steps:
            result.truncated = True
            result.add(Terminal(RunStatus.BUDGET, store, agent, witness))
            continue
        remaining = max_steps - depth
        key = (agent, store)
        if seen.get(key, -1) >= remaining:
            continue
        seen[key] = remaining
        result.states += 1
        if result.states > state_budget:
            logger.warning(f"State budget {state_budget} exhausted")
            result.exhausted = True
            break
        found = list(successors(agent, store))
        if not found:
            result.add(Terminal(RunStatus.SUSPENDED, store, agent, witness))
            continue
        for next_agent, next_store, decisions in reversed(found):
            stack.append((next_agent, next_store, depth + 1, witness + decisions))
    logger.debug(f"Explored {result.states} configurations, {len(result.terminals)} terminals")
    return result


def observables_of(main: Agent, exploration: Exploration) -> Observables:
    """Successful final stores projected onto the free variables of `main`."""
    visible = [var.name for var in free_vars(main)]
    stores = frozenset(store.project(visible) for store in exploration.stores(RunStatus.SUCCESS))
    return Observables(stores, exploration.exhausted, exploration.truncated)
