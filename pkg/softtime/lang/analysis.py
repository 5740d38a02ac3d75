#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Structural queries and rewrites on agents: free variables, renaming and call instantiation."""

import re
from dataclasses import replace
from typing import FrozenSet, Iterable, Iterator, List, Mapping, Optional, Set, Tuple, Union

from ..constraint import SoftConstraint, Variable, combine_all
from .ast import (Agent, Ask, Askp, Call, ConstraintRef, ConstraintThreshold, Delay, Exists, GradeThreshold, Now,
                  Parallel, Program, Success, Sum, Tell, Threshold, Timeout, Watchdog, zero_threshold)
from .exceptions import CallError, LangError

FRESH_PREFIX = '$'
_FRESH_NAME = re.compile(r'^\$(\d+)$')


def children(agent: Agent) -> List[Agent]:
    """Direct sub-agents in document order."""
    # pylint: disable=too-many-return-statements
    if isinstance(agent, (Tell, Ask)):
        return [agent.cont]
    if isinstance(agent, Sum):
        return list(agent.branches)
    if isinstance(agent, Parallel):
        return [agent.left, agent.right]
    if isinstance(agent, Exists):
        return [agent.body]
    if isinstance(agent, (Now, Askp)):
        return [agent.then, agent.orelse]
    if isinstance(agent, Delay):
        return [agent.action]
    if isinstance(agent, Timeout):
        return list(agent.branches) + [agent.orelse]
    if isinstance(agent, Watchdog):
        return [agent.body] if agent.orelse is None else [agent.body, agent.orelse]
    return []


def iter_agents(agent: Agent) -> Iterator[Agent]:
    """All nodes of the tree, pre-order."""
    stack = [agent]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def _threshold_vars(threshold: Threshold) -> Set[Variable]:
    if isinstance(threshold, ConstraintThreshold):
        return set(threshold.ref.constraint.support)
    return set()


def _own_vars(agent: Agent) -> Set[Variable]:
    """Variables a node mentions itself, not counting its sub-agents."""
    if isinstance(agent, (Tell, Ask, Now, Askp, Watchdog)):
        return set(agent.ref.constraint.support) | _threshold_vars(agent.threshold)
    if isinstance(agent, Call):
        return set(agent.actuals)
    return set()


def free_vars(agent: Agent) -> FrozenSet[Variable]:
    """Variables not bound by an enclosing hiding.

    :param agent: any agent, idioms included
    :return: set of variables
    """
    if isinstance(agent, Exists):
        return free_vars(agent.body) - {agent.var}
    result = _own_vars(agent)
    for child in children(agent):
        result |= free_vars(child)
    return frozenset(result)


def all_vars(agent: Agent) -> FrozenSet[Variable]:
    """Free and bound variables of an agent."""
    result: Set[Variable] = set()
    for node in iter_agents(agent):
        result |= _own_vars(node)
        if isinstance(node, Exists):
            result.add(node.var)
    return frozenset(result)


def is_success_shape(agent: Agent) -> bool:
    """True for success, a parallel composition of terminated agents, or a hiding over one."""
    if isinstance(agent, Success):
        return True
    if isinstance(agent, Parallel):
        return is_success_shape(agent.left) and is_success_shape(agent.right)
    if isinstance(agent, Exists):
        return is_success_shape(agent.body)
    return False


def is_fresh(var: Variable) -> bool:
    """True for names produced by FreshNames, which the parser never accepts."""
    return var.name.startswith(FRESH_PREFIX)


class FreshNames:
    """Source of variables `$1`, `$2`, ... ranked after every declared variable."""

    def __init__(self, start: int = 1) -> None:
        """Initialize the counter.

        :param start: index of the first name handed out
        """
        self.next_index = start

    @classmethod
    def beyond(cls, *items: Union[Agent, SoftConstraint]) -> 'FreshNames':
        """Counter starting after every fresh name used by the given agents and constraints."""
        used = [0]
        for item in items:
            variables: Iterable[Variable] = item.support if isinstance(item, SoftConstraint) else all_vars(item)
            for var in variables:
                match = _FRESH_NAME.match(var.name)
                if match:
                    used.append(int(match.group(1)))
        return cls(max(used) + 1)

    def fresh(self, template: Variable) -> Variable:
        """New variable over the domain of `template`."""
        index = self.next_index
        self.next_index += 1
        return Variable(f"{FRESH_PREFIX}{index}", template.domain, (1, index))


def _rename_ref(ref: ConstraintRef, mapping: Mapping[str, Variable]) -> ConstraintRef:
    renamed = ref.constraint.rename(mapping)
    return ref if renamed is ref.constraint else ConstraintRef(ref.name, renamed)


def _rename_threshold(threshold: Threshold, mapping: Mapping[str, Variable]) -> Threshold:
    if isinstance(threshold, GradeThreshold):
        return threshold
    ref = _rename_ref(threshold.ref, mapping)
    return threshold if ref is threshold.ref else ConstraintThreshold(ref)


def substitute(agent: Agent, mapping: Mapping[str, Variable], fresh: Optional[FreshNames] = None) -> Agent:
    """Rename free variables of `agent`.

    A hiding whose variable would capture a renaming target is renamed first with a fresh variable.

    :param agent: agent to rename
    :param mapping: variable name -> new variable (same domain)
    :param fresh: source of names for capture avoidance
    :return: renamed agent
    :raises LangError: capture cannot be avoided without `fresh`
    """
    # pylint: disable=too-many-return-statements
    if not mapping:
        return agent
    if isinstance(agent, Success):
        return agent
    if isinstance(agent, (Tell, Ask)):
        return replace(agent, ref=_rename_ref(agent.ref, mapping),
                       threshold=_rename_threshold(agent.threshold, mapping),
                       cont=substitute(agent.cont, mapping, fresh))
    if isinstance(agent, Sum):
        return replace(agent, branches=tuple(substitute(branch, mapping, fresh) for branch in agent.branches))
    if isinstance(agent, Parallel):
        return replace(agent, left=substitute(agent.left, mapping, fresh),
                       right=substitute(agent.right, mapping, fresh))
    if isinstance(agent, Exists):
        used = {var.name for var in free_vars(agent.body)}
        inner = {name: var for name, var in mapping.items() if name != agent.var.name and name in used}
        if not inner:
            return agent
        if agent.var in inner.values():
            if fresh is None:
                raise LangError(f"renaming would capture '{agent.var.name}'")
            body, renamed = fresh_rename(agent.body, agent.var, fresh)
            return replace(agent, var=renamed, body=substitute(body, inner, fresh))
        return replace(agent, body=substitute(agent.body, inner, fresh))
    if isinstance(agent, Call):
        return replace(agent, actuals=tuple(mapping.get(var.name, var) for var in agent.actuals))
    if isinstance(agent, (Now, Askp)):
        return replace(agent, ref=_rename_ref(agent.ref, mapping),
                       threshold=_rename_threshold(agent.threshold, mapping),
                       then=substitute(agent.then, mapping, fresh), orelse=substitute(agent.orelse, mapping, fresh))
    if isinstance(agent, Delay):
        return replace(agent, action=substitute(agent.action, mapping, fresh))
    if isinstance(agent, Timeout):
        return replace(agent, branches=tuple(substitute(branch, mapping, fresh) for branch in agent.branches),
                       orelse=substitute(agent.orelse, mapping, fresh))
    if isinstance(agent, Watchdog):
        return replace(agent, body=substitute(agent.body, mapping, fresh), ref=_rename_ref(agent.ref, mapping),
                       threshold=_rename_threshold(agent.threshold, mapping),
                       orelse=None if agent.orelse is None else substitute(agent.orelse, mapping, fresh))
    raise LangError(f"Unknown agent {agent!r}")


def fresh_rename(agent: Agent, var: Variable, fresh: FreshNames) -> Tuple[Agent, Variable]:
    """Replace free `var` by a new variable; the name is consumed even if `var` does not occur.

    :param agent: agent to rename
    :param var: variable to replace
    :param fresh: source of the new name
    :return: renamed agent and the new variable
    """
    renamed = fresh.fresh(var)
    return substitute(agent, {var.name: renamed}, fresh), renamed


def instantiate_call(program: Program, name: str, actuals: Iterable[Variable],
                     fresh: Optional[FreshNames] = None) -> Agent:
    """Agent a call `p(y)` behaves like.

    The body itself when the actuals are the formals; otherwise the body run in parallel with the
    diagonal constraints linking each renamed formal to its actual, all formals hidden.

    :param program: program holding the declarations
    :param name: procedure name
    :param actuals: actual parameters
    :param fresh: source of names when a formal collides with an actual of another position
    :return: agent
    :raises CallError: undeclared procedure, arity or domain mismatch, unavoidable capture
    """
    actuals = tuple(actuals)
    proc = program.procedure_map.get(name)
    if proc is None:
        raise CallError(f"undeclared procedure '{name}'")
    if len(proc.formals) != len(actuals):
        raise CallError(f"'{name}' expects {len(proc.formals)} arguments, {len(actuals)} given")
    for formal, actual in zip(proc.formals, actuals):
        if formal.domain != actual.domain:
            raise CallError(f"'{actual.name}' does not match the domain of formal '{formal.name}' of '{name}'")
    if actuals == proc.formals:
        return proc.body
    pairs = [(formal, actual) for formal, actual in zip(proc.formals, actuals) if formal != actual]
    bound = {formal for formal, _ in pairs}
    body = proc.body
    captured = [formal for formal in bound if formal in {actual for _, actual in pairs}]
    if captured:
        if fresh is None:
            raise CallError(f"call of '{name}' swaps parameters, fresh names needed")
        renaming = {formal.name: fresh.fresh(formal) for formal in sorted(captured, key=lambda v: v.rank)}
        body = substitute(body, renaming, fresh)
        pairs = [(renaming.get(formal.name, formal), actual) for formal, actual in pairs]
    semiring = program.semiring
    link = combine_all(semiring, (SoftConstraint.diagonal(semiring, formal, actual) for formal, actual in pairs))
    label = '*'.join(f"d({formal.name},{actual.name})" for formal, actual in pairs)
    agent: Agent = Parallel(Tell(ConstraintRef(label, link), zero_threshold(semiring), Success()), body)
    for formal, _ in reversed(pairs):
        agent = Exists(formal, agent)
    return agent
