#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Syntax tree of tsccp and tsccp-i programs.

All nodes are immutable and compare structurally; source positions are carried along but
ignored by comparison, so a re-parsed pretty-printed program equals the original.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union

from ..constraint import SoftConstraint, Variable
from ..semiring import Grade, Semiring, get_semiring

TSCCP = 'tsccp'
TSCCP_I = 'tsccp-i'
DIALECTS = (TSCCP, TSCCP_I)

# procedure copies made by the watchdog expansion are named p@watch<k>
WATCH_SUFFIX = '@watch'

Position = Optional[Tuple[int, int]]


@dataclass(frozen=True)
class ConstraintRef:
    """A constraint as written in the program: its name and its value."""

    name: str
    constraint: SoftConstraint

    def __str__(self) -> str:
        return self.name


# ----- thresholds ----------------------------------------------------------------------------------------------------
@dataclass(frozen=True)
class GradeThreshold:
    """Cut level `a`: a store passes when its blevel is not strictly below `a`."""

    grade: Grade

    valued = True

    def admits(self, store: SoftConstraint) -> bool:
        """Check the cut level on `store`."""
        return get_semiring(self.grade.kind).not_lt(store.blevel(), self.grade)

    def never_blocks(self) -> bool:
        """True for the semiring zero, which every store passes."""
        return self.grade == get_semiring(self.grade.kind).zero


@dataclass(frozen=True)
class ConstraintThreshold:
    """Cut constraint `phi`: a store passes when it is not strictly below `phi`."""

    ref: ConstraintRef

    valued = False

    def admits(self, store: SoftConstraint) -> bool:
        """Check the cut constraint on `store`."""
        return not store.strictly_below(self.ref.constraint)

    def never_blocks(self) -> bool:
        """True for the constant zero constraint."""
        c = self.ref.constraint
        return c.is_constant() and c.table[0] == c.semiring.zero


Threshold = Union[GradeThreshold, ConstraintThreshold]


def zero_threshold(semiring: Semiring) -> ConstraintThreshold:
    """The default threshold of the bare arrow: the constraint zero."""
    return ConstraintThreshold(ConstraintRef('zero', SoftConstraint.zero(semiring)))


def one_ref(semiring: Semiring) -> ConstraintRef:
    """Reference to the constraint one."""
    return ConstraintRef('one', SoftConstraint.one(semiring))


# ----- agents --------------------------------------------------------------------------------------------------------
class Agent:
    """Base of all agent nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Success(Agent):
    """The terminated agent."""

    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Tell(Agent):
    """`tell(c) ->th A`; valued threshold fires R1/Q1, constraint threshold R2/Q2."""

    ref: ConstraintRef
    threshold: Threshold
    cont: Agent
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Ask(Agent):
    """`ask(c) ->th A`; valued threshold fires R3/Q3, constraint threshold R4/Q4."""

    ref: ConstraintRef
    threshold: Threshold
    cont: Agent
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Sum(Agent):
    """Nondeterministic choice among ask-guarded branches."""

    branches: Tuple[Agent, ...]
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Parallel(Agent):
    """`A || B`."""

    left: Agent
    right: Agent
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Exists(Agent):
    """`exists x. A`: local variable."""

    var: Variable
    body: Agent
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Call(Agent):
    """Procedure call `p(y1, ..., yn)`."""

    name: str
    actuals: Tuple[Variable, ...]
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Now(Agent):
    """`now c then A else B` with instantaneous guard (tsccp only)."""

    ref: ConstraintRef
    threshold: Threshold
    then: Agent
    orelse: Agent
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Askp(Agent):
    """`askp t (c) ?th A : B`: wait up to `ticks` time-units for `c` (tsccp-i only)."""

    ticks: int
    ref: ConstraintRef
    threshold: Threshold
    then: Agent
    orelse: Agent
    pos: Position = field(default=None, compare=False, repr=False)


# ----- idioms --------------------------------------------------------------------------------------------------------
@dataclass(frozen=True)
class Delay(Agent):
    """A tell or ask whose arrow carries `ticks` extra delay slots."""

    ticks: int
    action: Agent
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Timeout(Agent):
    """`(Sum) timeout(m) B`: wait at most `ticks` time-units for a branch guard (tsccp only)."""

    branches: Tuple[Agent, ...]
    ticks: int
    orelse: Agent
    pos: Position = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Watchdog(Agent):
    """`do A watching c [else B]`: abort A the instant `c` holds (tsccp only)."""

    body: Agent
    threshold: Threshold
    ref: ConstraintRef
    orelse: Optional[Agent] = None
    pos: Position = field(default=None, compare=False, repr=False)


IDIOMS = (Delay, Timeout, Watchdog)


# ----- declarations --------------------------------------------------------------------------------------------------
@dataclass(frozen=True)
class ConstraintDecl:
    """Named constraint table and the parameter list it was declared with."""

    name: str
    params: Tuple[Variable, ...]
    constraint: SoftConstraint

    @property
    def ref(self) -> ConstraintRef:
        """Reference used by agents."""
        return ConstraintRef(self.name, self.constraint)


@dataclass(frozen=True)
class ProcDecl:
    """`p(x) :: A`."""

    name: str
    formals: Tuple[Variable, ...]
    body: Agent


@dataclass(frozen=True)
class Program:
    """`F.A` together with the semiring, variables and constraint tables it uses."""

    semiring: Semiring
    dialect: str
    variables: Tuple[Variable, ...]
    constraints: Tuple[ConstraintDecl, ...]
    procedures: Tuple[ProcDecl, ...]
    main: Agent
    source: Optional[str] = field(default=None, compare=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Program):
            return NotImplemented
        return (self.semiring.name == other.semiring.name and self.dialect == other.dialect
                and self.variables == other.variables and self.constraints == other.constraints
                and self.procedures == other.procedures and self.main == other.main)

    @property
    def procedure_map(self) -> Dict[str, ProcDecl]:
        """Declarations by name."""
        return {proc.name: proc for proc in self.procedures}

    def constraint(self, name: str) -> ConstraintRef:
        """Look up a declared or built-in constraint by name.

        :raises KeyError: unknown name
        """
        if name == 'one':
            return one_ref(self.semiring)
        if name == 'zero':
            return zero_threshold(self.semiring).ref
        for decl in self.constraints:
            if decl.name == name:
                return decl.ref
        raise KeyError(name)

    def variable(self, name: str) -> Variable:
        """Look up a declared variable.

        :raises KeyError: unknown name
        """
        for var in self.variables:
            if var.name == name:
                return var
        raise KeyError(name)
