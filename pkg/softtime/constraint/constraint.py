#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""Finite-domain soft constraints and the cylindric operations over them.

A constraint is an explicit total table over the product of its support domains. Tables are
kept normalized: the support is sorted by variable rank and variables the table does not
depend on are removed, so two constraints are equal iff they are equal as functions.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..semiring import Grade, Semiring
from .exceptions import AssignmentError, ConstraintError, DomainMismatchError

Assignment = Mapping[str, str]


@dataclass(frozen=True)
class Variable:
    """Variable over a finite ordered domain.

    `rank` fixes the canonical support order: declared variables come in declaration order,
    fresh variables introduced by hiding follow them in creation order.
    """

    name: str
    domain: Tuple[str, ...]
    rank: Tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        if not self.domain:
            raise ConstraintError(f"Variable '{self.name}' has an empty domain")
        if len(set(self.domain)) != len(self.domain):
            raise ConstraintError(f"Variable '{self.name}' has repeated domain values")

    def __str__(self) -> str:
        return self.name


def _strides(support: Sequence[Variable]) -> Tuple[int, ...]:
    strides = []
    step = 1
    for var in reversed(support):
        strides.append(step)
        step *= len(var.domain)
    return tuple(reversed(strides))


class SoftConstraint:
    """Total function from assignments of the support to grades."""

    __slots__ = ('semiring', 'support', 'table', '_index', '_hash')

    def __init__(self, semiring: Semiring, support: Iterable[Variable], table: Iterable[Grade]) -> None:
        """Create a constraint; the result is normalized.

        :param semiring: instance all grades belong to
        :param support: variables, any order
        :param table: grades in `itertools.product` order of the given support domains
        :raises ConstraintError: table size does not match, or repeated variables
        """
        support = tuple(support)
        table = tuple(table)
        names = [var.name for var in support]
        if len(set(names)) != len(names):
            raise ConstraintError(f"Repeated variables in support: {', '.join(names)}")
        expected = 1
        for var in support:
            expected *= len(var.domain)
        if len(table) != expected:
            raise ConstraintError(f"Table has {len(table)} entries, {expected} expected")
        for grade in table:
            if not isinstance(grade, Grade) or grade.kind != semiring.name:
                raise ConstraintError(f"{grade!r} is not a {semiring.name} grade")
        ordered = tuple(sorted(support, key=lambda var: (var.rank, var.name)))
        if ordered != support:
            table = _reorder(support, table, ordered)
            support = ordered
        support, table = _prune(support, table)
        self.semiring = semiring
        self.support = support
        self.table = table
        self._index = {var.name: pos for pos, var in enumerate(support)}
        self._hash = hash((semiring.name, support, table))

    # ----- constructors --------------------------------------------------------------------------------------------
    @classmethod
    def constant(cls, semiring: Semiring, grade: Grade) -> 'SoftConstraint':
        """Empty-support constraint with the single value `grade`."""
        return cls(semiring, (), (grade,))

    @classmethod
    def one(cls, semiring: Semiring) -> 'SoftConstraint':
        """The constraint 1 (no information)."""
        return cls.constant(semiring, semiring.one)

    @classmethod
    def zero(cls, semiring: Semiring) -> 'SoftConstraint':
        """The constraint 0 (inconsistency)."""
        return cls.constant(semiring, semiring.zero)

    @classmethod
    def from_rows(cls, semiring: Semiring, support: Sequence[Variable],
                  rows: Mapping[Tuple[str, ...], Grade], default: Optional[Grade] = None) -> 'SoftConstraint':
        """Build a constraint from listed rows and an optional default for the rest.

        :param semiring: instance
        :param support: variables in the order of the row keys
        :param rows: tuple of domain symbols -> grade
        :param default: grade of the tuples not listed
        :return: constraint
        :raises ConstraintError: unknown symbol in a row, or missing rows without a default
        """
        table = []
        for key in rows:
            if len(key) != len(support):
                raise ConstraintError(f"Row {key} does not match support ({', '.join(map(str, support))})")
            for var, symbol in zip(support, key):
                if symbol not in var.domain:
                    raise AssignmentError(f"'{symbol}' is not in the domain of '{var.name}'")
        for key in itertools.product(*(var.domain for var in support)):
            if key in rows:
                table.append(rows[key])
            elif default is not None:
                table.append(default)
            else:
                raise ConstraintError(f"No row for {key} and no default")
        return cls(semiring, support, table)

    @classmethod
    def diagonal(cls, semiring: Semiring, x: Variable, y: Variable) -> 'SoftConstraint':
        """Equality constraint d_xy: one where the values agree, zero elsewhere.

        :raises DomainMismatchError: x and y have different domains
        """
        if x.domain != y.domain:
            raise DomainMismatchError(f"'{x.name}' and '{y.name}'")
        if x.name == y.name:
            return cls.one(semiring)
        table = [semiring.one if a == b else semiring.zero for a, b in itertools.product(x.domain, y.domain)]
        return cls(semiring, (x, y), table)

    # ----- basic access --------------------------------------------------------------------------------------------
    @property
    def variables(self) -> Tuple[str, ...]:
        """Names of the support variables in canonical order."""
        return tuple(var.name for var in self.support)

    def is_constant(self) -> bool:
        """True for an empty support."""
        return not self.support

    def rows(self) -> Iterator[Tuple[Tuple[str, ...], Grade]]:
        """Iterate (tuple of symbols, grade) over the whole table."""
        keys = itertools.product(*(var.domain for var in self.support))
        return zip(keys, self.table)

    def _lookup(self, assignment: Assignment) -> Grade:
        pos = 0
        for var, stride in zip(self.support, _strides(self.support)):
            pos += var.domain.index(assignment[var.name]) * stride
        return self.table[pos]

    def eval(self, assignment: Assignment) -> Grade:
        """Grade of the restriction of `assignment` to the support.

        :raises AssignmentError: a support variable is unassigned or gets a foreign symbol
        """
        for var in self.support:
            if var.name not in assignment:
                raise AssignmentError(f"'{var.name}' is not assigned")
            if assignment[var.name] not in var.domain:
                raise AssignmentError(f"'{assignment[var.name]}' is not in the domain of '{var.name}'")
        return self._lookup(assignment)

    def _check(self, other: 'SoftConstraint') -> None:
        if self.semiring.name != other.semiring.name:
            raise ConstraintError(f"{self.semiring.name} and {other.semiring.name} constraints mixed")
        for var in other.support:
            pos = self._index.get(var.name)
            if pos is not None and self.support[pos] != var:
                raise DomainMismatchError(f"two variables named '{var.name}'")

    # ----- cylindric operations ------------------------------------------------------------------------------------
    def combine(self, other: 'SoftConstraint') -> 'SoftConstraint':
        """Pointwise times over the union support."""
        self._check(other)
        one = self.semiring.one
        if other.is_constant() and other.table[0] == one:
            return self
        if self.is_constant() and self.table[0] == one:
            return other
        support = _union(self.support, other.support)
        table = []
        for key in itertools.product(*(var.domain for var in support)):
            assignment = dict(zip((var.name for var in support), key))
            table.append(self.semiring.times(self._lookup(assignment), other._lookup(assignment)))
        return SoftConstraint(self.semiring, support, table)

    def project(self, keep: Iterable[str]) -> 'SoftConstraint':
        """Eliminate every support variable not in `keep` by summing over its values."""
        keep = set(keep)
        kept = tuple(var for var in self.support if var.name in keep)
        if len(kept) == len(self.support):
            return self
        buckets: Dict[Tuple[str, ...], Grade] = {}
        positions = [self._index[var.name] for var in kept]
        for key, grade in self.rows():
            sub = tuple(key[pos] for pos in positions)
            buckets[sub] = self.semiring.plus(buckets[sub], grade) if sub in buckets else grade
        table = [buckets[key] for key in itertools.product(*(var.domain for var in kept))]
        return SoftConstraint(self.semiring, kept, table)

    def hide(self, name: str) -> 'SoftConstraint':
        """Existential quantification of one variable; identity outside the support."""
        return self.project(var.name for var in self.support if var.name != name)

    def blevel(self) -> Grade:
        """Best level of consistency: the projection on the empty support."""
        return self.project(()).table[0]

    def leq(self, other: 'SoftConstraint') -> bool:
        """Pointwise order: self is below `other` on every assignment."""
        self._check(other)
        support = _union(self.support, other.support)
        for key in itertools.product(*(var.domain for var in support)):
            assignment = dict(zip((var.name for var in support), key))
            if not self.semiring.leq(self._lookup(assignment), other._lookup(assignment)):
                return False
        return True

    def strictly_below(self, other: 'SoftConstraint') -> bool:
        """Pointwise order without equality."""
        return self != other and self.leq(other)

    def entails(self, other: 'SoftConstraint') -> bool:
        """A store entails `other` iff it lies below it."""
        return self.leq(other)

    def rename(self, mapping: Mapping[str, Variable]) -> 'SoftConstraint':
        """Rename support variables; names not in the support are ignored.

        :raises ConstraintError: two variables would collapse into one
        :raises DomainMismatchError: the target has another domain
        """
        if not any(var.name in mapping for var in self.support):
            return self
        support = []
        for var in self.support:
            target = mapping.get(var.name, var)
            if target.domain != var.domain:
                raise DomainMismatchError(f"renaming '{var.name}' to '{target.name}'")
            support.append(target)
        if len({var.name for var in support}) != len(support):
            raise ConstraintError(f"Renaming collapses variables of ({', '.join(self.variables)})")
        return SoftConstraint(self.semiring, support, self.table)

    # ----- python protocol -----------------------------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SoftConstraint):
            return NotImplemented
        return (self._hash == other._hash and self.semiring.name == other.semiring.name
                and self.support == other.support and self.table == other.table)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SoftConstraint({self.format()})"

    def format(self) -> str:
        """Compact text form: a literal for constants, `x=v,..:g` rows otherwise."""
        fmt = self.semiring.format
        if self.is_constant():
            return fmt(self.table[0])
        rows = []
        for key, grade in self.rows():
            cells = ','.join(f"{var.name}={sym}" for var, sym in zip(self.support, key))
            rows.append(f"{cells}:{fmt(grade)}")
        return '{' + ' '.join(rows) + '}'

    def to_rows(self) -> List[dict]:
        """Table as a list of {"assignment": {...}, "grade": "..."} dictionaries."""
        return [
            {'assignment': dict(zip(self.variables, key)), 'grade': self.semiring.format(grade)}
            for key, grade in self.rows()
        ]


def _union(first: Sequence[Variable], second: Sequence[Variable]) -> Tuple[Variable, ...]:
    merged = {var.name: var for var in first}
    for var in second:
        merged.setdefault(var.name, var)
    return tuple(sorted(merged.values(), key=lambda var: (var.rank, var.name)))


def _reorder(support: Sequence[Variable], table: Sequence[Grade],
             ordered: Sequence[Variable]) -> Tuple[Grade, ...]:
    rows = dict(zip(itertools.product(*(var.domain for var in support)), table))
    positions = [support.index(var) for var in ordered]
    reordered = {}
    for key, grade in rows.items():
        reordered[tuple(key[pos] for pos in positions)] = grade
    return tuple(reordered[key] for key in itertools.product(*(var.domain for var in ordered)))


def _prune(support: Tuple[Variable, ...], table: Tuple[Grade, ...]) -> Tuple[Tuple[Variable, ...], Tuple[Grade, ...]]:
    """Drop the variables the table does not depend on."""
    pos = 0
    while pos < len(support):
        strides = _strides(support)
        stride, size = strides[pos], len(support[pos].domain)
        block = stride * size
        independent = all(
            table[base + offset] == table[base + offset + value * stride]
            for base in range(0, len(table), block)
            for offset in range(stride)
            for value in range(1, size)
        )
        if independent:
            table = tuple(
                table[base + offset]
                for base in range(0, len(table), block)
                for offset in range(stride)
            )
            support = support[:pos] + support[pos + 1:]
        else:
            pos += 1
    return support, table


def combine_all(semiring: Semiring, constraints: Iterable[SoftConstraint]) -> SoftConstraint:
    """Combination of any number of constraints, 1 for none."""
    result = SoftConstraint.one(semiring)
    for constraint in constraints:
        result = result.combine(constraint)
    return result


def eval_constraint(c: SoftConstraint, assignment: Assignment) -> Grade:
    """Grade of `c` under `assignment`."""
    return c.eval(assignment)


def combine(c1: SoftConstraint, c2: SoftConstraint) -> SoftConstraint:
    """Combination (pointwise times)."""
    return c1.combine(c2)


def project(c: SoftConstraint, keep: Iterable[str]) -> SoftConstraint:
    """Projection onto `keep` (pointwise plus over the eliminated variables)."""
    return c.project(keep)


def blevel(c: SoftConstraint) -> Grade:
    """Best level of consistency."""
    return c.blevel()


def leq_constraint(c1: SoftConstraint, c2: SoftConstraint) -> bool:
    """Pointwise order between constraints."""
    return c1.leq(c2)


def strictly_below(c1: SoftConstraint, c2: SoftConstraint) -> bool:
    """Strict pointwise order between constraints."""
    return c1.strictly_below(c2)


def entails(store: SoftConstraint, c: SoftConstraint) -> bool:
    """Entailment of `c` by a store."""
    return store.entails(c)


def hide(c: SoftConstraint, name: str) -> SoftConstraint:
    """Existential quantification of variable `name`."""
    return c.hide(name)


def diagonal(semiring: Semiring, x: Variable, y: Variable) -> SoftConstraint:
    """Diagonal element d_xy."""
    return SoftConstraint.diagonal(semiring, x, y)


def constant(semiring: Semiring, grade: Grade) -> SoftConstraint:
    """Constant constraint with value `grade`."""
    return SoftConstraint.constant(semiring, grade)
