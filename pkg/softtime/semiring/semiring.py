#!/usr/bin/env python
# -*- coding: UTF-8 -*-
#
# Copyright 2020 NXP
#
# SPDX-License-Identifier: BSD-3-Clause

"""C-semirings: values, the induced order and the four bundled instances."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Union

from .exceptions import GradeLiteralError, MixedSemiringError, SemiringError


class _Infinity:
    """The distinguished infinite cost of the weighted instance."""

    _instance = None

    def __new__(cls) -> '_Infinity':
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return 'INF'

    def __str__(self) -> str:
        return 'inf'

    def __reduce__(self) -> str:
        return 'INF'


INF = _Infinity()

GradeValue = Union[bool, Fraction, _Infinity]


@dataclass(frozen=True)
class Grade:
    """A value of a semiring instance; `kind` names the instance the value belongs to."""

    kind: str
    value: Any

    def __str__(self) -> str:
        return get_semiring(self.kind).format(self)

    def __repr__(self) -> str:
        return f"Grade({self.kind}:{self})"


class Semiring:
    """C-semiring <A, +, x, 0, 1>.

    Subclasses provide the carrier test and the two operations on raw values; order and
    comparisons are derived from `plus` only, so a partially ordered instance works unchanged.
    """

    name = 'abstract'
    zero_value: GradeValue = None
    one_value: GradeValue = None

    def _plus(self, a: Any, b: Any) -> Any:
        raise NotImplementedError()

    def _times(self, a: Any, b: Any) -> Any:
        raise NotImplementedError()

    def _contains(self, value: Any) -> bool:
        raise NotImplementedError()

    def _parse(self, text: str) -> Any:
        raise NotImplementedError()

    @property
    def zero(self) -> Grade:
        """The worst element, unit of plus."""
        return Grade(self.name, self.zero_value)

    @property
    def one(self) -> Grade:
        """The best element, unit of times."""
        return Grade(self.name, self.one_value)

    def grade(self, value: Any) -> Grade:
        """Wrap a raw value into a grade of this instance.

        :param value: raw value; int and str are converted to exact rationals
        :return: grade
        :raises GradeLiteralError: the value is outside the carrier
        """
        if isinstance(value, (int, str)) and not isinstance(value, bool):
            value = Fraction(value)
        if not self._contains(value):
            raise GradeLiteralError(f"{value!r} is not a value of the {self.name} semiring")
        return Grade(self.name, value)

    def _check(self, *grades: Grade) -> None:
        for grade in grades:
            if not isinstance(grade, Grade):
                raise SemiringError(f"Expected a grade, got {grade!r}")
            if grade.kind != self.name:
                raise MixedSemiringError(f"{grade.kind} grade used with the {self.name} semiring")

    def plus(self, a: Grade, b: Grade) -> Grade:
        """Least upper bound of `a` and `b`."""
        self._check(a, b)
        return Grade(self.name, self._plus(a.value, b.value))

    def times(self, a: Grade, b: Grade) -> Grade:
        """Combination of `a` and `b`."""
        self._check(a, b)
        return Grade(self.name, self._times(a.value, b.value))

    def sum(self, grades: Iterable[Grade]) -> Grade:
        """Fold of plus, `zero` for no grades."""
        result = self.zero
        for grade in grades:
            result = self.plus(result, grade)
        return result

    def product(self, grades: Iterable[Grade]) -> Grade:
        """Fold of times, `one` for no grades."""
        result = self.one
        for grade in grades:
            result = self.times(result, grade)
        return result

    def leq(self, a: Grade, b: Grade) -> bool:
        """True iff `b` is better than or equal to `a` (a + b = b)."""
        return self.plus(a, b) == b

    def not_lt(self, a: Grade, b: Grade) -> bool:
        """True iff `a` is not strictly below `b`; correct for partial orders too."""
        return not (self.leq(a, b) and a != b)

    def parse_literal(self, text: str) -> Grade:
        """Parse a grade literal of the program syntax.

        :param text: `5`, `3/2`, `0.25`, `inf`, `true` or `false`
        :return: grade of this instance
        :raises GradeLiteralError: literal is malformed or outside the carrier
        """
        try:
            value = self._parse(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise GradeLiteralError(f"'{text}' for the {self.name} semiring") from exc
        return self.grade(value)

    def format(self, grade: Grade) -> str:
        """Render a grade as a literal of the program syntax."""
        self._check(grade)
        return str(grade.value)

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}>"


def _parse_rational(text: str) -> Fraction:
    if text in ('inf', 'true', 'false'):
        raise ValueError(text)
    return Fraction(text)


class BooleanSemiring(Semiring):
    """Crisp constraints: <{false, true}, or, and, false, true>."""

    name = 'boolean'
    zero_value = False
    one_value = True

    def _plus(self, a: bool, b: bool) -> bool:
        return a or b

    def _times(self, a: bool, b: bool) -> bool:
        return a and b

    def _contains(self, value: Any) -> bool:
        return isinstance(value, bool)

    def _parse(self, text: str) -> bool:
        if text not in ('true', 'false'):
            raise ValueError(text)
        return text == 'true'

    def format(self, grade: Grade) -> str:
        self._check(grade)
        return 'true' if grade.value else 'false'


class FuzzySemiring(Semiring):
    """Fuzzy constraints: <[0, 1], max, min, 0, 1>."""

    name = 'fuzzy'
    zero_value = Fraction(0)
    one_value = Fraction(1)

    def _plus(self, a: Fraction, b: Fraction) -> Fraction:
        return max(a, b)

    def _times(self, a: Fraction, b: Fraction) -> Fraction:
        return min(a, b)

    def _contains(self, value: Any) -> bool:
        return isinstance(value, Fraction) and 0 <= value <= 1

    def _parse(self, text: str) -> Fraction:
        return _parse_rational(text)


class ProbabilisticSemiring(Semiring):
    """Probabilistic constraints: <[0, 1], max, x, 0, 1>."""

    name = 'probabilistic'
    zero_value = Fraction(0)
    one_value = Fraction(1)

    def _plus(self, a: Fraction, b: Fraction) -> Fraction:
        return max(a, b)

    def _times(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def _contains(self, value: Any) -> bool:
        return isinstance(value, Fraction) and 0 <= value <= 1

    def _parse(self, text: str) -> Fraction:
        return _parse_rational(text)


class WeightedSemiring(Semiring):
    """Weighted constraints: <R+ with inf, min, +, inf, 0>; INF is a symbol, never a number."""

    name = 'weighted'
    zero_value = INF
    one_value = Fraction(0)

    def _plus(self, a: GradeValue, b: GradeValue) -> GradeValue:
        if a is INF:
            return b
        if b is INF:
            return a
        return min(a, b)

    def _times(self, a: GradeValue, b: GradeValue) -> GradeValue:
        if a is INF or b is INF:
            return INF
        return a + b

    def _contains(self, value: Any) -> bool:
        return value is INF or (isinstance(value, Fraction) and value >= 0)

    def _parse(self, text: str) -> GradeValue:
        if text == 'inf':
            return INF
        return _parse_rational(text)


SEMIRINGS: Dict[str, Semiring] = {
    instance.name: instance
    for instance in (BooleanSemiring(), FuzzySemiring(), WeightedSemiring(), ProbabilisticSemiring())
}


def get_semiring(name: str) -> Semiring:
    """Return the bundled instance with given name.

    :param name: boolean, fuzzy, weighted or probabilistic
    :return: semiring instance
    :raises SemiringError: unknown instance
    """
    try:
        return SEMIRINGS[name]
    except KeyError:
        raise SemiringError(f"Unknown semiring '{name}', use one of: {', '.join(SEMIRINGS)}") from None


def _semiring_of(a: Grade, b: Grade) -> Semiring:
    if not isinstance(a, Grade) or not isinstance(b, Grade):
        raise SemiringError(f"Expected grades, got {a!r} and {b!r}")
    if a.kind != b.kind:
        raise MixedSemiringError(f"{a.kind} and {b.kind}")
    return get_semiring(a.kind)


def plus(a: Grade, b: Grade) -> Grade:
    """Least upper bound of two grades of the same instance."""
    return _semiring_of(a, b).plus(a, b)


def times(a: Grade, b: Grade) -> Grade:
    """Semiring multiplication of two grades of the same instance."""
    return _semiring_of(a, b).times(a, b)


def leq(a: Grade, b: Grade) -> bool:
    """The induced order: a <= b iff a + b = b."""
    return _semiring_of(a, b).leq(a, b)


def not_lt(a: Grade, b: Grade) -> bool:
    """Negated strict order used by the valued thresholds."""
    return _semiring_of(a, b).not_lt(a, b)
