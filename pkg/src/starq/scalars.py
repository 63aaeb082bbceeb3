"""Exact scalars: rationals extended by formal transcendental parameters.

A scalar is an exact rational number plus a finitely supported rational
combination of named parameters.  The parameters are treated as
algebraically independent transcendentals over the rationals, which makes
integrality decidable: a scalar is an integer exactly when its formal
part is empty and its rational part has denominator one.

The partial relation ``succ(a, b)`` holds when a − b is a positive
integer, or when a and b are both zero.  It drives the
finite-dimensionality test and the order behaviour of the star action,
so it lives here next to the arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple, Union

from .errors import ScalarParseError

RationalLike = Union[int, Fraction]

_FRACTION_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_TERM_RE = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?\*?(?P<name>[A-Za-z_]\w*)(?:/(?P<den>\d+))?$"
)


@dataclass(frozen=True)
class Scalar:
    """Immutable exact scalar: ``rational + sum(coeff * parameter)``.

    ``formal`` is a sorted tuple of (parameter name, nonzero coefficient)
    pairs; keeping it canonical makes equality and hashing structural.
    """

    rational: Fraction = Fraction(0)
    formal: Tuple[Tuple[str, Fraction], ...] = ()

    def __post_init__(self):
        cleaned = tuple(sorted((n, c) for n, c in self.formal if c != 0))
        object.__setattr__(self, "rational", Fraction(self.rational))
        object.__setattr__(self, "formal", cleaned)

    @staticmethod
    def of(value: RationalLike) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return Scalar(Fraction(value))

    @staticmethod
    def param(name: str, coeff: RationalLike = 1) -> "Scalar":
        return Scalar(Fraction(0), ((name, Fraction(coeff)),))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        other = Scalar.of(other)
        terms = dict(self.formal)
        for name, coeff in other.formal:
            terms[name] = terms.get(name, Fraction(0)) + coeff
        return Scalar(self.rational + other.rational, tuple(terms.items()))

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-Scalar.of(other))

    def __neg__(self) -> "Scalar":
        return self.scale(-1)

    def scale(self, factor: RationalLike) -> "Scalar":
        f = Fraction(factor)
        return Scalar(self.rational * f, tuple((n, c * f) for n, c in self.formal))

    def shift(self, k: int) -> "Scalar":
        return Scalar(self.rational + k, self.formal)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.rational == 0 and not self.formal

    def is_rational(self) -> bool:
        return not self.formal

    def is_integer(self) -> bool:
        return not self.formal and self.rational.denominator == 1

    def as_integer(self) -> Optional[int]:
        if self.is_integer():
            return int(self.rational)
        return None

    def parameters(self) -> Tuple[str, ...]:
        return tuple(n for n, _ in self.formal)

    def sort_key(self):
        # Total order used only for deterministic output, not comparison
        # of magnitudes (formal scalars are not ordered).
        return (self.formal, self.rational)

    # -- text form --------------------------------------------------------

    def __str__(self) -> str:
        parts = []
        for name, coeff in self.formal:
            parts.append(_format_term(name, coeff, first=not parts))
        if self.rational != 0 or not parts:
            r = self.rational
            if not parts:
                parts.append(str(r))
            else:
                parts.append(("+" if r > 0 else "-") + str(abs(r)))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Scalar({self})"


def _format_term(name: str, coeff: Fraction, first: bool) -> str:
    sign = "-" if coeff < 0 else ("" if first else "+")
    coeff = abs(coeff)
    if coeff == 1:
        body = name
    elif coeff.denominator == 1:
        body = f"{coeff.numerator}{name}"
    elif coeff.numerator == 1:
        body = f"{name}/{coeff.denominator}"
    else:
        body = f"{coeff.numerator}{name}/{coeff.denominator}"
    return sign + body


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar literal: ``5``, ``-3/2``, ``c``, ``c+1``, ``c/2-3``, ``3c/2``."""
    src = text.replace(" ", "")
    if not src:
        raise ScalarParseError("empty scalar literal")
    total = Scalar()
    for sign, term in _split_terms(src):
        total = total + _parse_term(term, src).scale(sign)
    return total


def _split_terms(src: str):
    terms = []
    sign, start = 1, 0
    if src[0] in "+-":
        sign = -1 if src[0] == "-" else 1
        start = 1
    pos = start
    for i in range(start, len(src)):
        if src[i] in "+-" and i > pos and src[i - 1] not in "*/":
            terms.append((sign, src[pos:i]))
            sign = -1 if src[i] == "-" else 1
            pos = i + 1
    terms.append((sign, src[pos:]))
    return terms


def _parse_term(term: str, src: str) -> Scalar:
    if not term:
        raise ScalarParseError(f"malformed scalar literal: {src!r}")
    if _FRACTION_RE.match(term):
        return Scalar(Fraction(term))
    m = _TERM_RE.match(term)
    if not m:
        raise ScalarParseError(f"malformed scalar literal: {src!r}")
    coeff = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
    if m.group("den"):
        coeff /= int(m.group("den"))
    return Scalar.param(m.group("name"), coeff)


# -- relations ------------------------------------------------------------


def succ(a: Scalar, b: Scalar) -> bool:
    """True when a − b is a positive integer, or a = b = 0."""
    a, b = Scalar.of(a), Scalar.of(b)
    if a.is_zero() and b.is_zero():
        return True
    diff = a - b
    return diff.is_integer() and diff.rational > 0


def integer_diff(a: Scalar, b: Scalar) -> Optional[int]:
    """The integer a − b when that difference is an integer, else None."""
    return (Scalar.of(a) - Scalar.of(b)).as_integer()


ZERO = Scalar()
ONE = Scalar.of(1)


def scalars(values: Iterable[RationalLike]) -> Tuple[Scalar, ...]:
    return tuple(Scalar.of(v) for v in values)
