"""Weights, the root-lattice partial order, and the three reflection actions.

A weight is an ordered n-tuple of exact scalars.  Three actions of the
simple reflections s_1 .. s_{n-1} are provided:

* ``reflect``  — plain coordinate swap;
* ``dot``      — the rho-shifted twist: (a_i, a_{i+1}) -> (a_{i+1}-1, a_i+1);
* ``star``     — swap on typical pairs (a_i + a_{i+1} != 0), dot on
  atypical ones.  Under the star action the generators only satisfy the
  involution and distant-commutation relations, so words act letter by
  letter, rightmost first.

Two weights are comparable when their difference is an integer combination
of simple roots with all partial sums of one sign; ``compare`` returns a
four-valued result so that "not less" is never conflated with "greater".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from .errors import LengthMismatch, WeightParseError
from .scalars import Scalar, parse_scalar, succ

Word = Tuple[int, ...]


class Comparison(Enum):
    LESS = "lt"
    EQUAL = "eq"
    GREATER = "gt"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Weight:
    coords: Tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.coords) < 2:
            raise WeightParseError("weights need at least two coordinates")
        object.__setattr__(self, "coords", tuple(Scalar.of(c) for c in self.coords))

    @staticmethod
    def of(values: Iterable) -> "Weight":
        return Weight(tuple(Scalar.of(v) if not isinstance(v, Scalar) else v for v in values))

    @property
    def n(self) -> int:
        return len(self.coords)

    def coord(self, i: int) -> Scalar:
        """1-based coordinate access, matching the epsilon-basis indexing."""
        return self.coords[i - 1]

    def replace(self, i: int, value: Scalar) -> "Weight":
        coords = list(self.coords)
        coords[i - 1] = value
        return Weight(tuple(coords))

    def parameters(self) -> Tuple[str, ...]:
        seen: List[str] = []
        for c in self.coords:
            for name in c.parameters():
                if name not in seen:
                    seen.append(name)
        return tuple(sorted(seen))

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"Weight{self}"


def parse_weight(text: str) -> Weight:
    """Parse a weight literal such as ``(1,0,0,0,0,-1,-2)`` or ``(c,-c,c)``."""
    src = text.strip()
    if not (src.startswith("(") and src.endswith(")")):
        raise WeightParseError(f"weight literal must be parenthesized: {text!r}")
    body = src[1:-1]
    parts = [p for p in body.split(",")]
    if len(parts) < 2:
        raise WeightParseError("weights need at least two coordinates")
    try:
        return Weight(tuple(parse_scalar(p) for p in parts))
    except WeightParseError:
        raise
    except Exception as exc:
        raise WeightParseError(f"bad weight literal {text!r}: {exc}") from exc


_WORD_TOKEN = re.compile(r"^s?(\d+)$")


def parse_word(text: str) -> Word:
    """Parse a word literal like ``s3 s2 s1`` (applied rightmost first)."""
    letters = []
    for tok in text.replace(",", " ").split():
        m = _WORD_TOKEN.match(tok)
        if not m:
            raise WeightParseError(f"bad word token {tok!r}")
        letters.append(int(m.group(1)))
    return tuple(letters)


def word_str(word: Word) -> str:
    return " ".join(f"s{i}" for i in word)


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise LengthMismatch(f"simple index {i} out of range for n={n}")


# -- the three actions -----------------------------------------------------


def reflect(i: int, w: Weight) -> Weight:
    """Plain reflection: swap coordinates i and i+1."""
    _check_index(i, w.n)
    c = list(w.coords)
    c[i - 1], c[i] = c[i], c[i - 1]
    return Weight(tuple(c))


def dot(i: int, w: Weight) -> Weight:
    """Shifted reflection: (a_i, a_{i+1}) -> (a_{i+1} - 1, a_i + 1)."""
    _check_index(i, w.n)
    c = list(w.coords)
    c[i - 1], c[i] = c[i].shift(-1), c[i - 1].shift(1)
    return Weight(tuple(c))


def star(i: int, w: Weight) -> Weight:
    """Swap on typical pairs (a_i + a_{i+1} != 0), dot on atypical ones."""
    _check_index(i, w.n)
    if (w.coord(i) + w.coord(i + 1)).is_zero():
        return dot(i, w)
    return reflect(i, w)


def apply_word(word: Sequence[int], w: Weight, action=star) -> Weight:
    """Apply a word of simple indices, rightmost letter first."""
    for i in reversed(tuple(word)):
        w = action(i, w)
    return w


def segment(i: int, k: int) -> Word:
    """The word s_i s_{i±1} .. s_k walking from i to k one step at a time."""
    step = 1 if k >= i else -1
    return tuple(range(i, k + step, step))


# -- order and predicates --------------------------------------------------


def compare(mu: Weight, nu: Weight) -> Comparison:
    """Four-valued comparison in the root-lattice partial order.

    mu <= nu exactly when every partial sum of nu − mu over the leading
    coordinates is a nonnegative integer and the full sum is zero.
    """
    if mu.n != nu.n:
        raise LengthMismatch(f"cannot compare weights of lengths {mu.n} and {nu.n}")
    partial = Scalar()
    sign_pos = sign_neg = False
    for a, b in zip(mu.coords, nu.coords):
        partial = partial + (b - a)
        if not partial.is_integer():
            return Comparison.INCOMPARABLE
        if partial.rational > 0:
            sign_pos = True
        elif partial.rational < 0:
            sign_neg = True
    if not partial.is_zero():
        return Comparison.INCOMPARABLE
    if sign_pos and sign_neg:
        return Comparison.INCOMPARABLE
    if sign_pos:
        return Comparison.LESS
    if sign_neg:
        return Comparison.GREATER
    return Comparison.EQUAL


def leq(mu: Weight, nu: Weight) -> bool:
    return compare(mu, nu) in (Comparison.LESS, Comparison.EQUAL)


def iota(w: Weight) -> Weight:
    """The diagram involution: coordinate i of the result is −a_{n+1−i}.

    It intertwines the star actions via iota(s_k * w) = s_{n−k} * iota(w).
    """
    return Weight(tuple(-c for c in reversed(w.coords)))


def is_integral(w: Weight) -> bool:
    """True when all consecutive coordinate differences are integers."""
    return all(
        (w.coord(i) - w.coord(i + 1)).is_integer() for i in range(1, w.n)
    )


def nonintegral_directions(w: Weight) -> Tuple[int, ...]:
    return tuple(
        i for i in range(1, w.n) if not (w.coord(i) - w.coord(i + 1)).is_integer()
    )


class MaximalInfo(NamedTuple):
    is_maximal: bool
    stabilizer: Tuple[int, ...]


def maximal_info(w: Weight) -> MaximalInfo:
    """Maximality under the star action plus the set of fixing generators."""
    stab = []
    maximal = True
    for i in range(1, w.n):
        c = compare(w, star(i, w))
        if c is Comparison.LESS:
            maximal = False
        elif c is Comparison.EQUAL:
            stab.append(i)
    return MaximalInfo(maximal, tuple(stab))


def raising_directions(w: Weight) -> Tuple[int, ...]:
    return tuple(
        i for i in range(1, w.n) if compare(w, star(i, w)) is Comparison.LESS
    )


class ZeroStats(NamedTuple):
    z: int
    f: int


def zero_stats(w: Weight) -> ZeroStats:
    """Count of zero coordinates and the start of the zero block.

    f is n when there is at most one zero, otherwise the least index
    carrying a zero coordinate.
    """
    zeros = [i for i in range(1, w.n + 1) if w.coord(i).is_zero()]
    z = len(zeros)
    f = w.n if z <= 1 else zeros[0]
    return ZeroStats(z, f)


def is_finite_dimensional(w: Weight) -> bool:
    """Simple highest weight module is finite dimensional iff a_1 ≻ a_2 ≻ ... ≻ a_n."""
    return all(succ(w.coord(i), w.coord(i + 1)) for i in range(1, w.n))


def eqsucc_compare(w: Weight, i: int) -> Comparison:
    """Coordinate-only criterion for the order between w and s_i * w.

    Used as an independent cross-check of ``compare``:
      w > s_i*w  iff  a_i ≻ a_{i+1};
      w = s_i*w  iff  a_i = a_{i+1} != 0  or  (a_i, a_{i+1}) = (−1/2, 1/2);
      w < s_i*w  iff  a_{i+1} − a_i is a positive integer and the pair is
                      not (−1/2, 1/2).
    """
    _check_index(i, w.n)
    a, b = w.coord(i), w.coord(i + 1)
    if succ(a, b):
        return Comparison.GREATER
    half = Scalar(Fraction(1, 2))
    if (a == b and not a.is_zero()) or (a == -half and b == half):
        return Comparison.EQUAL
    d = b - a
    if d.is_integer() and d.rational > 0 and not (a == -half and b == half):
        return Comparison.LESS
    return Comparison.INCOMPARABLE
