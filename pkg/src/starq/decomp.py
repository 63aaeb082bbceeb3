"""Degree formulas and decomposition tables for the axis families.

``levi_dim`` is the classical Weyl product for the reductive subalgebra
fixing the last coordinate, and backs the degree formula for bounded
weights of the last type: singular and nonintegral weights contribute
their Levi dimension directly, while a regular integral weight
w = s_{n−1} .. s_k · h contributes the alternating sum of the Levi
dimensions of the chain weights strictly above it,

    deg(w) = sum_{i=k+1..n} (−1)^{i−k−1} levi_dim(s_{n−1} .. s_i · h),

the i = n term being levi_dim(h).  The sign convention is pinned by the
closed binomial forms of the zero-anchor family (1, 2, 1, ... pattern for
n = 4) and validated by the 2^{n−2} total.

``jh_axis`` produces the multiset of general-linear constituents of the
module at position k of the family of c·e_1: the extreme row comes from a
closed formula and the remaining rows follow by propagating each entry
along one labelled localization arrow.  All constituents of these
families carry multiplicity two, except the one-element table of the
trivial module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .classify import FINITE_DIMENSIONAL, NONINTEGRAL, REGULAR, SINGULAR
from .errors import BadShape, NotDominant, WrongType
from .glside import dot_word, gl_arrow, gl_classify
from .scalars import Scalar
from .weights import Weight, apply_word, segment


def levi_dim(w: Weight) -> int:
    """Weyl dimension of the first-block Levi module with highest weight w.

    Only the first n−1 coordinates enter; their consecutive differences
    must be nonnegative integers.
    """
    n = w.n
    coords = w.coords[: n - 1]
    for i in range(n - 2):
        d = coords[i] - coords[i + 1]
        if not d.is_integer() or d.rational < 0:
            raise NotDominant(
                f"first {n - 1} coordinates of {w} are not dominant integral"
            )
    dim = Fraction(1)
    for i in range(n - 1):
        for j in range(i + 1, n - 1):
            diff = (coords[i] - coords[j]).rational
            dim *= Fraction(diff + (j - i), j - i)
    assert dim.denominator == 1 and dim > 0
    return int(dim)


def degree_top_type(w: Weight) -> int:
    """Degree (maximal weight multiplicity) of a bounded weight of type n−1."""
    v = gl_classify(w)
    if not v.bounded or v.kind == FINITE_DIMENSIONAL:
        raise WrongType(f"{w} is not an infinite-dimensional bounded weight")
    n = w.n
    is_top = (v.type.kind == "int" and v.type.k == n - 1) or (
        v.type.kind == "nonint" and v.type.k == n - 1
    )
    if not is_top:
        raise WrongType(f"{w} has type {v.type.render(n, gl=True)}, not {n - 1}")
    if v.klass in (SINGULAR, NONINTEGRAL):
        return levi_dim(w)
    k, anchor = v.regularity, v.maximal
    total = 0
    for i in range(k + 1, n + 1):
        chain_weight = anchor if i == n else dot_word(segment(n - 1, i), anchor)
        total += (-1) ** (i - k - 1) * levi_dim(chain_weight)
    if total <= 0:
        raise WrongType(f"degree formula degenerated at {w}")
    return total


# -- decomposition tables for the axis families -------------------------------


@dataclass(frozen=True)
class JHEntry:
    weight: Weight
    multiplicity: int


@dataclass(frozen=True)
class JHRow:
    k: int
    module: Weight
    entries: Tuple[JHEntry, ...]

    def weights(self) -> Tuple[Weight, ...]:
        return tuple(e.weight for e in self.entries)


def _axis_weight(n: int, c: Scalar) -> Weight:
    return Weight((c,) + (Scalar(),) * (n - 1))


def _sorted_entries(weights: List[Weight], mult: int = 2) -> Tuple[JHEntry, ...]:
    return tuple(
        JHEntry(w, mult) for w in sorted(weights, key=lambda x: x.sort_key())
    )


def axis_module(n: int, c: Scalar, k: int) -> Weight:
    """The weight of the k-th module in the family of c·e_1 (k = 0 is c·e_1)."""
    if not 0 <= k <= n - 1:
        raise BadShape(f"k must lie in 0..{n - 1}, got {k}")
    if c.is_integer() and int(c.rational) == 0:
        return apply_word((k,), _axis_weight(n, c)) if k else _axis_weight(n, c)
    return apply_word(segment(k, 1), _axis_weight(n, c)) if k else _axis_weight(n, c)


def jh_axis(n: int, c: Scalar, k: int) -> JHRow:
    """Constituent multiset of the module at position k over the c·e_1 family.

    Shapes by the class of c: nonintegral c gives the n-member chain rows
    in closed form; c = 0 gives the zero-anchor rows ∏_{j=k}^{i} s_j · 0;
    positive integral c anchors the table at k = n−1, negative at k = 0,
    and the other rows are reached by one propagation step each.
    """
    if n < 2:
        raise BadShape("n must be at least 2")
    if not 0 <= k <= n - 1:
        raise BadShape(f"k must lie in 0..{n - 1}, got {k}")
    if not c.is_integer():
        return _jh_axis_nonintegral(n, c, k)
    cval = int(c.rational)
    if cval == 0:
        return _jh_axis_zero(n, k)
    if cval > 0:
        return _jh_axis_positive(n, c, k)
    return _jh_axis_negative(n, c, k)


def _jh_axis_nonintegral(n: int, c: Scalar, k: int) -> JHRow:
    lam = _axis_weight(n, c)
    entries = []
    for i in range(1, n + 1):
        star_part = apply_word(segment(i - 1, 1), lam) if i > 1 else lam
        if i <= k:
            entries.append(dot_word(segment(k, i), star_part))
        elif i == k + 1:
            entries.append(apply_word(segment(k, 1), lam) if k else lam)
        else:
            entries.append(dot_word(segment(k + 1, i - 1), star_part))
    return JHRow(k, axis_module(n, c, k), _sorted_entries(entries))


def _jh_axis_zero(n: int, k: int) -> JHRow:
    zero = _axis_weight(n, Scalar())
    if k == 0:
        return JHRow(0, zero, (JHEntry(zero, 1),))
    entries = [dot_word(segment(k, i), zero) for i in range(1, n)]
    return JHRow(k, axis_module(n, Scalar(), k), _sorted_entries(entries))


def _jh_axis_positive(n: int, c: Scalar, k: int) -> JHRow:
    lam = _axis_weight(n, c)
    top = []
    for i in range(1, n + 1):
        star_part = apply_word(segment(i - 1, 1), lam) if i > 1 else lam
        top.append(star_part if i == n else dot_word(segment(n - 1, i), star_part))
    row = top
    for kk in range(n - 2, max(k, 1) - 1, -1):
        row = [gl_arrow(mu, kk) for mu in row]
    if k >= 1:
        return JHRow(k, axis_module(n, c, k), _sorted_entries(row))
    return JHRow(0, lam, _sorted_entries(_entry_anchors(row, 1)))


def _jh_axis_negative(n: int, c: Scalar, k: int) -> JHRow:
    anchor = Weight((Scalar(),) * (n - 1) + (c,))
    bottom = []
    for i in range(1, n + 1):
        star_part = apply_word(segment(i, n - 1), anchor) if i <= n - 1 else anchor
        bottom.append(star_part if i == 1 else dot_word(segment(1, i - 1), star_part))
    row = bottom
    for kk in range(1, min(k, n - 2) + 1):
        row = [gl_arrow(mu, kk + 1) for mu in row]
    if k <= n - 2:
        return JHRow(k, axis_module(n, c, k), _sorted_entries(row))
    return JHRow(n - 1, anchor, _sorted_entries(_entry_anchors(row, n - 1)))


def _entry_anchors(row: List[Weight], label: int) -> List[Weight]:
    """Dominant weights feeding the given row members along entry arrows."""
    out = []
    for mu in row:
        v = gl_classify(mu)
        if v.klass == REGULAR and v.type.k == label and v.regularity == label:
            out.append(v.maximal)
    return out


def propagate_jh(entries: Tuple[JHEntry, ...], label: int) -> Tuple[JHEntry, ...]:
    """Image of a constituent multiset under one labelled localization move."""
    moved = []
    for e in entries:
        moved.append(JHEntry(gl_arrow(e.weight, label), e.multiplicity))
    return tuple(sorted(moved, key=lambda e: e.weight.sort_key()))


def jh_axis_table(n: int, c: Scalar) -> List[JHRow]:
    """All rows k = 0 .. n−1 of the axis-family decomposition table."""
    return [jh_axis(n, c, k) for k in range(n)]
