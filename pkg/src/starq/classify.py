"""Boundedness classification, normal forms, families, and cuspidal data.

The decision procedure for an integral weight walks the unique candidate
ascending chain: at every level there must be exactly one raising simple
reflection and no fixing one, and the maximal weight on top may be fixed
by at most one generator.  Weights violating any of this are unbounded.

A nonintegral weight is bounded exactly when its nonintegral simple
directions form one of the admissible shapes {1}, {n−1}, {j, j+1}, every
integral direction strictly lowers it, and the normalization walk
s_1 s_2 .. s_m lands on a "type one anchor": a weight whose first pair is
nonintegral and which is strictly lowered by every other generator.

Bounded weights come in families with exactly one member of each type;
family graphs carry the localization arrows between neighbouring types.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import IntegralTwist, NotMaximal, NotTypeOne
from .errors import StabilizerTooLarge
from .scalars import Scalar
from .weights import (
    Comparison,
    Weight,
    Word,
    apply_word,
    compare,
    is_finite_dimensional,
    maximal_info,
    nonintegral_directions,
    segment,
    star,
    zero_stats,
)

FINITE_DIMENSIONAL = "finite_dimensional"
BOUNDED = "bounded"
UNBOUNDED = "unbounded"

REGULAR = "regular"
SINGULAR = "singular"
NONINTEGRAL = "nonintegral"


@dataclass(frozen=True)
class TypeTag:
    """Type of a bounded weight.

    Integral types carry the index k of the unique injective simple
    direction (k = 0 marks a maximal weight itself).  Nonintegral types
    carry the member position m within the family chain: m = 0 is the
    type-one anchor, 1 <= m <= n−2 the pair types, m = n−1 the last type.
    """

    kind: str  # "int" | "nonint"
    k: int

    def render(self, n: int, gl: bool = False) -> str:
        if self.kind == "int":
            return str(self.k)
        m = self.k
        if m == 0:
            return "1"
        if m == n - 1:
            return str(n - 1)
        if gl:
            return f"({m + 1},{m})"
        return f"({m},{m + 1})"


@dataclass(frozen=True)
class Verdict:
    kind: str
    weight: Weight
    klass: Optional[str] = None
    type: Optional[TypeTag] = None
    maximal: Optional[Weight] = None
    word: Word = ()
    regularity: Optional[int] = None
    reason: Optional[str] = None

    @property
    def bounded(self) -> bool:
        return self.kind in (FINITE_DIMENSIONAL, BOUNDED)

    def family_id(self) -> Optional[str]:
        if self.kind != BOUNDED:
            return None
        if self.klass == NONINTEGRAL:
            return f"nonintegral:{self.maximal}"
        if self.klass == SINGULAR:
            return f"singular:{self.maximal}:k={self.regularity}"
        z, f = zero_stats(self.maximal)
        lo, hi = _merged_range(z, f)
        if lo is not None and lo <= self.regularity <= hi:
            return f"regular:{self.maximal}:k={lo}-{hi}"
        return f"regular:{self.maximal}:k={self.regularity}"


def _merged_range(z: int, f: int) -> Tuple[Optional[int], Optional[int]]:
    """Regularity range collapsed into a single merged family, when z >= 3."""
    if z >= 3:
        return f, f + z - 2
    return None, None


def classify(w: Weight) -> Verdict:
    """Full boundedness verdict with normal form for any weight."""
    if is_finite_dimensional(w):
        return Verdict(FINITE_DIMENSIONAL, w, maximal=w, word=())
    ni = nonintegral_directions(w)
    if not ni:
        return _classify_integral(w)
    return _classify_nonintegral(w, ni)


def _classify_integral(w: Weight) -> Verdict:
    cur = w
    word: List[int] = []
    while True:
        ups, eqs = [], []
        for i in range(1, w.n):
            c = compare(cur, star(i, cur))
            if c is Comparison.LESS:
                ups.append(i)
            elif c is Comparison.EQUAL:
                eqs.append(i)
        if ups:
            if len(ups) > 1:
                return Verdict(UNBOUNDED, w, reason="multiple_raising_directions")
            if eqs:
                return Verdict(UNBOUNDED, w, reason="stabilizer_below_maximal")
            word.append(ups[0])
            cur = star(ups[0], cur)
            continue
        if len(eqs) >= 2:
            return Verdict(UNBOUNDED, w, reason="stabilizer_too_large")
        if not word:
            # w is maximal and not finite dimensional, so it is fixed by
            # exactly one generator: a singular weight of that type.
            m = eqs[0]
            return Verdict(
                BOUNDED, w, klass=SINGULAR, type=TypeTag("int", m),
                maximal=w, word=(), regularity=m,
            )
        klass = SINGULAR if eqs else REGULAR
        return Verdict(
            BOUNDED, w, klass=klass, type=TypeTag("int", word[0]),
            maximal=cur, word=tuple(word),
            regularity=eqs[0] if eqs else word[-1],
        )


def _classify_nonintegral(w: Weight, ni: Sequence[int]) -> Verdict:
    n = w.n
    ni = list(ni)
    shape_ok = ni in ([1], [n - 1]) or (len(ni) == 2 and ni[1] == ni[0] + 1)
    if not shape_ok:
        return Verdict(UNBOUNDED, w, reason="nonintegral_shape")
    for i in range(1, n):
        if i not in ni and compare(w, star(i, w)) is not Comparison.GREATER:
            return Verdict(UNBOUNDED, w, reason="mixed_directions")
    if len(ni) == 2:
        m = ni[0]
    elif ni == [1]:
        m = 0
    else:
        m = n - 1
    anchor = apply_word(segment(1, m), w) if m else w
    if not _is_type_one_anchor(anchor):
        return Verdict(UNBOUNDED, w, reason="anchor_conditions")
    return Verdict(
        BOUNDED, w, klass=NONINTEGRAL, type=TypeTag("nonint", m),
        maximal=anchor, word=segment(m, 1) if m else (),
    )


def _is_type_one_anchor(w: Weight) -> bool:
    if (w.coord(1) - w.coord(2)).is_integer():
        return False
    return all(compare(w, star(j, w)) is Comparison.GREATER for j in range(2, w.n))


# -- enumeration of bounded weights from a maximal one ----------------------


def _require_anchor(w: Weight) -> Tuple[str, Optional[int]]:
    """Validate a maximal integral weight; report (class, fixing index)."""
    info = maximal_info(w)
    if not info.is_maximal:
        raise NotMaximal(f"{w} is not maximal under the star action")
    if len(info.stabilizer) >= 2:
        raise StabilizerTooLarge(
            f"{w} is fixed by {len(info.stabilizer)} generators; no bounded weights"
        )
    if info.stabilizer:
        return SINGULAR, info.stabilizer[0]
    return REGULAR, None


def bounded_words(w: Weight) -> List[Tuple[int, Word]]:
    """Normal-form words ∏_{j=i}^{k} s_j for the bounded weights below w.

    Returns (type index, word) pairs; for a regular maximal weight the
    weight itself appears as type 0 with the empty word.
    """
    klass, m = _require_anchor(w)
    n = w.n
    if klass == SINGULAR:
        return [(i, segment(i, m)) for i in range(1, n)]
    z, f = zero_stats(w)
    out: List[Tuple[int, Word]] = [(0, ())]
    for i in range(1, n):
        for k in range(1, n):
            if z >= 3 and not _case_b_allows(i, k, f, z):
                continue
            out.append((i, segment(i, k)))
    return out


def _case_b_allows(i: int, k: int, f: int, z: int) -> bool:
    if i == k:
        return True
    if i < k:
        return k <= f or k >= f + z - 1
    return k <= f - 1 or k >= f + z - 2


@dataclass(frozen=True)
class BoundedEntry:
    weight: Weight
    type: TypeTag
    word: Word


def enumerate_bounded(w: Weight) -> List[BoundedEntry]:
    """All bounded weights attached to the maximal integral weight w.

    Regular w with z zero coordinates yields (n−1)² + 1 weights when
    z <= 2 and (n−1)(n−z+1) + 1 when z >= 3; singular w yields n−1
    weights, one of which is w itself.  Types follow the first index of
    the normal-form word.
    """
    return [
        BoundedEntry(apply_word(word, w), TypeTag("int", i), word)
        for i, word in bounded_words(w)
    ]


# -- families ----------------------------------------------------------------


@dataclass(frozen=True)
class FamilyMember:
    type: TypeTag
    word: Word
    weight: Weight


@dataclass(frozen=True)
class FamilyArrow:
    source: Weight
    label: int
    target: Weight
    bidirectional: bool = False


@dataclass(frozen=True)
class Family:
    kind: str  # regular | singular | nonintegral
    anchor: Weight
    regularities: Tuple[int, ...]  # singularity index for singular families
    members: Tuple[FamilyMember, ...]
    arrows: Tuple[FamilyArrow, ...]

    @property
    def family_id(self) -> str:
        if self.kind == NONINTEGRAL:
            return f"nonintegral:{self.anchor}"
        if self.kind == SINGULAR:
            return f"singular:{self.anchor}:k={self.regularities[0]}"
        lo, hi = self.regularities[0], self.regularities[-1]
        return f"regular:{self.anchor}:k={lo}" + (f"-{hi}" if hi != lo else "")


def families(w: Weight) -> List[Family]:
    """Partition of the bounded weights attached to w into families.

    For maximal integral w the family of regularity k collects the weights
    ∏_{j=i}^{k} s_j * w, one per type i; with z >= 3 zero coordinates the
    regularities f .. f+z−2 collapse into one merged family.  A
    nonintegral type-one anchor yields a single chain of n members.
    """
    if nonintegral_directions(w):
        return [_nonintegral_family(w)]
    klass, m = _require_anchor(w)
    if klass == SINGULAR:
        return [_chain_family(w, SINGULAR, (m,), _singular_members(w, m))]
    n, (z, f) = w.n, zero_stats(w)
    out = []
    merged_lo, merged_hi = _merged_range(z, f)
    for k in range(1, n):
        if merged_lo is not None and merged_lo <= k <= merged_hi:
            continue
        members = [
            FamilyMember(TypeTag("int", i), segment(i, k), apply_word(segment(i, k), w))
            for i in range(1, n)
        ]
        out.append(_chain_family(w, REGULAR, (k,), members))
    if merged_lo is not None:
        out.append(_merged_family(w, merged_lo, merged_hi))
    out.sort(key=lambda fam: fam.regularities[0])
    return out


def _singular_members(w: Weight, m: int) -> List[FamilyMember]:
    return [
        FamilyMember(TypeTag("int", i), segment(i, m), apply_word(segment(i, m), w))
        for i in range(1, w.n)
    ]


def _chain_family(w: Weight, kind: str, regs: Tuple[int, ...],
                  members: List[FamilyMember]) -> Family:
    """One-directional chain: arrows point outward from the central type."""
    center = regs[0]
    arrows = []
    for j in range(1, len(members)):
        a, b = members[j - 1], members[j]  # types j and j+1
        if j + 1 <= center:
            arrows.append(FamilyArrow(b.weight, j, a.weight))
        else:
            arrows.append(FamilyArrow(a.weight, j + 1, b.weight))
    return Family(kind, w, regs, tuple(members), tuple(arrows))


def _merged_family(w: Weight, lo: int, hi: int) -> Family:
    n = w.n
    members = []
    for i in range(1, n):
        if i <= lo:
            word = segment(i, lo)
        elif i < hi:
            word = (i,)
        else:
            word = segment(i, hi)
        members.append(FamilyMember(TypeTag("int", i), word, apply_word(word, w)))
    arrows = []
    for j in range(1, n - 1):  # between types j and j+1
        a, b = members[j - 1], members[j]
        if j + 1 <= lo:
            arrows.append(FamilyArrow(b.weight, j, a.weight))
        elif j >= hi:
            arrows.append(FamilyArrow(a.weight, j + 1, b.weight))
        else:
            # inside the zero block both localizations restrict, so the
            # neighbours are linked in both directions
            arrows.append(FamilyArrow(a.weight, j + 1, b.weight))
            arrows.append(FamilyArrow(b.weight, j, a.weight))
    return Family(REGULAR, w, tuple(range(lo, hi + 1)), tuple(members), tuple(arrows))


def _nonintegral_family(w: Weight) -> Family:
    if not _is_type_one_anchor(w):
        raise NotMaximal(f"{w} is not a nonintegral type-one anchor")
    n = w.n
    members = [FamilyMember(TypeTag("nonint", 0), (), w)]
    for m in range(1, n):
        word = segment(m, 1)
        members.append(FamilyMember(TypeTag("nonint", m), word, apply_word(word, w)))
    arrows = [
        FamilyArrow(members[m - 1].weight, m, members[m].weight, bidirectional=True)
        for m in range(1, n)
    ]
    return Family(NONINTEGRAL, w, (), tuple(members), tuple(arrows))


# -- cuspidal parameterization ----------------------------------------------


@dataclass(frozen=True)
class CuspidalParams:
    """Data for a simple cuspidal module: a type-one bounded weight plus
    n−1 nonintegral twist exponents along the nested radical roots."""

    weight: Weight
    twists: Tuple[Scalar, ...]


def validate_cuspidal(params: CuspidalParams) -> Weight:
    """Check the parameterization and return the twisted-lattice anchor.

    The anchor is weight + sum_i x_i (e_1 − e_{i+1}): the highest weight
    of the localized lattice coset after twisting by the exponents x_i.
    """
    w, xs = params.weight, params.twists
    if len(xs) != w.n - 1:
        raise IntegralTwist(f"expected {w.n - 1} twist exponents, got {len(xs)}")
    for x in xs:
        if x.is_integer():
            raise IntegralTwist(f"twist exponent {x} is an integer")
    verdict = classify(w)
    if verdict.kind != BOUNDED or verdict.type is None:
        raise NotTypeOne(f"{w} is not an infinite-dimensional bounded weight")
    t = verdict.type
    type_one = (t.kind == "int" and t.k == 1) or (t.kind == "nonint" and t.k == 0)
    if not type_one:
        raise NotTypeOne(f"{w} has type {t.render(w.n)}, not 1")
    coords = list(w.coords)
    for i, x in enumerate(xs, start=1):
        coords[0] = coords[0] + x
        coords[i] = coords[i] - x
    return Weight(tuple(coords))
