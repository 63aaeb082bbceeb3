"""Boundedness and family structure on the general-linear side.

Everything mirrors the star-action classification with the shifted (dot)
action in its place: an integral weight is bounded exactly when it has a
unique ascending dot-chain with no fixing generator below the top and at
most one on top; a nonintegral weight is bounded exactly when it descends
from a type-one dot anchor.

Family graphs here are the propagation device for decomposition tables:
the chain of types 1 .. n−1 carries a dashed arrow labelled j+1 from the
type-j member to the type-(j+1) member and one labelled j back, while a
dominant weight enters the regularity-k family along a single arrow
labelled k.  Nonintegral chains carry the same label in both directions.
``gl_arrow`` follows one labelled arrow from a bounded weight; by the
uniqueness of localization subquotients this target is well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .classify import (
    BOUNDED,
    FINITE_DIMENSIONAL,
    NONINTEGRAL,
    REGULAR,
    SINGULAR,
    UNBOUNDED,
    Family,
    FamilyArrow,
    FamilyMember,
    TypeTag,
)
from .errors import NoArrow, NotBounded, NotMaximal
from .weights import (
    Comparison,
    Weight,
    Word,
    apply_word,
    compare,
    dot,
    nonintegral_directions,
    segment,
)


@dataclass(frozen=True)
class GlVerdict:
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


def dot_word(word: Sequence[int], w: Weight) -> Weight:
    return apply_word(word, w, action=dot)


def _is_dominant(w: Weight) -> Tuple[bool, Tuple[int, ...]]:
    """Weakly dominant integral test plus the set of dot-fixing generators."""
    stab = []
    for i in range(1, w.n):
        d = w.coord(i) - w.coord(i + 1)
        if not d.is_integer():
            return False, ()
        if d.rational < 0:
            if d.rational == -1:
                stab.append(i)
            else:
                return False, ()
    return True, tuple(stab)


def gl_classify(w: Weight) -> GlVerdict:
    """Boundedness verdict for the shifted Weyl-group action."""
    ni = nonintegral_directions(w)
    if ni:
        return _gl_classify_nonintegral(w, ni)
    return _gl_classify_integral(w)


def _gl_classify_integral(w: Weight) -> GlVerdict:
    cur = w
    word: List[int] = []
    while True:
        ups, eqs = [], []
        for i in range(1, w.n):
            c = compare(cur, dot(i, cur))
            if c is Comparison.LESS:
                ups.append(i)
            elif c is Comparison.EQUAL:
                eqs.append(i)
        if ups:
            if len(ups) > 1:
                return GlVerdict(UNBOUNDED, w, reason="multiple_raising_directions")
            if eqs:
                return GlVerdict(UNBOUNDED, w, reason="stabilizer_below_maximal")
            word.append(ups[0])
            cur = dot(ups[0], cur)
            continue
        if len(eqs) >= 2:
            return GlVerdict(UNBOUNDED, w, reason="stabilizer_too_large")
        if not word:
            if not eqs:
                return GlVerdict(FINITE_DIMENSIONAL, w, maximal=w, word=())
            m = eqs[0]
            return GlVerdict(
                BOUNDED, w, klass=SINGULAR, type=TypeTag("int", m),
                maximal=w, word=(), regularity=m,
            )
        klass = SINGULAR if eqs else REGULAR
        return GlVerdict(
            BOUNDED, w, klass=klass, type=TypeTag("int", word[0]),
            maximal=cur, word=tuple(word),
            regularity=eqs[0] if eqs else word[-1],
        )


def _gl_classify_nonintegral(w: Weight, ni: Sequence[int]) -> GlVerdict:
    n = w.n
    ni = list(ni)
    shape_ok = ni in ([1], [n - 1]) or (len(ni) == 2 and ni[1] == ni[0] + 1)
    if not shape_ok:
        return GlVerdict(UNBOUNDED, w, reason="nonintegral_shape")
    for i in range(1, n):
        if i not in ni and compare(w, dot(i, w)) is not Comparison.GREATER:
            return GlVerdict(UNBOUNDED, w, reason="mixed_directions")
    if len(ni) == 2:
        m = ni[0]
    elif ni == [1]:
        m = 0
    else:
        m = n - 1
    anchor = dot_word(segment(1, m), w) if m else w
    if not _is_gl_type_one_anchor(anchor):
        return GlVerdict(UNBOUNDED, w, reason="anchor_conditions")
    return GlVerdict(
        BOUNDED, w, klass=NONINTEGRAL, type=TypeTag("nonint", m),
        maximal=anchor, word=segment(m, 1) if m else (),
    )


def _is_gl_type_one_anchor(w: Weight) -> bool:
    if (w.coord(1) - w.coord(2)).is_integer():
        return False
    return all(compare(w, dot(j, w)) is Comparison.GREATER for j in range(2, w.n))


# -- families ----------------------------------------------------------------


def gl_families(w: Weight) -> List[Family]:
    """All dot-side families anchored at w.

    Dominant regular integral w has one family per regularity k;
    a singular maximal weight or a nonintegral type-one anchor has one.
    """
    if nonintegral_directions(w):
        if not _is_gl_type_one_anchor(w):
            raise NotMaximal(f"{w} is not a nonintegral type-one dot anchor")
        return [_gl_nonintegral_family(w)]
    dominant, stab = _is_dominant(w)
    if not dominant:
        raise NotMaximal(f"{w} is not a dominant or singular-maximal weight")
    if len(stab) >= 2:
        raise NotMaximal(f"{w} is fixed by {len(stab)} generators")
    if stab:
        return [_gl_chain_family(w, SINGULAR, (stab[0],))]
    return [_gl_chain_family(w, REGULAR, (k,)) for k in range(1, w.n)]


def gl_family(w: Weight, regularity: Optional[int] = None) -> Family:
    """One dot-side family; ``regularity`` selects among a dominant anchor's."""
    fams = gl_families(w)
    if len(fams) == 1:
        return fams[0]
    if regularity is None:
        raise NotMaximal(
            f"{w} anchors {len(fams)} families; a regularity index is required"
        )
    for fam in fams:
        if fam.regularities[0] == regularity:
            return fam
    raise NotMaximal(f"no family of regularity {regularity} at {w}")


def _gl_chain_family(w: Weight, kind: str, regs: Tuple[int, ...]) -> Family:
    n, k = w.n, regs[0]
    members = [
        FamilyMember(TypeTag("int", i), segment(i, k), dot_word(segment(i, k), w))
        for i in range(1, n)
    ]
    arrows = []
    for j in range(1, n - 1):  # between types j and j+1
        a, b = members[j - 1], members[j]
        arrows.append(FamilyArrow(a.weight, j + 1, b.weight))
        arrows.append(FamilyArrow(b.weight, j, a.weight))
    if kind == REGULAR:
        # the dominant anchor feeds the chain from outside
        arrows.append(FamilyArrow(w, k, members[k - 1].weight))
    return Family(kind, w, regs, tuple(members), tuple(arrows))


def _gl_nonintegral_family(w: Weight) -> Family:
    n = w.n
    members = [FamilyMember(TypeTag("nonint", 0), (), w)]
    for m in range(1, n):
        word = segment(m, 1)
        members.append(FamilyMember(TypeTag("nonint", m), word, dot_word(word, w)))
    arrows = []
    for m in range(1, n):
        arrows.append(
            FamilyArrow(members[m - 1].weight, m, members[m].weight, bidirectional=True)
        )
    return Family(NONINTEGRAL, w, (), tuple(members), tuple(arrows))


# -- the labelled localization move ------------------------------------------


def gl_arrow(w: Weight, i: int) -> Weight:
    """Follow the dashed arrow labelled i leaving the bounded weight w.

    Chain neighbours: from the type-t member of an integral family the
    label t+1 moves right and t−1 moves left; in a nonintegral chain the
    member at position j moves right under j and left under j−1.  A
    dominant weight moves along its entry arrow: label k lands on the
    type-k member of its regularity-k family.
    """
    v = gl_classify(w)
    if v.kind == UNBOUNDED:
        raise NotBounded(f"{w} is not a bounded weight: {v.reason}")
    n = w.n
    if v.kind == FINITE_DIMENSIONAL:
        if 1 <= i <= n - 1:
            return dot(i, w)
        raise NoArrow(f"no arrow labelled {i} at the dominant weight {w}")
    if v.klass in (REGULAR, SINGULAR):
        t, k = v.type.k, v.regularity
        if i == t + 1 and t + 1 <= n - 1:
            return dot_word(segment(t + 1, k), v.maximal)
        if i == t - 1 and t - 1 >= 1:
            return dot_word(segment(t - 1, k), v.maximal)
        raise NoArrow(f"no arrow labelled {i} at {w} (type {t})")
    j = v.type.k + 1  # chain position of a nonintegral member
    if i == j and j + 1 <= n:
        return dot_word(segment(j, 1), v.maximal)
    if i == j - 1 and j - 1 >= 1:
        return dot_word(segment(j - 2, 1), v.maximal) if j >= 3 else v.maximal
    raise NoArrow(f"no arrow labelled {i} at {w} (chain position {j})")
