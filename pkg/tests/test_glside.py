import itertools

import pytest

from starq.classify import BOUNDED, FINITE_DIMENSIONAL, NONINTEGRAL, UNBOUNDED, classify
from starq.errors import NoArrow, NotBounded
from starq.glside import dot_word, gl_arrow, gl_classify, gl_families, gl_family
from starq.weights import Weight, dot, parse_weight, segment


def w(text):
    return parse_weight(text)


def test_gl_finite_dimensional_and_singular():
    assert gl_classify(w("(3,2,1)")).kind == FINITE_DIMENSIONAL
    v = gl_classify(w("(0,0,1,1)"))  # fixed by the middle generator
    assert v.kind == BOUNDED and v.klass == "singular"
    assert v.type.k == 2


def test_gl_bounded_member():
    v = gl_classify(w("(-1,1,0)"))  # one dot step below zero
    assert v.kind == BOUNDED and v.type.k == 1 and v.regularity == 1
    assert v.maximal == w("(0,0,0)")


def test_gl_doubly_singular_unbounded():
    # two commuting fixing generators
    v = gl_classify(w("(0,1,0,1)"))
    assert v.kind == UNBOUNDED


def test_gl_regular_orbit_count():
    lam = w("(3,2,1)")
    fams = gl_families(lam)
    assert len(fams) == 2
    weights = [m.weight for f in fams for m in f.members]
    assert len(weights) == len(set(weights)) == 4  # (n-1)^2
    for v in weights:
        assert gl_classify(v).kind == BOUNDED


def test_gl_family_shapes():
    fams = gl_families(w("(0,0,0,0)"))
    assert [f.regularities for f in fams] == [(1,), (2,), (3,)]
    fam = gl_family(w("(0,0,0,0)"), regularity=2)
    # entry arrow from the dominant anchor plus the bidirectional chain
    entry = [a for a in fam.arrows if a.source == w("(0,0,0,0)")]
    assert len(entry) == 1 and entry[0].label == 2
    assert entry[0].target == dot(2, w("(0,0,0,0)"))

    nonint = gl_family(w("(c,0,0,0)"))
    assert nonint.kind == NONINTEGRAL
    assert [a.label for a in nonint.arrows] == [1, 2, 3]
    assert all(a.bidirectional for a in nonint.arrows)

    singular = gl_family(w("(0,0,1,1)"))
    assert singular.kind == "singular"
    assert len(singular.members) == 3


def test_gl_arrow_examples():
    eta = w("(2,0,0,0)")
    for k in range(1, 4):
        assert gl_arrow(eta, k) == dot(k, eta)  # entry arrows
    v = dot(2, eta)  # type-2 member of the regularity-2 family
    assert gl_arrow(v, 3) == dot_word(segment(3, 2), eta)
    assert gl_arrow(v, 1) == dot_word(segment(1, 2), eta)
    with pytest.raises(NoArrow):
        gl_arrow(dot_word(segment(1, 2), eta), 3)  # type-1 member has no 3-arrow


def test_gl_arrow_chain_reversal():
    eta = w("(2,0,0,0)")
    v = dot(2, eta)
    assert gl_arrow(gl_arrow(v, 3), 2) == v
    assert gl_arrow(gl_arrow(v, 1), 2) == v


def test_gl_arrow_nonintegral_same_label():
    anchor = w("(c,0,0,0)")
    m1 = dot(1, anchor)
    assert gl_arrow(anchor, 1) == m1
    assert gl_arrow(m1, 1) == anchor
    m2 = gl_arrow(m1, 2)
    assert m2 == dot_word(segment(2, 1), anchor)
    assert gl_arrow(m2, 2) == m1


def test_gl_arrow_requires_bounded():
    with pytest.raises(NotBounded):
        gl_arrow(w("(0,1,0,1)"), 1)


def test_every_bounded_weight_is_gl_bounded():
    for coords in itertools.product(range(-2, 3), repeat=3):
        v = Weight.of(coords)
        if classify(v).bounded:
            assert gl_classify(v).bounded, v


def test_one_sided_dominance_implies_gl_bounded():
    samples = [w("(0,3,2,1)"), w("(-5,4,2,0)"), w("(c,3,1,0)")]
    for v in samples:
        # every generator except the first strictly lowers these weights
        assert gl_classify(v).bounded
