import pytest

from starq.decomp import (
    JHEntry,
    degree_top_type,
    jh_axis,
    jh_axis_table,
    levi_dim,
    propagate_jh,
)
from starq.errors import BadShape, NotDominant, WrongType
from starq.scalars import Scalar, parse_scalar
from starq.weights import iota, parse_weight


def w(text):
    return parse_weight(text)


def test_levi_dim_examples():
    assert levi_dim(w("(0,0,-1,1)")) == 3
    assert levi_dim(w("(0,0,0,c)")) == 1
    assert levi_dim(w("(0,-1,-1,2)")) == 3
    assert levi_dim(w("(2,-1,-1,2)")) == 10
    with pytest.raises(NotDominant):
        levi_dim(w("(0,1,0,0)"))
    with pytest.raises(NotDominant):
        levi_dim(w("(c,0,0,0)"))


def test_degree_examples_positive_line():
    # weights (0,..,0,-1 x (i-1), c+i-1) for c = 2, n = 4
    expected = {
        "(0,0,0,2)": 1,
        "(0,0,-1,3)": 3,
        "(0,-1,-1,4)": 3,
        "(-1,-1,-1,5)": 1,
    }
    for literal, degree in expected.items():
        assert degree_top_type(w(literal)) == degree


def test_degree_examples_zero_line():
    assert degree_top_type(w("(-1,-1,-1,3)")) == 1
    assert degree_top_type(w("(0,-1,-1,2)")) == 2
    assert degree_top_type(w("(0,0,-1,1)")) == 1


def test_degree_zero_line_total_rank_eight():
    row = jh_axis(8, Scalar.of(0), 7)
    assert sum(degree_top_type(e.weight) for e in row.entries) == 2 ** 6


def test_degree_wrong_type():
    with pytest.raises(WrongType):
        degree_top_type(w("(0,2,0,0)"))  # type 1, not the last type
    with pytest.raises(WrongType):
        degree_top_type(w("(3,2,1)"))  # finite dimensional


def test_jh_nonintegral_top_row():
    row = jh_axis(4, Scalar.param("c"), 3)
    assert str(row.module) == "(0,0,0,c)"
    assert {str(e.weight) for e in row.entries} == {
        "(0,0,0,c)", "(0,0,-1,c+1)", "(0,-1,-1,c+2)", "(-1,-1,-1,c+3)"
    }
    assert all(e.multiplicity == 2 for e in row.entries)


def test_jh_integral_rows():
    two = Scalar.of(2)
    top = jh_axis(4, two, 3)
    assert {str(e.weight) for e in top.entries} == {
        "(0,0,0,2)", "(0,0,-1,3)", "(0,-1,-1,4)", "(-1,-1,-1,5)"
    }
    row1 = jh_axis(4, two, 1)
    assert {str(e.weight) for e in row1.entries} == {
        "(-1,1,1,1)", "(0,1,1,0)", "(0,2,0,0)", "(-1,3,0,0)"
    }
    row0 = jh_axis(4, two, 0)
    assert {str(e.weight) for e in row0.entries} == {"(2,0,0,0)", "(1,1,0,0)"}


def test_jh_zero_rows():
    row = jh_axis(4, Scalar.of(0), 2)
    assert {str(e.weight) for e in row.entries} == {
        "(-1,-1,2,0)", "(0,-1,1,0)", "(0,-2,1,1)"
    }
    trivial = jh_axis(4, Scalar.of(0), 0)
    assert [(str(e.weight), e.multiplicity) for e in trivial.entries] == [
        ("(0,0,0,0)", 1)
    ]


def test_jh_negative_line_mirrors_positive():
    # the table for the negative line is the flip of the positive one
    minus = parse_scalar("-2")
    plus = Scalar.of(2)
    n = 4
    for k in range(n):
        neg_row = jh_axis(n, minus, k)
        pos_row = jh_axis(n, plus, n - 1 - k)
        flipped = sorted(
            (iota(e.weight) for e in pos_row.entries),
            key=lambda v: v.sort_key(),
        )
        got = [e.weight for e in neg_row.entries]
        assert got == flipped


def test_jh_entries_distinct():
    for c in (Scalar.of(2), Scalar.of(0), Scalar.param("c"), parse_scalar("-2")):
        for row in jh_axis_table(4, c):
            weights = [str(e.weight) for e in row.entries]
            assert len(weights) == len(set(weights))


def test_propagate_examples():
    two = Scalar.of(2)
    assert propagate_jh(jh_axis(4, two, 2).entries, 3) == jh_axis(4, two, 3).entries
    c = Scalar.param("c")
    row2 = jh_axis(4, c, 2).entries
    assert propagate_jh(propagate_jh(row2, 3), 3) == row2
    assert propagate_jh((), 3) == ()


def test_jh_bad_shape():
    with pytest.raises(BadShape):
        jh_axis(4, Scalar.of(2), 4)
    with pytest.raises(BadShape):
        jh_axis(1, Scalar.of(2), 0)


def test_jh_rational_nonintegral_parameter():
    row = jh_axis(3, parse_scalar("1/2"), 2)
    assert {str(e.weight) for e in row.entries} == {
        "(0,0,1/2)", "(0,-1,3/2)", "(-1,-1,5/2)"
    }
