from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sigdim import (compute_radii, compute_sig, generate_exhaustive,
                    oracle_embed_2ia, parse_graph)
from sigdim.sig import PointSet


def points(rows):
    return PointSet.from_rows(rows)


def test_radii_line():
    assert compute_radii(points([[0], [1], [10]])) == [1, 1, 9]


def test_radii_two_points():
    assert compute_radii(points([[-24, 0], [0, -24]])) == [24, 24]


def test_two_points_always_joined():
    assert compute_sig(points([[0, 7], [3, 1]])).edges == frozenset({(0, 1)})


def test_boundary_is_strict():
    # 0 -- 1 at distance 1 and 1 -- 10 at distance 9; the outer pair sits at
    # distance 10 = 1 + 9 exactly, so the open balls do not intersect.
    g = compute_sig(points([[0], [1], [10]]))
    assert g.edges == frozenset({(0, 1), (1, 2)})


def test_triangle_block_points():
    g = compute_sig(points([[-36, 0], [-36, -36], [0, -36]]))
    assert g.edges == frozenset({(0, 1), (0, 2), (1, 2)})


def test_duplicate_points_rejected():
    with pytest.raises(ValueError):
        compute_radii(points([[1, 2], [1, 2], [0, 0]]))
    with pytest.raises(ValueError):
        compute_sig(points([[1], [1], [3]]))


def test_oracle_k2():
    ps = oracle_embed_2ia(parse_graph("2 1\n0 1"))
    assert ps.points == ((Fraction(2), Fraction(1)), (Fraction(1), Fraction(2)))
    assert compute_sig(ps).edges == frozenset({(0, 1)})


def test_oracle_p3():
    g = parse_graph("3 2\n0 1\n1 2")
    assert compute_sig(oracle_embed_2ia(g)) == g


def test_oracle_roundtrip_small():
    for n in (2, 3, 4):
        for g in generate_exhaustive(n):
            assert compute_sig(oracle_embed_2ia(g)) == g


@st.composite
def rationals(draw):
    num = draw(st.integers(-50, 50))
    den = draw(st.integers(1, 8))
    return Fraction(num, den)


@st.composite
def point_sets(draw):
    n = draw(st.integers(2, 6))
    d = draw(st.integers(1, 3))
    rows = draw(
        st.lists(
            st.lists(rationals(), min_size=d, max_size=d),
            min_size=n, max_size=n, unique_by=tuple,
        )
    )
    return PointSet.from_rows(rows)


@given(point_sets(), rationals(), st.integers(1, 9))
@settings(max_examples=80, deadline=None)
def test_translation_and_scaling_invariance(ps, shift, scale):
    base = compute_sig(ps)
    moved = PointSet.from_rows(
        [[scale * (x + shift) for x in row] for row in ps.points]
    )
    assert compute_sig(moved) == base


@given(point_sets(), st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_zero_padding_invariance(ps, extra):
    padded = PointSet.from_rows(
        [list(row) + [Fraction(0)] * extra for row in ps.points]
    )
    assert compute_sig(padded) == compute_sig(ps)


def test_needs_two_points():
    with pytest.raises(ValueError):
        PointSet.from_rows([[1, 2]])


def test_ragged_rejected():
    with pytest.raises(ValueError):
        PointSet.from_rows([[1, 2], [1]])
