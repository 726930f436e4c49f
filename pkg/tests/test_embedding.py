from __future__ import annotations

from fractions import Fraction
from math import ceil, floor

import pytest

from sigdim import dimension_bound, embed, parse_graph, verify
from sigdim.embedding import check_accounting
from sigdim.picking import PickClass
from conftest import C3, C5, CLASS_V, CLASS_VI_1, CLASS_VI_2, K13, K2, P3, TWO_K2


def coords_of(text, r=None):
    g = parse_graph(text)
    emb = embed(g, r)
    return emb, [[int(x) for x in row] for row in emb.coords]


def test_k2_golden():
    emb, coords = coords_of(K2)
    assert emb.d == 2
    assert coords == [[-24, 0], [0, -24]]


def test_c3_golden():
    emb, coords = coords_of(C3)
    assert emb.d == 2
    assert coords == [[-36, 0], [-36, -36], [0, -36]]


def test_k13_golden():
    emb, coords = coords_of(K13)
    assert emb.d == 3
    assert coords == [[-48, 0, 0], [0, 48, 48], [0, 48, -48], [0, -48, 48]]


def test_two_k2_golden():
    emb, coords = coords_of(TWO_K2)
    assert emb.d == 3
    assert coords == [[-92, -44, 48], [-46, -92, 48], [48, 48, 0], [4, 4, -48]]


def test_p3_golden():
    emb, coords = coords_of(P3)
    assert emb.d == 3
    assert coords == [[0, -36, 36], [-36, 0, 0], [0, 36, -36]]


@pytest.mark.parametrize("n,expected", [(3, (4, None)), (4, (4, 4)), (10, (8, 8))])
def test_dimension_bound_values(n, expected):
    assert dimension_bound(n) == expected


def test_dimension_bound_formula():
    for n in range(2, 200):
        general, refined = dimension_bound(n)
        assert general == floor(2 * n / 3) + 2
        if n % 3 == 0:
            assert refined is None
        else:
            assert refined == ceil(2 * n / 3) + 1


def test_ceiling_identities():
    # floor/ceil identity and the log2 comparison used by the dimension count
    for k in range(10_001):
        assert -(-2 * k // 3) == 2 * (k + 1) // 3
        assert k.bit_length() <= -(-2 * k // 3)  # ceil(log2(k+1)) <= ceil(2k/3)


def test_accounting_identity(corpus5):
    for g in corpus5:
        emb = embed(g)
        check_accounting(g, emb.picks)
        triples = sum(1 for p in emb.picks.picks
                      if p.cls not in (PickClass.RANDOM, PickClass.RESIDUAL,
                                       PickClass.NONADJACENT_PAIR))
        pairs = sum(1 for p in emb.picks.picks
                    if p.cls is PickClass.NONADJACENT_PAIR)
        residual = sum(len(p.vertices) for p in emb.picks.picks
                       if p.cls is PickClass.RESIDUAL)
        plain = sum(len(p.vertices) for p in emb.picks.picks
                    if p.cls is PickClass.RANDOM)
        assert g.n == 3 * triples + 2 * pairs + residual + plain


def test_bound_holds_on_corpus(corpus5):
    for g in corpus5:
        emb = embed(g)
        general, refined = dimension_bound(g.n)
        assert emb.d <= general
        if refined is not None:
            assert emb.d <= refined


def test_default_radius_gives_integer_coords(corpus5):
    for g in corpus5[:200]:
        emb = embed(g)
        assert all(x.denominator == 1 for row in emb.coords for x in row)


def test_rational_radius_override():
    g = parse_graph(C5)
    emb = embed(g, Fraction(7, 3))
    assert emb.schedule.r == Fraction(7, 3)
    assert verify(g, emb).verdict == "pass"


def test_block_widths():
    emb = embed(parse_graph(K13))
    assert [len(b.dims) for b in emb.blocks] == [1, 2]  # singleton, residual of 3


def test_class_v_embedding_verifies():
    g = parse_graph(CLASS_V)
    emb = embed(g)
    assert verify(g, emb).verdict == "pass"
    assert any(b.cls is PickClass.TWO_LEAF_TRIPLE for b in emb.blocks)


def test_class_vi_embeddings_verify():
    for text in (CLASS_VI_1, CLASS_VI_2):
        g = parse_graph(text)
        emb = embed(g)
        assert verify(g, emb).verdict == "pass"
        assert any(b.cls is PickClass.ONE_LEAF_EDGE_TRIPLE for b in emb.blocks)


def test_isolated_vertex_rejected():
    from sigdim import GraphInputError

    with pytest.raises(GraphInputError):
        embed(parse_graph("3 1\n0 1"))


def test_super_triple_steps_from_disjoint_stars():
    # Three disjoint paths: the star loop fires once on the centers, then the
    # leaf groups are consumed as independent triples.
    text = "9 6\n0 1\n1 2\n3 4\n4 5\n6 7\n7 8\n"
    g = parse_graph(text)
    emb = embed(g)
    steps = [p.step for p in emb.picks.picks]
    assert steps[0] == 7
    assert all(s == 22 for s in steps[1:])
    assert verify(g, emb).verdict == "pass"
