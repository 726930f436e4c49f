from __future__ import annotations

from sigdim import (PickClass, maximum_matching, parse_graph, pick_vertices,
                    star_triangle_factor, validate_picks)
from conftest import C3, C5, CLASS_V, CLASS_VI_1, CLASS_VI_2, K13, K2, TWO_K2


def picks_of(text):
    g = parse_graph(text)
    f = star_triangle_factor(g, maximum_matching(g))
    seq = pick_vertices(g, f)
    validate_picks(g, f, seq)
    return g, seq


def trace(seq):
    return [(p.cls.value, p.step, p.vertices) for p in seq.picks]


def test_k2_trace():
    _, seq = picks_of(K2)
    assert trace(seq) == [("I", 45, (0, 1))]


def test_c3_trace():
    _, seq = picks_of(C3)
    assert trace(seq) == [("IV", 43, (0, 1, 2))]


def test_two_k2_trace():
    _, seq = picks_of(TWO_K2)
    assert trace(seq) == [("VII", 24, (0, 1, 2)), ("I", 45, (3,))]
    assert seq.picks[0].roles == {"p": 0, "q": 1, "s": 2}


def test_k13_trace():
    _, seq = picks_of(K13)
    assert trace(seq) == [("I", 19, (0,)), ("II", 32, (1, 2, 3))]


def test_c5_trace():
    # Center singleton, then both endgame leaves, then the leftover pair:
    # three plain sets and no residual.
    _, seq = picks_of(C5)
    assert trace(seq) == [("I", 19, (0,)), ("I", 30, (1, 4)), ("I", 45, (2, 3))]


def test_class_v_instance():
    g, seq = picks_of(CLASS_V)
    by_class = {p.cls for p in seq.picks}
    assert PickClass.TWO_LEAF_TRIPLE in by_class
    p = next(p for p in seq.picks if p.cls is PickClass.TWO_LEAF_TRIPLE)
    assert p.step == 33
    v0, w1, w2 = p.roles["v0"], p.roles["w1"], p.roles["w2"]
    assert not g.has_edge(v0, w1) and not g.has_edge(v0, w2)


def test_class_vi_instances():
    for text in (CLASS_VI_1, CLASS_VI_2):
        g, seq = picks_of(text)
        p = next(p for p in seq.picks if p.cls is PickClass.ONE_LEAF_EDGE_TRIPLE)
        assert p.step == 35
        w0, v1, v2 = p.roles["w0"], p.roles["v1"], p.roles["v2"]
        assert g.has_edge(v1, v2)
        assert g.has_edge(w0, v1) and not g.has_edge(w0, v2)


def test_partition_and_predicates_on_corpus(corpus5):
    for g in corpus5:
        f = star_triangle_factor(g, maximum_matching(g))
        seq = pick_vertices(g, f)
        validate_picks(g, f, seq)
        picked = [v for p in seq.picks for v in p.vertices]
        assert sorted(picked) == list(range(g.n))


def test_step_thirty_excludes_residual(corpus5):
    for g in corpus5:
        f = star_triangle_factor(g, maximum_matching(g))
        seq = pick_vertices(g, f)
        steps = {p.step for p in seq.picks}
        if 30 in steps:
            assert not any(p.cls is PickClass.RESIDUAL for p in seq.picks)


def test_residual_members_adjacent_to_later(corpus5):
    for g in corpus5:
        f = star_triangle_factor(g, maximum_matching(g))
        seq = pick_vertices(g, f)
        for p in seq.picks:
            if p.cls is not PickClass.RESIDUAL:
                continue
            later = [v for q in seq.picks[p.k + 1:] for v in q.vertices]
            for u in p.vertices:
                assert all(g.has_edge(u, v) for v in later)
