"""Per-group coordinate blocks and the full embedding pipeline.

Every picked group P_k contributes one block of dimensions:

  class I    one dimension per vertex,
  class II   ceil(log2(m+1)) sign-vector dimensions for an m-vertex group,
  class III  one dimension,
  class IV-VIII  two dimensions.

Within a block, *all* vertices of the graph receive coordinates from a case
table keyed on pseudo-neighborhood membership, pick order relative to k, and
adjacency to the group's members.  The tables are transcribed verbatim; a
vertex matching no row is a construction failure and raises a structured
diagnostic instead of inventing a value.  With the default radius r = 12n
every coordinate is an integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any

from .errors import PipelineError
from .factor import StarTriangleFactor, star_triangle_factor, validate_factor
from .graphs import Graph
from .matching import maximum_matching
from .picking import (PickClass, PickedSet, PickSequence, pick_vertices,
                      validate_picks)
from .pseudo import (PseudoNeighborhood, RadiusSchedule, build_pseudo,
                     default_radius, radius_schedule, validate_schedule)
from .rationals import ceil_log2, rat_to_json

Vec = tuple[Fraction, ...]


@dataclass(frozen=True)
class DimensionBlock:
    k: int
    cls: PickClass
    step: int
    dims: tuple[int, ...]
    values: dict[int, Vec]


@dataclass(frozen=True)
class Embedding:
    graph: Graph
    factor: StarTriangleFactor
    picks: PickSequence
    pseudo: PseudoNeighborhood
    schedule: RadiusSchedule
    blocks: tuple[DimensionBlock, ...]
    coords: tuple[Vec, ...]
    d: int

    def to_json(self) -> dict[str, Any]:
        sched = self.schedule
        return {
            "n": self.graph.n,
            "d": self.d,
            "r": rat_to_json(sched.r),
            "delta": rat_to_json(sched.delta),
            "blocks": [
                {"k": b.k, "class": b.cls.value, "dims": list(b.dims), "step": b.step}
                for b in self.blocks
            ],
            "coords": [[rat_to_json(x) for x in row] for row in self.coords],
            "trace": {
                "picks": self.picks.to_json(),
                "factor": self.factor.to_json(),
                "m": [sched.m[v] for v in range(self.graph.n)],
                "rv": [rat_to_json(sched.rv[v]) for v in range(self.graph.n)],
            },
        }


def dimension_bound(n: int) -> tuple[int, int | None]:
    """General bound floor(2n/3)+2; refined ceil(2n/3)+1 when 3 does not divide n."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    general = 2 * n // 3 + 2
    refined = None if n % 3 == 0 else -(-2 * n // 3) + 1
    return general, refined


def block_width(cls: PickClass, size: int) -> int:
    if cls is PickClass.RANDOM:
        return size
    if cls is PickClass.RESIDUAL:
        return ceil_log2(size + 1)
    if cls is PickClass.NONADJACENT_PAIR:
        return 1
    return 2


class _Ctx:
    """Shared lookups for the block builders."""

    def __init__(self, g: Graph, f: StarTriangleFactor, picks: PickSequence,
                 pn: PseudoNeighborhood, sched: RadiusSchedule):
        self.g = g
        self.f = f
        self.picks = picks
        self.pn = pn
        self.sched = sched
        self.index = picks.index_of()

    def edge(self, u: int, v: int) -> bool:
        return self.g.has_edge(u, v)

    def before(self, v: int, k: int) -> bool:
        return self.index[v] < k

    def is_leaf(self, v: int) -> bool:
        return v in self.f.leaf_center

    def unreachable(self, k: int, table: str, vertex: int, **extra: Any) -> PipelineError:
        return PipelineError(
            "embedder",
            f"block {k}, table {table}: no row matches vertex {vertex}",
            k=k, table=table, vertex=vertex, **extra,
        )


# ---------------------------------------------------------------------------
# class I: one dimension per picked vertex

def _block_random(ctx: _Ctx, pick: PickedSet) -> dict[int, Vec]:
    rv, dl = ctx.sched.rv, ctx.sched.delta
    columns = []
    for w in pick.vertices:
        near = ctx.pn.n1[w]
        col: dict[int, Fraction] = {}
        for v in range(ctx.g.n):
            if v == w:
                col[v] = -rv[w]
            elif v in near:
                col[v] = Fraction(0)
            elif ctx.edge(v, w):
                col[v] = rv[v] - dl
            else:
                col[v] = rv[v]
        columns.append(col)
    return {v: tuple(col[v] for col in columns) for v in range(ctx.g.n)}


# ---------------------------------------------------------------------------
# class II: residual leaf group on sign vectors

def _sign_vector(i: int, width: int) -> tuple[int, ...]:
    # i is 1-based; bit pattern of i-1, most significant first, 0 -> +1.
    bits = i - 1
    return tuple(-1 if bits >> (width - 1 - j) & 1 else 1 for j in range(width))


def _block_residual(ctx: _Ctx, pick: PickedSet) -> dict[int, Vec]:
    rv, dl = ctx.sched.rv, ctx.sched.delta
    members = list(pick.vertices)
    m = len(members)
    width = ceil_log2(m + 1)
    vec_of = {v: _sign_vector(i + 1, width) for i, v in enumerate(members)}
    outside_vec = _sign_vector(m + 1, width)
    near = frozenset().union(*(ctx.pn.n1[v] for v in members))
    second = frozenset().union(*(ctx.pn.n2[v] for v in members))

    out: dict[int, Vec] = {}
    for v in range(ctx.g.n):
        if v in vec_of:
            out[v] = tuple(rv[v] * s for s in vec_of[v])
        elif v in near:
            out[v] = tuple(Fraction(0) for _ in range(width))
        elif v in second:
            out[v] = tuple(rv[v] * s for s in outside_vec)
        else:
            out[v] = tuple((rv[v] - dl) * s for s in outside_vec)
    return out


# ---------------------------------------------------------------------------
# class III: non-adjacent pair on one dimension

def _block_pair(ctx: _Ctx, pick: PickedSet) -> dict[int, Vec]:
    rv = ctx.sched.rv
    k = pick.k
    half = ctx.sched.r / 2 - ctx.sched.delta * (k + 1)
    p, q = pick.roles["p"], pick.roles["q"]
    p_side = ctx.pn.related(p) - {p}
    q_side = ctx.pn.related(q) - {q}
    out: dict[int, Vec] = {}
    for v in range(ctx.g.n):
        if v == p:
            val = -rv[p] - half
        elif v == q:
            val = rv[q] + half
        elif v in p_side:
            if v in q_side:
                raise ctx.unreachable(k, "III", v, reason="both sides")
            val = -half
        elif v in q_side:
            val = half
        else:
            val = Fraction(0)
        out[v] = (val,)
    return out


# ---------------------------------------------------------------------------
# class IV: triple inside the final clique

def _block_clique(ctx: _Ctx, pick: PickedSet) -> dict[int, Vec]:
    rv, dl, r = ctx.sched.rv, ctx.sched.delta, ctx.sched.r
    k = pick.k
    trio = pick.vertices
    related_pairs = [
        (a, b) for a, b in combinations(trio, 2) if b in ctx.pn.related(a)
    ]

    out: dict[int, Vec] = {}
    if not related_pairs:
        # All three in distinct factor components.
        x = min(trio, key=lambda v: (-rv[v], v))
        y, z = sorted(set(trio) - {x})
        for v in range(ctx.g.n):
            if v == x:
                out[v] = (Fraction(0), Fraction(0))
            elif v == y:
                out[v] = (Fraction(0), r)
            elif v == z:
                out[v] = (r, Fraction(0))
            elif v in ctx.pn.n1[x]:
                out[v] = (rv[v], rv[v])
            elif v in ctx.pn.n1[y]:
                out[v] = (rv[v], r)
            elif v in ctx.pn.n1[z]:
                out[v] = (r, rv[v])
            else:
                out[v] = (r, r)
    elif len(related_pairs) == 1:
        p_, q_ = related_pairs[0]
        (s_,) = (v for v in trio if v not in related_pairs[0])
        n_pq = (ctx.pn.n1[p_] | ctx.pn.n1[q_]) - {p_, q_}
        for v in range(ctx.g.n):
            if v == p_:
                out[v] = (Fraction(0), r - rv[v])
            elif v == q_:
                out[v] = (Fraction(0), r)
            elif v == s_:
                out[v] = (r, Fraction(0))
            elif v in n_pq:
                out[v] = (rv[v], r)
            elif v in ctx.pn.n1[s_]:
                out[v] = (r, rv[v])
            else:
                out[v] = (r, r)
    elif len(related_pairs) == 3:
        if tuple(sorted(trio)) not in ctx.f.triangles:
            raise ctx.unreachable(k, "IV", trio[0], reason="related but not a triangle")
        p_, q_, s_ = sorted(trio)
        for v in range(ctx.g.n):
            if v == p_:
                out[v] = (-rv[v], Fraction(0))
            elif v == q_:
                out[v] = (-rv[v], -rv[v])
            elif v == s_:
                out[v] = (Fraction(0), -rv[v])
            else:
                out[v] = (rv[v] - dl, rv[v] - dl)
    else:
        raise ctx.unreachable(k, "IV", trio[0], reason="two related pairs")
    return out


# ---------------------------------------------------------------------------
# class V: outside vertex + two leaves of the last star

def _block_two_leaf(ctx: _Ctx, pick: PickedSet) -> dict[int, Vec]:
    rv, dl = ctx.sched.rv, ctx.sched.delta
    k = pick.k
    half = ctx.sched.r / 2 - dl * (k + 1)
    v0, w1, w2, w = (pick.roles[r_] for r_ in ("v0", "w1", "w2", "w"))
    star = ctx.pn.n1[w]  # the leaf set
    v0_side = ctx.pn.related(v0) - {v0}
    reach = ctx.pn.reach(pick.vertices)

    out: dict[int, Vec] = {}
    for v in range(ctx.g.n):
        if v == w1:
            out[v] = (-rv[w] - half, rv[w])
        elif v == w2:
            out[v] = (-rv[w] - half, -rv[w])
        elif v == v0:
            out[v] = (rv[v0] + half, rv[v0])
        elif v == w:
            out[v] = (-half, Fraction(0))
        elif v in star:
            if ctx.before(v, k) or ctx.edge(v, v0):
                out[v] = (rv[w] - half, -rv[w] + dl)
            else:
                out[v] = (rv[w] - half, -rv[w])
        elif v in v0_side:
            out[v] = (half, Fraction(0))
        elif v not in reach:
            out[v] = (rv[v] - half - dl, -rv[v] + dl)
        else:
            raise ctx.unreachable(k, "V", v)
    return out


# ---------------------------------------------------------------------------
# class VI: leaf + adjacent outside pair (exactly two edges)

def _block_one_leaf_edge(ctx: _Ctx, pick: PickedSet) -> dict[int, Vec]:
    rv, dl = ctx.sched.rv, ctx.sched.delta
    k = pick.k
    r = ctx.sched.r
    half = r / 2 - dl * (k + 1)
    w0, v1, v2, w = (pick.roles[r_] for r_ in ("w0", "v1", "v2", "w"))
    star = ctx.pn.n2[w0]  # = the whole leaf set of w's star
    v1_side = ctx.pn.related(v1) - {v1}
    v2_side = ctx.pn.related(v2) - {v2}
    reach = ctx.pn.reach(pick.vertices)
    subcase_b = v2 in ctx.pn.related(v1)

    out: dict[int, Vec] = {}
    for v in range(ctx.g.n):
        if v == w0:
            out[v] = (rv[w0] - dl, rv[w0] + half)
        elif v == v1:
            if subcase_b:
                out[v] = (-rv[v1], -half)
            else:
                out[v] = (-rv[v1], rv[v1] - half - dl)
        elif v == v2:
            if subcase_b:
                out[v] = (-rv[v2] + dl, -rv[v2] - half)
            else:
                out[v] = (rv[v2] - dl, -rv[v2] - half)
        elif v == w:
            # the star center, always picked before this block
            if not ctx.before(v, k):
                raise ctx.unreachable(k, "VI", v, reason="center picked late")
            if subcase_b:
                out[v] = (rv[v] - dl, half)
            else:
                out[v] = (r - 2 * dl * (k + 1), half)
        elif v in star:
            if subcase_b:
                if ctx.before(v, k):
                    out[v] = (rv[v] - dl, -rv[v] + half)
                elif ctx.edge(v, v2):
                    out[v] = (rv[v] - dl, half)
                else:
                    out[v] = (rv[v], half)
            else:
                if ctx.before(v, k):
                    out[v] = (-rv[v] + r - 2 * dl * (k + 1), -rv[v] + half)
                elif ctx.edge(v, v1):
                    out[v] = (rv[v] - dl, half)
                else:
                    out[v] = (rv[v], half)
        elif v in v1_side or (subcase_b and v in v2_side):
            if subcase_b:
                out[v] = (Fraction(0), -half)
            else:
                out[v] = (Fraction(0), Fraction(0))
        elif v in v2_side:
            # subcase a only: v2's own component
            if ctx.before(v, k) or ctx.edge(v, v1):
                out[v] = (rv[v] - dl, -half)
            else:
                out[v] = (rv[v], -half)
        elif v not in reach:
            if subcase_b:
                out[v] = (rv[v] - dl, Fraction(0)) if ctx.before(v, k) else (rv[v], Fraction(0))
            else:
                if ctx.before(v, k) or ctx.edge(v, v1):
                    out[v] = (rv[v] - dl, Fraction(0))
                else:
                    out[v] = (rv[v], Fraction(0))
        else:
            raise ctx.unreachable(k, "VI", v)
    return out


# ---------------------------------------------------------------------------
# class VII: triple with exactly one edge

def _block_one_edge(ctx: _Ctx, pick: PickedSet) -> dict[int, Vec]:
    rv, dl = ctx.sched.rv, ctx.sched.delta
    k = pick.k
    base = -ctx.sched.r + 2 * dl * (k + 1)
    mhalf = -ctx.sched.r / 2 + dl * (k + 1)
    p, q, s = (pick.roles[r_] for r_ in ("p", "q", "s"))
    close = p in ctx.pn.related(q)  # p,q share a factor component

    tk = None
    for tri in ctx.f.triangles:
        if p in tri and q in tri:
            (tk,) = (v for v in tri if v not in (p, q))
    s_near = ctx.pn.n1[s]
    s_second = ctx.pn.n2[s] - {s}
    p_near, p_second = ctx.pn.n1[p], ctx.pn.n2[p] - {p}
    q_near, q_second = ctx.pn.n1[q], ctx.pn.n2[q] - {q}
    reach = ctx.pn.reach(pick.vertices)

    def s_family(v: int) -> Vec:
        # shared adjacency table for N(s) and its second neighborhood
        if ctx.before(v, k):
            if v in s_second and ctx.is_leaf(v):
                if close:
                    return (base + rv[s] - dl, -rv[s])
                return (-rv[s], -rv[s])
            return (Fraction(0), Fraction(0))
        ep, eq = ctx.edge(v, p), ctx.edge(v, q)
        if ep and eq:
            return (Fraction(0), Fraction(0))
        if not ep and eq:
            return (base + rv[s], Fraction(0))
        if ep and not eq:
            return (Fraction(0), base + rv[s])
        return (base + rv[s], base + rv[s])

    def outsider(v: int) -> Vec:
        if ctx.before(v, k):
            return (mhalf, mhalf)
        ep, eq, es = ctx.edge(v, p), ctx.edge(v, q), ctx.edge(v, s)
        if ep and eq and es:
            return (mhalf, mhalf)
        if not ep and eq and es:
            return (base + rv[v], mhalf)
        if ep and not eq and es:
            return (mhalf, base + rv[v])
        if ep and eq and not es:
            return (-rv[v], -rv[v])
        if not ep and not eq and es:
            return (base + rv[v], base + rv[v])
        raise ctx.unreachable(k, "VII.outside", v, adjacency=(ep, eq, es))

    out: dict[int, Vec] = {}
    for v in range(ctx.g.n):
        if v == p:
            if close:
                out[v] = (base - rv[p], base)
            else:
                out[v] = (base - rv[p], base + rv[p] - dl)
        elif v == q:
            if close:
                out[v] = (base - dl, base - rv[q])
            else:
                out[v] = (base + rv[q] - dl, base - rv[q])
        elif v == s:
            out[v] = (rv[s], rv[s])
        elif close and v == tk:
            if ctx.before(v, k) or ctx.edge(v, s):
                out[v] = (base, base)
            else:
                out[v] = (-rv[v], -rv[v])
        elif v in s_near or v in s_second:
            out[v] = s_family(v)
        elif not close and (v in p_near or v in p_second):
            if ctx.before(v, k):
                if v in p_second and ctx.is_leaf(v):
                    out[v] = (base + rv[p], mhalf)
                else:
                    out[v] = (base, Fraction(0))
            else:
                eq, es = ctx.edge(v, q), ctx.edge(v, s)
                if eq and es:
                    out[v] = (base, Fraction(0))
                elif eq and not es:
                    out[v] = (-rv[p], Fraction(0))
                elif not eq and es:
                    out[v] = (base, base + rv[p])
                else:
                    raise ctx.unreachable(k, "VII.p-side", v, adjacency=(eq, es))
        elif not close and (v in q_near or v in q_second):
            if ctx.before(v, k):
                if v in q_second and ctx.is_leaf(v):
                    out[v] = (mhalf, base + rv[q])
                else:
                    out[v] = (Fraction(0), base)
            else:
                ep, es = ctx.edge(v, p), ctx.edge(v, s)
                if ep and es:
                    out[v] = (Fraction(0), base)
                elif ep and not es:
                    out[v] = (Fraction(0), -rv[q])
                elif not ep and es:
                    out[v] = (base + rv[q], base)
                else:
                    raise ctx.unreachable(k, "VII.q-side", v, adjacency=(ep, es))
        elif v not in reach:
            out[v] = outsider(v)
        else:
            raise ctx.unreachable(k, "VII", v)
    return out


# ---------------------------------------------------------------------------
# class VIII: independent triple, no two in one star

def _super_roles(ctx: _Ctx, pick: PickedSet) -> tuple[int, int, int]:
    if pick.step in (7, 9, 10, 11):
        leaves = sorted(v for v in pick.vertices if ctx.is_leaf(v))
        if leaves:
            b = leaves[0]
            a, c = sorted(set(pick.vertices) - {b})
            return a, b, c
    a, b, c = sorted(pick.vertices)
    return a, b, c


def _block_super(ctx: _Ctx, pick: PickedSet) -> dict[int, Vec]:
    rv, dl = ctx.sched.rv, ctx.sched.delta
    k = pick.k
    base = -ctx.sched.r + 2 * dl * (k + 1)
    mhalf = -ctx.sched.r / 2 + dl * (k + 1)
    a, b, c = _super_roles(ctx, pick)
    reach = ctx.pn.reach(pick.vertices)

    out: dict[int, Vec] = {}
    out[a] = (base - rv[a], rv[a])
    out[b] = (dl + rv[b], dl + rv[b])
    out[c] = (rv[c], base - rv[c])

    def near_a(v: int) -> Vec:
        if ctx.before(v, k):
            return (base, Fraction(0))
        eb, ec = ctx.edge(v, b), ctx.edge(v, c)
        if not eb and not ec:
            return (-rv[a], Fraction(0))
        if eb and ec:
            return (base, Fraction(0))
        if not eb and ec:
            return (-rv[a] + dl, Fraction(0))
        return (base, base + rv[a])

    def near_b(v: int, guard_central: bool) -> Vec:
        if ctx.before(v, k):
            return (dl, dl)
        ea, ec = ctx.edge(v, a), ctx.edge(v, c)
        if ea and ec:
            return (dl, dl)
        if ea and not ec:
            return (dl, base + rv[b])
        if not ea and ec:
            return (base + rv[b], dl)
        if guard_central and v in ctx.f.stars:
            # This case is proven impossible: a star center adjacent to
            # neither a nor c would have joined the pick earlier.
            raise ctx.unreachable(k, "VIII.near-b", v, reason="star center")
        return (base + rv[b], base + rv[b])

    def near_c(v: int) -> Vec:
        if ctx.before(v, k):
            return (Fraction(0), base)
        ea, eb = ctx.edge(v, a), ctx.edge(v, b)
        if not ea and not eb:
            return (Fraction(0), -rv[c])
        if ea and eb:
            return (Fraction(0), base)
        if ea and not eb:
            return (Fraction(0), -rv[c] + dl)
        return (base + rv[c], base)

    for v in sorted(ctx.pn.n1[a] - {a, b, c}):
        out[v] = near_a(v)
    for v in sorted(ctx.pn.n1[b] - {a, b, c}):
        out[v] = near_b(v, guard_central=True)
    for v in sorted(ctx.pn.n1[c] - {a, b, c}):
        out[v] = near_c(v)

    def linking_neighbor(x: int) -> int:
        near = ctx.pn.n1[x]
        if len(near) != 1:
            raise ctx.unreachable(k, "VIII.second", x,
                                  reason="second neighborhood without unique link")
        return next(iter(near))

    for v in sorted(ctx.pn.n2[a] - {a} - set(out)):
        if ctx.before(v, k) and ctx.is_leaf(v):
            na_x = out[linking_neighbor(a)][0]
            if na_x != base:
                out[v] = (base, -rv[a])
            else:
                out[v] = (base + rv[a], mhalf)
        elif ctx.before(v, k):
            out[v] = (base, Fraction(0))
        else:
            out[v] = near_a(v)
    for v in sorted(ctx.pn.n2[b] - {b} - set(out)):
        if ctx.before(v, k) and ctx.is_leaf(v):
            nb_val = out[linking_neighbor(b)]
            if nb_val == (dl, dl):
                out[v] = (dl - rv[b], dl - rv[b])
            elif nb_val == (dl, base + rv[b]):
                out[v] = (dl - rv[b], base)
            elif nb_val == (base + rv[b], dl):
                out[v] = (base, dl - rv[b])
            else:
                raise ctx.unreachable(k, "VIII.second-b", v, link_value=nb_val)
        elif ctx.before(v, k):
            out[v] = (dl, dl)
        else:
            out[v] = near_b(v, guard_central=False)
    for v in sorted(ctx.pn.n2[c] - {c} - set(out)):
        if ctx.before(v, k) and ctx.is_leaf(v):
            nc_y = out[linking_neighbor(c)][1]
            if nc_y != base:
                out[v] = (-rv[c], base)
            else:
                out[v] = (mhalf, base + rv[c])
        elif ctx.before(v, k):
            out[v] = (Fraction(0), base)
        else:
            out[v] = near_c(v)

    for v in range(ctx.g.n):
        if v in out:
            continue
        if v in reach:
            raise ctx.unreachable(k, "VIII", v)
        if ctx.before(v, k):
            out[v] = (-rv[v] / 2, -rv[v] / 2)
            continue
        ea, eb, ec = ctx.edge(v, a), ctx.edge(v, b), ctx.edge(v, c)
        if not ea and not eb and not ec:
            out[v] = (-rv[v], -rv[v])
        elif ea and not eb and not ec:
            out[v] = (-rv[v], -rv[v] + dl)
        elif not ea and eb and not ec:
            out[v] = (base + rv[v], base + rv[v])
        elif not ea and not eb and ec:
            out[v] = (-rv[v] + dl, -rv[v])
        elif ea and eb and not ec:
            out[v] = (-rv[v] + 2 * dl, base + rv[v])
        elif ea and not eb and ec:
            out[v] = (-rv[v] + dl, -rv[v] + dl)
        elif not ea and eb and ec:
            out[v] = (base + rv[v], -rv[v] + 2 * dl)
        else:
            out[v] = (-rv[v] + 2 * dl, -rv[v] + 2 * dl)
    return out


_BUILDERS = {
    PickClass.RANDOM: _block_random,
    PickClass.RESIDUAL: _block_residual,
    PickClass.NONADJACENT_PAIR: _block_pair,
    PickClass.CLIQUE_TRIPLE: _block_clique,
    PickClass.TWO_LEAF_TRIPLE: _block_two_leaf,
    PickClass.ONE_LEAF_EDGE_TRIPLE: _block_one_leaf_edge,
    PickClass.ONE_EDGE_TRIPLE: _block_one_edge,
    PickClass.SUPER_TRIPLE: _block_super,
}


def assign_block(k: int, g: Graph, f: StarTriangleFactor, picks: PickSequence,
                 pn: PseudoNeighborhood, sched: RadiusSchedule,
                 first_dim: int) -> DimensionBlock:
    pick = picks.picks[k]
    ctx = _Ctx(g, f, picks, pn, sched)
    values = _BUILDERS[pick.cls](ctx, pick)
    width = block_width(pick.cls, len(pick.vertices))
    for v, vec in values.items():
        assert len(vec) == width, f"block {k}: vertex {v} got {len(vec)} dims"
    if set(values) != set(range(g.n)):
        missing = sorted(set(range(g.n)) - set(values))
        raise PipelineError("embedder", f"block {k} left vertices {missing} unassigned",
                            k=k, vertices=missing)
    dims = tuple(range(first_dim, first_dim + width))
    return DimensionBlock(k, pick.cls, pick.step, dims, values)


def check_accounting(g: Graph, picks: PickSequence) -> None:
    """n = 3*(#triples) + 2*(#pairs) + |residual| + sum of plain-set sizes."""
    triples = pairs = residual = plain = 0
    for p in picks.picks:
        if p.cls is PickClass.RANDOM:
            plain += len(p.vertices)
        elif p.cls is PickClass.RESIDUAL:
            residual += len(p.vertices)
        elif p.cls is PickClass.NONADJACENT_PAIR:
            pairs += 1
        else:
            triples += 1
    if g.n != 3 * triples + 2 * pairs + residual + plain:
        raise PipelineError(
            "embedder",
            f"accounting identity failed: n={g.n} vs "
            f"3*{triples} + 2*{pairs} + {residual} + {plain}",
            triples=triples, pairs=pairs, residual=residual, plain=plain,
        )


def embed(g: Graph, r: Fraction | None = None) -> Embedding:
    """Full pipeline: matching, factor, picking, schedule, coordinate blocks."""
    g.require_embeddable()
    m0 = maximum_matching(g)
    f = star_triangle_factor(g, m0)
    validate_factor(g, f)
    picks = pick_vertices(g, f)
    validate_picks(g, f, picks)
    check_accounting(g, picks)
    pn = build_pseudo(f, picks)
    sched = radius_schedule(pn, picks, r if r is not None else default_radius(g.n))
    validate_schedule(f, pn, picks, sched)

    blocks: list[DimensionBlock] = []
    first = 0
    for k in range(picks.count):
        block = assign_block(k, g, f, picks, pn, sched, first)
        blocks.append(block)
        first += len(block.dims)

    d = first
    general, refined = dimension_bound(g.n)
    limit = general if refined is None else min(general, refined)
    if d > limit:
        raise PipelineError("embedder", f"dimension {d} exceeds bound {limit}",
                            d=d, bound=limit)
    coords = tuple(
        tuple(x for b in blocks for x in b.values[v]) for v in range(g.n)
    )
    return Embedding(g, f, picks, pn, sched, tuple(blocks), coords, d)
