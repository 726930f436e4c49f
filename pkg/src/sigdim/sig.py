"""Sphere-of-influence graphs over exact rational point sets (sup-norm).

Each point gets an open ball whose radius is its exact nearest-neighbor
distance; two points are joined iff their balls intersect, i.e. iff
rho(u,v) < r_u + r_v with rho the coordinatewise max metric.  The comparison
is strict and exact: the constructions verified here place non-edges exactly
on the boundary rho = r_u + r_v, where floating point would misclassify.

``oracle_embed_2ia`` is the unconditional n-dimensional realization taking
point v to row v of 2I + A; it is the reference oracle for everything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph
from .rationals import common_scale

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class PointSet:
    d: int
    points: tuple[Point, ...]

    @staticmethod
    def from_rows(rows) -> PointSet:
        pts = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if len(pts) < 2:
            raise ValueError("need at least two points")
        widths = {len(p) for p in pts}
        if len(widths) != 1:
            raise ValueError(f"ragged point set, widths {sorted(widths)}")
        return PointSet(widths.pop(), pts)

    def to_json(self) -> dict:
        from .rationals import rat_to_json

        return {
            "d": self.d,
            "coords": [[rat_to_json(x) for x in p] for p in self.points],
        }


def _scaled(ps: PointSet) -> tuple[list[tuple[int, ...]], int]:
    # One common denominator turns every comparison into integer arithmetic.
    scale = common_scale(x for p in ps.points for x in p)
    rows = [tuple(int(x * scale) for x in p) for p in ps.points]
    return rows, scale


def _dist(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    return max(abs(x - y) for x, y in zip(a, b))


def compute_radii(ps: PointSet) -> list[Fraction]:
    """Exact nearest-neighbor sup-norm distance per point."""
    rows, scale = _scaled(ps)
    n = len(rows)
    best = [None] * n
    for u in range(n):
        for v in range(u + 1, n):
            d = _dist(rows[u], rows[v])
            if d == 0:
                raise ValueError(f"duplicate points {u} and {v}")
            if best[u] is None or d < best[u]:
                best[u] = d
            if best[v] is None or d < best[v]:
                best[v] = d
    return [Fraction(b, scale) for b in best]


def compute_sig(ps: PointSet) -> Graph:
    """Edge uv iff rho(u,v) < r_u + r_v, decided in exact integer arithmetic."""
    rows, _ = _scaled(ps)
    n = len(rows)
    dist = [[0] * n for _ in range(n)]
    radius = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            d = _dist(rows[u], rows[v])
            if d == 0:
                raise ValueError(f"duplicate points {u} and {v}")
            dist[u][v] = d
    for u in range(n):
        radius[u] = min(dist[min(u, v)][max(u, v)] for v in range(n) if v != u)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if dist[u][v] < radius[u] + radius[v]
    ]
    return Graph(n, frozenset(edges))


def oracle_embed_2ia(g: Graph) -> PointSet:
    """Rows of 2I + A: coordinate v is 2 at v, 1 at neighbors, 0 elsewhere."""
    g.require_embeddable()
    rows = []
    for v in range(g.n):
        row = [0] * g.n
        row[v] = 2
        for u in g.neighbors(v):
            row[u] = 1
        rows.append(row)
    return PointSet.from_rows(rows)
