"""Certification of an embedding against its source graph.

Four independent checks, all in exact arithmetic:

  * the recomputed sphere-of-influence graph equals the input graph;
  * every nearest-neighbor radius equals the scheduled r(v);
  * the dimension respects the n-based bound;
  * the per-block inequality suite (1)-(5) holds on its quantifier domains:
      (1) |c_k(u) - c_k(nu)| <= r(u)            for pseudo-neighbors nu,
      (2) |c_k(v) - c_k(u)| >= max(r(u), r(v))  for u in P_k, v picked <= k,
      (3) |c_k(v) - c_k(u)| >= r(u) + r(v)      non-edges inside one star,
                                                 v picked <= k,
      (4) same bound for non-edges not sharing a star, v picked >= k,
      (5) |c_k(v) - c_k(u)| < r(u) + r(v)       for every edge.

The suite is diagnostic: taken over all k it implies the first two checks,
but the direct recomputation is the authoritative criterion.  The verifier
never consults the embedder's case decisions, only the coordinate matrix,
the graph, and the pipeline trace (picks, factor, schedule).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .embedding import Embedding, dimension_bound
from .graphs import Graph
from .rationals import common_scale, rat_to_json
from .sig import PointSet, compute_radii, compute_sig


@dataclass(frozen=True)
class InequalityFailure:
    k: int
    ineq: int
    pair: tuple[int, int]
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "inequality": self.ineq,
            "pair": list(self.pair),
            "lhs": rat_to_json(self.lhs),
            "rhs": rat_to_json(self.rhs),
        }


@dataclass
class VerificationReport:
    sig_equal: bool
    radius_agree: bool
    bound_ok: bool
    inequality_failures: list[InequalityFailure]
    diagnostics: dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        ok = (self.sig_equal and self.radius_agree and self.bound_ok
              and not self.inequality_failures)
        return "pass" if ok else "fail"

    def to_json(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "sig_equal": self.sig_equal,
            "radius_agree": self.radius_agree,
            "bound_ok": self.bound_ok,
            "inequality_failures": [f.to_json() for f in self.inequality_failures],
            "diagnostics": self.diagnostics,
        }


class _Scaled:
    """Embedding data on a common integer grid, for cheap exact comparisons."""

    def __init__(self, emb: Embedding):
        values = [x for row in emb.coords for x in row]
        values.extend(emb.schedule.rv.values())
        self.scale = common_scale(values)
        self.coords = [tuple(int(x * self.scale) for x in row) for row in emb.coords]
        self.rv = {v: int(r * self.scale) for v, r in emb.schedule.rv.items()}

    def block_dist(self, dims: tuple[int, ...], u: int, v: int) -> int:
        cu, cv = self.coords[u], self.coords[v]
        return max(abs(cu[j] - cv[j]) for j in dims)


def check_inequalities(g: Graph, emb: Embedding, k: int,
                       _scaled: _Scaled | None = None) -> list[InequalityFailure]:
    """Evaluate families (1)-(5) for block k; returns one entry per violation."""
    sc = _scaled if _scaled is not None else _Scaled(emb)
    dims = emb.blocks[k].dims
    index = emb.picks.index_of()
    leaf_center = emb.factor.leaf_center
    n = g.n
    fails: list[InequalityFailure] = []

    def record(ineq: int, u: int, v: int, lhs: int, rhs: int) -> None:
        fails.append(InequalityFailure(
            k, ineq, (u, v),
            Fraction(lhs, sc.scale), Fraction(rhs, sc.scale),
        ))

    for u in range(n):
        ru = sc.rv[u]
        for nu in emb.pseudo.n1[u]:
            lhs = sc.block_dist(dims, u, nu)
            if lhs > ru:
                record(1, u, nu, lhs, ru)

    def share_star(u: int, v: int) -> bool:
        cu = leaf_center.get(u)
        return cu is not None and cu == leaf_center.get(v)

    for u in emb.picks.picks[k].vertices:
        ru = sc.rv[u]
        for v in range(n):
            if v == u:
                continue
            rv_ = sc.rv[v]
            lhs = sc.block_dist(dims, u, v)
            if index[v] <= k:
                if lhs < max(ru, rv_):
                    record(2, u, v, lhs, max(ru, rv_))
                if not g.has_edge(u, v) and share_star(u, v) and lhs < ru + rv_:
                    record(3, u, v, lhs, ru + rv_)
            if index[v] >= k:
                if not g.has_edge(u, v) and not share_star(u, v) and lhs < ru + rv_:
                    record(4, u, v, lhs, ru + rv_)

    for u, v in g.sorted_edges():
        lhs = sc.block_dist(dims, u, v)
        if lhs >= sc.rv[u] + sc.rv[v]:
            record(5, u, v, lhs, sc.rv[u] + sc.rv[v])
    return fails


def verify(g: Graph, emb: Embedding) -> VerificationReport:
    if emb.graph.n != g.n:
        raise ValueError(f"embedding is for n={emb.graph.n}, graph has n={g.n}")
    if any(len(row) != emb.d for row in emb.coords):
        raise ValueError("coordinate matrix width disagrees with d")

    diagnostics: dict[str, Any] = {}

    try:
        points = PointSet.from_rows(emb.coords)
        realized = compute_sig(points)
        radii = compute_radii(points)
    except ValueError as exc:
        diagnostics["degenerate"] = str(exc)
        report = VerificationReport(False, False, False, [], diagnostics)
        return report

    sig_equal = realized.edges == g.edges
    if not sig_equal:
        missing = sorted(g.edges - realized.edges)
        extra = sorted(realized.edges - g.edges)
        diagnostics["missing_edges"] = [list(e) for e in missing[:10]]
        diagnostics["extra_edges"] = [list(e) for e in extra[:10]]

    mismatches = [
        (v, radii[v], emb.schedule.rv[v])
        for v in range(g.n)
        if radii[v] != emb.schedule.rv[v]
    ]
    radius_agree = not mismatches
    if mismatches:
        diagnostics["radius_mismatches"] = [
            {"vertex": v, "actual": rat_to_json(a), "scheduled": rat_to_json(s)}
            for v, a, s in mismatches[:10]
        ]

    general, refined = dimension_bound(g.n)
    bound_ok = emb.d <= general and (refined is None or emb.d <= refined)
    if not bound_ok:
        diagnostics["dimension"] = {"d": emb.d, "general": general, "refined": refined}

    scaled = _Scaled(emb)
    failures: list[InequalityFailure] = []
    for k in range(emb.picks.count):
        failures.extend(check_inequalities(g, emb, k, _scaled=scaled))

    return VerificationReport(sig_equal, radius_agree, bound_ok, failures, diagnostics)
