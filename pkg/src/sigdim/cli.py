"""Command-line front end.

Commands:
  embed       graph file -> embedding JSON + verification summary
  sig         points JSON -> edge list of its sphere-of-influence graph
  verify      graph file + embedding JSON -> verification report
  oracle      graph file -> the n-dimensional 2I+A realization, round-tripped
  fuzz        seeded random graphs through embed+verify, shrinking failures
  exhaustive  every labeled graph without isolated vertices up to max-n

Exit codes: 0 success, 1 input error, 2 verification failure,
3 pipeline diagnostic (a construction guarantee failed on this input).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

from .embedding import Embedding, dimension_bound, embed
from .errors import GraphInputError, PipelineError
from .factor import StarTriangleFactor
from .graphs import Graph, generate_exhaustive, parse_graph, sample_gnp
from .matching import Matching
from .picking import PickClass, PickedSet, PickSequence
from .pseudo import build_pseudo, RadiusSchedule
from .rationals import parse_rational, rat_from_json
from .sig import PointSet, compute_sig, oracle_embed_2ia
from .verify import verify

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2
EXIT_PIPELINE = 3


def _read_graph(path: str) -> Graph:
    text = Path(path).read_text()
    g = parse_graph(text)
    g.require_embeddable()
    return g


def _emit(data: Any, out: str | None) -> None:
    text = json.dumps(data, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _render_report(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    lines = [f"verdict: {report['verdict']}"]
    for key in ("sig_equal", "radius_agree", "bound_ok"):
        lines.append(f"{key}: {'yes' if report[key] else 'NO'}")
    fails = report["inequality_failures"]
    lines.append(f"inequality failures: {len(fails)}")
    for f in fails[:20]:
        lines.append(
            f"  block {f['k']} ineq ({f['inequality']}) pair {tuple(f['pair'])}: "
            f"{f['lhs']} vs {f['rhs']}"
        )
    for key, value in report["diagnostics"].items():
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _summary_stream(out: str | None):
    # Keep stdout clean when it carries the JSON payload.
    return sys.stdout if out else sys.stderr


def embedding_from_json(g: Graph, data: dict[str, Any]) -> Embedding:
    """Rebuild a full Embedding from the JSON written by `embed`."""
    trace = data["trace"]
    fd = trace["factor"]
    factor = StarTriangleFactor(
        stars={int(u): frozenset(s) for u, s in fd["stars"].items()},
        triangles=frozenset(tuple(t) for t in fd["triangles"]),
        residual=Matching(frozenset(tuple(e) for e in fd["matching"])),
    )
    picks = PickSequence(
        tuple(
            PickedSet(p["k"], tuple(p["vertices"]), PickClass(p["class"]),
                      p["step"], dict(p["roles"]))
            for p in trace["picks"]
        ),
        factor,
    )
    pn = build_pseudo(factor, picks)
    r = rat_from_json(data["r"])
    delta = rat_from_json(data["delta"])
    m = {v: trace["m"][v] for v in range(g.n)}
    rv = {v: rat_from_json(trace["rv"][v]) for v in range(g.n)}
    sched = RadiusSchedule(r, delta, m, rv)
    coords = tuple(
        tuple(rat_from_json(x) for x in row) for row in data["coords"]
    )
    from .embedding import DimensionBlock

    blocks = tuple(
        DimensionBlock(
            b["k"], PickClass(b["class"]), b["step"], tuple(b["dims"]),
            {v: tuple(coords[v][j] for j in b["dims"]) for v in range(g.n)},
        )
        for b in data["blocks"]
    )
    return Embedding(g, factor, picks, pn, sched, blocks, coords, data["d"])


def cmd_embed(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.graph)
    except (GraphInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    r = parse_rational(args.r) if args.r else None
    try:
        emb = embed(g, r)
    except PipelineError as exc:
        print(json.dumps(exc.to_json(), indent=2), file=sys.stderr)
        return EXIT_PIPELINE
    report = verify(g, emb)
    _emit(emb.to_json(), args.out)
    general, refined = dimension_bound(g.n)
    bound = general if refined is None else min(general, refined)
    print(f"d={emb.d} bound={bound} verdict={report.verdict}",
          file=_summary_stream(args.out))
    if report.verdict != "pass":
        sys.stderr.write(_render_report(report.to_json(), args.format))
        return EXIT_VERIFY
    return EXIT_OK


def cmd_sig(args: argparse.Namespace) -> int:
    try:
        data = json.loads(Path(args.points).read_text())
        rows = data["coords"] if isinstance(data, dict) else data
        ps = PointSet.from_rows(
            [[rat_from_json(x) for x in row] for row in rows]
        )
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    g = compute_sig(ps)
    sys.stdout.write(g.serialize())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.graph)
        data = json.loads(Path(args.points).read_text())
        emb = embedding_from_json(g, data)
    except (GraphInputError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        report = verify(g, emb)
    except (PipelineError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    rendered = _render_report(report.to_json(), args.format)
    if args.out:
        Path(args.out).write_text(rendered)
    else:
        sys.stdout.write(rendered)
    return EXIT_OK if report.verdict == "pass" else EXIT_VERIFY


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.graph)
    except (GraphInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    ps = oracle_embed_2ia(g)
    ok = compute_sig(ps).edges == g.edges
    _emit(ps.to_json(), args.out)
    print(f"d={ps.d} roundtrip={'ok' if ok else 'MISMATCH'}",
          file=_summary_stream(args.out))
    return EXIT_OK if ok else EXIT_VERIFY


def _run_instance(g: Graph, r: Fraction | None) -> dict[str, Any] | None:
    """Embed + verify; None means clean, otherwise a failure record."""
    try:
        emb = embed(g, r)
    except PipelineError as exc:
        return {"kind": "pipeline", "diagnostic": exc.to_json()}
    report = verify(g, emb)
    if report.verdict == "pass":
        return None
    return {"kind": "verification", "report": report.to_json(),
            "picks": emb.picks.to_json(), "d": emb.d}


def _shrink(g: Graph, r: Fraction | None) -> tuple[Graph, dict[str, Any]]:
    """Greedily delete vertices while embed+verify still fails."""
    failure = _run_instance(g, r)
    assert failure is not None
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            cand = g.delete_vertex(v)
            if cand.n < 2 or cand.isolated_vertices():
                continue
            f = _run_instance(cand, r)
            if f is not None:
                g, failure = cand, f
                improved = True
                break
    return g, failure


def cmd_fuzz(args: argparse.Namespace) -> int:
    if not 2 <= args.n_min <= args.n_max:
        print("error: need 2 <= n-min <= n-max", file=sys.stderr)
        return EXIT_INPUT
    r = parse_rational(args.r) if args.r else None
    p = parse_rational(args.p)
    outdir = Path(args.bundle_dir)
    passed = 0
    failures = []
    slack_hist: dict[int, int] = {}
    for i in range(args.count):
        seed = args.seed + i
        span = args.n_max - args.n_min + 1
        n = args.n_min + seed % span
        g, repairs = sample_gnp(n, p, seed)
        failure = _run_instance(g, r)
        if failure is None:
            passed += 1
            emb = embed(g, r)
            bound, refined = dimension_bound(n)
            limit = bound if refined is None else min(bound, refined)
            slack_hist[limit - emb.d] = slack_hist.get(limit - emb.d, 0) + 1
            continue
        small, small_failure = _shrink(g, r)
        bundle = {
            "graph": g.serialize(),
            "shrunk_graph": small.serialize(),
            "seed": seed,
            "n": n,
            "p": str(p),
            "repaired_edges": [list(e) for e in repairs],
            "r": None if r is None else str(r),
            "failure": failure,
            "shrunk_failure": small_failure,
        }
        outdir.mkdir(parents=True, exist_ok=True)
        path = outdir / f"counterexample-seed{seed}.json"
        path.write_text(json.dumps(bundle, indent=2) + "\n")
        failures.append({"seed": seed, "n": n, "bundle": str(path)})
    summary = {
        "count": args.count,
        "passed": passed,
        "failed": len(failures),
        "failures": failures,
        "bound_slack_histogram": {str(k): v for k, v in sorted(slack_hist.items())},
    }
    _emit(summary, args.out)
    return EXIT_OK


def cmd_exhaustive(args: argparse.Namespace) -> int:
    if not 2 <= args.max_n <= 6:
        print("error: need 2 <= max-n <= 6", file=sys.stderr)
        return EXIT_INPUT
    r = parse_rational(args.r) if args.r else None
    per_n = []
    all_ok = True
    for n in range(2, args.max_n + 1):
        graphs = pipeline_pass = oracle_pass = 0
        failures = []
        for g in generate_exhaustive(n):
            graphs += 1
            if compute_sig(oracle_embed_2ia(g)).edges == g.edges:
                oracle_pass += 1
            failure = _run_instance(g, r)
            if failure is None:
                pipeline_pass += 1
            elif len(failures) < 5:
                failures.append({"graph": g.serialize(), "failure": failure})
        ok = pipeline_pass == graphs and oracle_pass == graphs
        all_ok = all_ok and ok
        per_n.append({
            "n": n,
            "graphs": graphs,
            "pipeline_pass": pipeline_pass,
            "oracle_pass": oracle_pass,
            "failures": failures,
        })
    _emit({"per_n": per_n, "all_pass": all_ok}, args.out)
    return EXIT_OK if all_ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigdim",
        description="Sphere-of-influence realizations under the sup-norm",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="embed a graph and verify the result")
    p.add_argument("graph")
    p.add_argument("-o", "--out", default=None)
    p.add_argument("--r", default=None, help="radius override, e.g. 100 or 7/3")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("sig", help="sphere-of-influence graph of a point set")
    p.add_argument("points")
    p.set_defaults(func=cmd_sig)

    p = sub.add_parser("verify", help="verify an embedding JSON against a graph")
    p.add_argument("graph")
    p.add_argument("points")
    p.add_argument("-o", "--out", default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="n-dimensional 2I+A realization")
    p.add_argument("graph")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("fuzz", help="random graphs through embed+verify")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--p", required=True, help="edge probability, e.g. 1/2")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--r", default=None)
    p.add_argument("--bundle-dir", default="counterexamples")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("exhaustive", help="all labeled graphs up to max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--r", default=None)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_exhaustive)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
