"""Command-line front end.

Subcommands: ``build`` (run a construction, write an edge file),
``dilation`` (evaluate a graph, write a JSON report), ``oracle`` (run the
exhaustive checkers, write a comparison report), ``render`` (draw a
figure), and ``gen`` (the bundled test-data generator).  Domain errors
exit nonzero with a single machine-readable JSON line on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import fileio, one_dim, two_dim
from .errors import GeometryError, SpannerError
from .geometry import PointSet
from .graphs import build_graph, oriented_dilation
from .plotting import render_graph

ALGORITHMS = {
    "oneD-1spanner": 1,
    "oneD-2page": 1,
    "oneD-greedy": 1,
    "oneD-optimal": 1,
    "twoD-complete": 2,
    "twoD-greedy": 2,
}

GEN_KINDS = ("random-1d", "random-2d", "convex", "k4", "nonconvex", "delaunay", "worstcase-1d")


@dataclass
class RunConfig:
    """Validated invocation: command, algorithm, paths and knobs."""

    command: str
    algorithm: str | None = None
    input: str | None = None
    edges: str | None = None
    output: str | None = None
    sort: bool = False
    all_pairs: bool = False
    eps: float = 1e-2
    n: int | None = None
    guard: int | None = None
    seed: int = 0
    extra: dict = field(default_factory=dict)

    def check_dimension(self, pts: PointSet) -> None:
        want = ALGORITHMS[self.algorithm]
        if pts.dim != want:
            raise GeometryError(
                f"algorithm {self.algorithm} requires {want}-dimensional input, got {pts.dim}D"
            )


def _read_points(path: str) -> PointSet:
    return fileio.parse_points(Path(path).read_text())


def _sorted_view(pts: PointSet, want_sort: bool):
    """Sorted working copy for 1D algorithms plus index map back to file order."""
    if pts.sorted_ascending:
        return pts, None
    if not want_sort:
        raise GeometryError("1D input is not sorted ascending; pass --sort to sort it")
    order = np.argsort(pts.xs, kind="stable")
    return PointSet(pts.xs[order]), order


def _map_edges(edges, order):
    if order is None:
        return list(edges)
    return [(int(order[u]), int(order[v])) for u, v in edges]


def _cmd_build(cfg: RunConfig) -> int:
    pts = _read_points(cfg.input)
    cfg.check_dimension(pts)
    if pts.dim == 1:
        work, order = _sorted_view(pts, cfg.sort)
    else:
        work, order = pts, None

    if cfg.algorithm == "oneD-1spanner":
        graph = one_dim.build_1spanner_1d(work)
    elif cfg.algorithm == "oneD-2page":
        graph = one_dim.build_2page_2spanner(work)
    elif cfg.algorithm == "oneD-greedy":
        graph = one_dim.greedy_1ppb(work).graph
    elif cfg.algorithm == "oneD-optimal":
        guard = cfg.guard if cfg.guard is not None else 12
        graph = one_dim.optimal_1ppb(work, max_points=guard)[0].graph
    elif cfg.algorithm == "twoD-complete":
        graph = two_dim.orient_complete(work)
    else:  # twoD-greedy
        graph = two_dim.consistent_orientation(two_dim.greedy_triangulation(work))

    out = sorted(_map_edges(graph.edges(), order))
    Path(cfg.output).write_text(fileio.format_edges(out))
    print(f"wrote {len(out)} edges to {cfg.output}")
    if cfg.extra.get("figure"):
        render_graph(pts, out, cfg.extra["figure"])
        print(f"wrote figure to {cfg.extra['figure']}")
    return 0


def _cmd_dilation(cfg: RunConfig) -> int:
    pts = _read_points(cfg.input)
    edges = fileio.parse_edges(Path(cfg.edges).read_text())
    graph = build_graph(pts, edges)
    report = oriented_dilation(graph, include_pairs=cfg.all_pairs)
    Path(cfg.output).write_text(fileio.report_to_json(report))
    shown = report.dilation if report.finite else math.inf
    print(f"dilation = {shown} at witness {report.witness}")
    if cfg.extra.get("figure"):
        render_graph(pts, edges, cfg.extra["figure"])
        print(f"wrote figure to {cfg.extra['figure']}")
    return 0


def _cmd_oracle(cfg: RunConfig) -> int:
    pts = _read_points(cfg.input)
    kind = cfg.extra["kind"]
    if kind == "1ppb-enumeration":
        work, _ = _sorted_view(pts, cfg.sort)
        guard = cfg.guard if cfg.guard is not None else 12
        count = 0
        worst_gap = 0.0
        best = None
        for g in one_dim.enumerate_maximal_1ppb(work, max_points=guard):
            fast = one_dim.dilation_1ppb(g).dilation
            slow = oriented_dilation(g.graph).dilation
            worst_gap = max(worst_gap, abs(fast - slow) / slow)
            if best is None or fast < best[0]:
                best = (fast, g.back_edges)
            count += 1
        dp_graph, dp_value = one_dim.optimal_1ppb(work, max_points=guard)
        obj = {
            "count": count,
            "max_rel_diff_scan_vs_oracle": worst_gap,
            "min_dilation": best[0],
            "min_back_edges": [list(e) for e in best[1]],
            "dp_dilation": dp_value,
            "dp_back_edges": [list(e) for e in dp_graph.back_edges],
            "dp_matches_min": bool(abs(dp_value - best[0]) <= 1e-12 * best[0]),
        }
    elif kind == "orientations":
        edges = fileio.parse_edges(Path(cfg.edges).read_text())
        guard = cfg.guard if cfg.guard is not None else 24
        graph, value = two_dim.min_dilation_over_orientations(pts, edges, max_edges=guard)
        obj = {
            "edge_count": len(edges),
            "orientations": 1 << len({(min(u, v), max(u, v)) for u, v in edges}),
            "min_dilation": value,
            "best_edges": [list(e) for e in graph.edges()],
        }
    else:
        raise GeometryError(f"unknown oracle kind {kind!r}")
    Path(cfg.output).write_text(fileio._json_value(obj) + "\n")
    print(f"wrote oracle report to {cfg.output}")
    return 0


def _cmd_render(cfg: RunConfig) -> int:
    pts = _read_points(cfg.input)
    edges = fileio.parse_edges(Path(cfg.edges).read_text()) if cfg.edges else []
    render_graph(pts, edges, cfg.output)
    print(f"wrote figure to {cfg.output}")
    return 0


def _fig12_gaps(n: int, eps: float) -> list[float]:
    if n < 5:
        raise GeometryError("worstcase-1d needs n >= 5")
    return [3 - 5 * eps, 1.0, eps, 1 - 3 * eps] + [1 - eps] * (n - 5)


def _cmd_gen(cfg: RunConfig) -> int:
    kind = cfg.extra["kind"]
    rng = np.random.default_rng(cfg.seed)
    n = cfg.n if cfg.n is not None else 10
    scale = cfg.extra.get("scale", 1.0)
    if kind == "random-1d":
        xs = np.sort(rng.uniform(0.0, 100.0, size=n))
        pts = PointSet(xs)
    elif kind == "random-2d":
        pts = PointSet(rng.uniform(0.0, 100.0, size=(n, 2)))
    elif kind == "convex":
        ang = np.sort(rng.uniform(0.0, 2 * math.pi, size=n))
        pts = PointSet(np.column_stack([scale * np.cos(ang), scale * np.sin(ang)]))
    elif kind == "k4":
        pts = two_dim.make_k4_fixture(scale)
    elif kind == "nonconvex":
        pts = two_dim.make_nonconvex_fixture(n, eps=cfg.eps)
    elif kind == "delaunay":
        pts = two_dim.make_delaunay_counterexample(cfg.extra.get("separation", 10.0))[0]
    else:  # worstcase-1d
        gaps = _fig12_gaps(n, cfg.eps)
        pts = PointSet(np.concatenate([[0.0], np.cumsum(gaps)]))
    Path(cfg.output).write_text(fileio.format_points(pts))
    print(f"wrote {len(pts)} points to {cfg.output}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="orispan", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, *, needs_output=True):
        p.add_argument("--input", required=True, help="point file")
        if needs_output:
            p.add_argument("--output", required=True, help="output path")
        p.add_argument("--sort", action="store_true", help="sort unsorted 1D input")
        p.add_argument("--guard", type=int, default=None, help="size guard override")

    p = sub.add_parser("build", help="run a construction and write its edge file")
    p.add_argument("--algorithm", required=True, choices=sorted(ALGORITHMS))
    p.add_argument("--figure", default=None, help="also render the result to this file")
    common(p)

    p = sub.add_parser("dilation", help="evaluate oriented dilation of points + edges")
    p.add_argument("--edges", required=True, help="edge file")
    p.add_argument("--all-pairs", action="store_true", help="include the per-pair table")
    p.add_argument("--figure", default=None, help="also render the graph to this file")
    common(p)

    p = sub.add_parser("oracle", help="exhaustive cross-checks")
    p.add_argument("--kind", required=True, choices=["1ppb-enumeration", "orientations"])
    p.add_argument("--edges", default=None, help="edge file (orientations kind)")
    common(p)

    p = sub.add_parser("render", help="draw points and edges to a figure (SVG by default)")
    p.add_argument("--edges", default=None, help="edge file")
    common(p)

    p = sub.add_parser("gen", help="bundled test-data generator")
    p.add_argument("--kind", required=True, choices=GEN_KINDS)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--eps", type=float, default=1e-2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--separation", type=float, default=10.0)
    p.add_argument("--output", required=True)
    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        algorithm=getattr(args, "algorithm", None),
        input=getattr(args, "input", None),
        edges=getattr(args, "edges", None),
        output=getattr(args, "output", None),
        sort=getattr(args, "sort", False),
        all_pairs=getattr(args, "all_pairs", False),
        eps=getattr(args, "eps", 1e-2),
        n=getattr(args, "n", None),
        guard=getattr(args, "guard", None),
        seed=getattr(args, "seed", 0),
        extra={
            k: getattr(args, k)
            for k in ("kind", "scale", "separation", "figure")
            if hasattr(args, k)
        },
    )
    handlers = {
        "build": _cmd_build,
        "dilation": _cmd_dilation,
        "oracle": _cmd_oracle,
        "render": _cmd_render,
        "gen": _cmd_gen,
    }
    try:
        return handlers[cfg.command](cfg)
    except (SpannerError, IndexError, OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
