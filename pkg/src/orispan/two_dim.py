"""2D constructions: oriented complete graphs, greedy triangulations,
consistent orientations, an exhaustive orientation oracle, and the point
set fixtures used to probe lower bounds."""

from __future__ import annotations

import itertools
import math

import numpy as np

from .errors import (
    GeometryError,
    GraphError,
    GuardError,
    NotOrientableError,
    TooFewPointsError,
)
from .geometry import PointSet, min_triangle_perimeters, optimal_triangle
from .graphs import OrientedGraph, build_graph

# Orientation-predicate epsilon: cross products with absolute value at or
# below this count as collinear.
ORIENT_EPS = 1e-12


class Triangulation:
    """Plane straight-line edge set over a 2D point set.

    Edges are undirected index pairs; proper interior crossings are
    rejected, shared endpoints are fine.
    """

    __slots__ = ("base", "edges", "_faces")

    def __init__(self, base: PointSet, edges):
        if base.dim != 2:
            raise GeometryError("a triangulation needs a 2D point set")
        n = len(base)
        norm = []
        for a, b in edges:
            a, b = int(a), int(b)
            if not (0 <= a < n and 0 <= b < n):
                raise IndexError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise GraphError(f"self-loop at {a}")
            norm.append((min(a, b), max(a, b)))
        if len(set(norm)) != len(norm):
            raise GraphError("duplicate edge")
        self.edges = tuple(sorted(norm))
        self.base = base
        _check_no_crossings(base.coords, self.edges)
        self._faces = None

    def __repr__(self) -> str:
        return f"Triangulation(n={len(self.base)}, edges={len(self.edges)})"

    def faces(self):
        """Bounded faces as vertex cycles in counter-clockwise order."""
        if self._faces is None:
            bounded, _ = _trace_faces(self.base.coords, self.edges)
            self._faces = tuple(tuple(f) for f in bounded)
        return self._faces


def _signs(vals: np.ndarray) -> np.ndarray:
    return np.where(vals > ORIENT_EPS, 1, np.where(vals < -ORIENT_EPS, -1, 0))


def _check_no_crossings(coords, edges) -> None:
    m = len(edges)
    if m < 2:
        return
    e = np.asarray(edges)
    a = coords[e[:, 0]]
    b = coords[e[:, 1]]
    for k in range(m):
        p, q = e[k]
        share = (e[:k, 0] == p) | (e[:k, 0] == q) | (e[:k, 1] == p) | (e[:k, 1] == q)
        if _crossings(coords[p], coords[q], a[:k], b[:k], share).any():
            raise GraphError("edges cross: not a plane straight-line graph")


def _crossings(p, q, a, b, share) -> np.ndarray:
    """Vectorised proper-intersection test of segment pq against rows of (a, b)."""
    pq = q - p
    d1 = _signs(pq[0] * (a[:, 1] - p[1]) - pq[1] * (a[:, 0] - p[0]))
    d2 = _signs(pq[0] * (b[:, 1] - p[1]) - pq[1] * (b[:, 0] - p[0]))
    ab = b - a
    d3 = _signs(ab[:, 0] * (p[1] - a[:, 1]) - ab[:, 1] * (p[0] - a[:, 0]))
    d4 = _signs(ab[:, 0] * (q[1] - a[:, 1]) - ab[:, 1] * (q[0] - a[:, 0]))
    return (d1 * d2 == -1) & (d3 * d4 == -1) & ~share


def _reject_collinear_triples(coords) -> None:
    n = coords.shape[0]
    for i in range(n):
        u = coords - coords[i]
        cross = np.abs(u[:, 0, None] * u[None, :, 1] - u[:, 1, None] * u[None, :, 0])
        cross[i, :] = np.inf
        cross[:, i] = np.inf
        np.fill_diagonal(cross, np.inf)
        jj, kk = np.nonzero(cross <= ORIENT_EPS)
        if jj.size:
            raise GeometryError(
                f"degenerate input: points {i}, {jj[0]}, {kk[0]} are collinear"
            )


def greedy_triangulation(pts: PointSet) -> Triangulation:
    """Insert point pairs by increasing distance, skipping crossing segments.

    Distance ties break on the lexicographic index pair.  Collinear
    triples are rejected up front: with them, "triangulation" is
    ill-defined.  For points in convex position the result has 2n - 3
    edges.
    """
    if pts.dim != 2:
        raise GeometryError("greedy_triangulation requires a 2D point set")
    n = len(pts)
    if n < 3:
        raise TooFewPointsError("no oriented spanners for |P| < 3")
    coords = pts.coords
    _reject_collinear_triples(coords)

    iu, ju = np.triu_indices(n, k=1)
    d = pts.distance_matrix()[iu, ju]
    order = np.lexsort((ju, iu, d))

    cap = 3 * n
    a = np.empty((cap, 2))
    b = np.empty((cap, 2))
    ea = np.empty(cap, dtype=np.int64)
    eb = np.empty(cap, dtype=np.int64)
    m = 0
    accepted = []
    for k in order:
        p, q = int(iu[k]), int(ju[k])
        if m:
            share = (ea[:m] == p) | (ea[:m] == q) | (eb[:m] == p) | (eb[:m] == q)
            if _crossings(coords[p], coords[q], a[:m], b[:m], share).any():
                continue
        a[m] = coords[p]
        b[m] = coords[q]
        ea[m] = p
        eb[m] = q
        m += 1
        accepted.append((p, q))
    return Triangulation(pts, accepted)


def _trace_faces(coords, edges):
    """Split the plane graph into faces by rotational sweep.

    Returns (bounded_faces, outer_face); bounded faces come out in
    counter-clockwise vertex order.
    """
    nbrs: dict[int, list[int]] = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    for v, lst in nbrs.items():
        lst.sort(key=lambda u: math.atan2(coords[u][1] - coords[v][1], coords[u][0] - coords[v][0]))
    pos = {(v, u): k for v, lst in nbrs.items() for k, u in enumerate(lst)}

    half_edges = sorted(pos)  # deterministic traversal order
    seen: set[tuple[int, int]] = set()
    bounded = []
    outer = None
    for start in half_edges:
        if start in seen:
            continue
        face = []
        u, v = start
        while (u, v) not in seen:
            seen.add((u, v))
            face.append(u)
            lst = nbrs[v]
            # Clockwise-next neighbour of u around v keeps the face on the
            # left, so bounded faces come out counter-clockwise.
            u, v = v, lst[(pos[(v, u)] - 1) % len(lst)]
        area = 0.0
        for i in range(len(face)):
            x0, y0 = coords[face[i]]
            x1, y1 = coords[face[(i + 1) % len(face)]]
            area += x0 * y1 - x1 * y0
        if area > 0:
            bounded.append(face)
        else:
            if outer is not None:
                raise GraphError("edge set is not a connected plane graph")
            outer = face
    return bounded, outer


def consistent_orientation(tri: Triangulation) -> OrientedGraph:
    """Orient a triangulation so every bounded face is a directed 3-cycle.

    Adjacent faces must wind in opposite senses, so an orientation exists
    exactly when the dual graph is bipartite; a triangulation of a convex
    point set always is (its dual is a tree).  The output is canonical:
    the face containing the lexicographically smallest vertex triple winds
    counter-clockwise.  The only other valid output is the full reversal.
    """
    bounded, _ = _trace_faces(tri.base.coords, tri.edges)
    if not bounded:
        raise NotOrientableError("no bounded faces to orient")
    for f in bounded:
        if len(f) != 3:
            raise NotOrientableError("a bounded face is not a triangle")

    by_edge: dict[tuple[int, int], list[int]] = {}
    for fi, f in enumerate(bounded):
        for i in range(3):
            u, v = f[i], f[(i + 1) % 3]
            by_edge.setdefault((min(u, v), max(u, v)), []).append(fi)

    sense = [0] * len(bounded)
    anchor_order = sorted(range(len(bounded)), key=lambda fi: tuple(sorted(bounded[fi])))
    for anchor in anchor_order:
        if sense[anchor]:
            continue
        sense[anchor] = 1
        stack = [anchor]
        while stack:
            fi = stack.pop()
            f = bounded[fi]
            for i in range(3):
                u, v = f[i], f[(i + 1) % 3]
                for fj in by_edge[(min(u, v), max(u, v))]:
                    if fj == fi:
                        continue
                    if sense[fj] == 0:
                        sense[fj] = -sense[fi]
                        stack.append(fj)
                    elif sense[fj] != -sense[fi]:
                        raise NotOrientableError(
                            "not orientable: dual graph has an odd cycle"
                        )

    directed: dict[tuple[int, int], tuple[int, int]] = {}
    for fi, f in enumerate(bounded):
        for i in range(3):
            u, v = f[i], f[(i + 1) % 3]
            e = (u, v) if sense[fi] == 1 else (v, u)
            key = (min(u, v), max(u, v))
            prev = directed.get(key)
            if prev is None:
                directed[key] = e
            elif prev != e:  # cannot happen once senses are consistent
                raise NotOrientableError("inconsistent face orientations")
    return build_graph(tri.base, sorted(directed.values()))


def orient_complete(pts: PointSet, return_trace: bool = False):
    """Orient the complete graph into a 2-spanner.

    Triangles are processed by increasing perimeter (ties: lexicographic
    vertex triple).  A triangle with no oriented edge yet is made a
    directed cycle, seeded by directing its lexicographically first edge
    small-to-large; one oriented edge fixes the cycle; two or more leave
    it untouched.  Any pair still undirected afterwards is directed
    small-to-large.

    With ``return_trace`` also returns, per pair, how many edges of that
    pair's optimal triangle were already oriented when it was processed.
    """
    if len(pts) < 3:
        raise TooFewPointsError("no oriented spanners for |P| < 3")
    n = len(pts)
    d = pts.distance_matrix()
    triangles = sorted(
        (d[i, j] + d[j, k] + d[i, k], (i, j, k))
        for i, j, k in itertools.combinations(range(n), 3)
    )

    direction: dict[tuple[int, int], tuple[int, int]] = {}
    preoriented: dict[tuple[int, int, int], int] = {}

    def tri_pairs(t):
        i, j, k = t
        return ((i, j), (j, k), (i, k))

    for _, t in triangles:
        count = sum(1 for e in tri_pairs(t) if e in direction)
        preoriented[t] = count
        if count >= 2:
            continue
        if count == 0:
            i, j, _ = t
            direction[(i, j)] = (i, j)
        # Complete the directed cycle fixed by the one oriented edge.
        fixed = next(e for e in tri_pairs(t) if e in direction)
        u, v = direction[fixed]
        w = next(x for x in t if x != u and x != v)
        direction[tuple(sorted((v, w)))] = (v, w)
        direction[tuple(sorted((w, u)))] = (w, u)

    for pair in itertools.combinations(range(n), 2):
        if pair not in direction:  # unreachable for n >= 3, kept as a guard
            direction[pair] = pair

    graph = build_graph(pts, sorted(direction.values()))
    if not return_trace:
        return graph
    trace = {}
    for i, j in itertools.combinations(range(n), 2):
        third = optimal_triangle(pts, i, j).third
        trace[(i, j)] = preoriented[tuple(sorted((i, j, third)))]
    return graph, trace


def min_dilation_over_orientations(
    pts: PointSet, undirected_edges, max_edges: int = 24, batch: int = 4096
) -> tuple[OrientedGraph, float]:
    """Exhaustive oracle: best orientation of an undirected edge set.

    Tries all 2^m orientations (bit b reverses edge b) with a batched
    Floyd-Warshall, and returns the first orientation attaining the
    minimum dilation, so ties break by enumeration order.  Unreachable
    pairs score +inf and lose to any finite orientation.
    """
    n = len(pts)
    if n < 3:
        raise TooFewPointsError("no oriented spanners for |P| < 3")
    edges = []
    seen = set()
    for a, b in undirected_edges:
        e = (min(int(a), int(b)), max(int(a), int(b)))
        if e[0] == e[1]:
            raise GraphError(f"self-loop at {e[0]}")
        if not (0 <= e[0] < n and e[1] < n):
            raise IndexError(f"edge {e} out of range for n={n}")
        if e in seen:
            continue
        seen.add(e)
        edges.append(e)
    m = len(edges)
    if m > max_edges:
        raise GuardError(f"orientation oracle guard: m={m} exceeds {max_edges}")

    peri = min_triangle_perimeters(pts)
    iu, ju = np.triu_indices(n, k=1)
    peri_pairs = peri[iu, ju]
    weights = [float(np.linalg.norm(pts.coords[a] - pts.coords[b])) for a, b in edges]

    total = 1 << m
    best_val = math.inf
    best_mask = 0
    for off in range(0, total, batch):
        masks = np.arange(off, min(off + batch, total), dtype=np.int64)
        bsz = masks.size
        dist = np.full((bsz, n, n), np.inf)
        dist[:, np.arange(n), np.arange(n)] = 0.0
        for b, ((u, v), w) in enumerate(zip(edges, weights)):
            rev = ((masks >> b) & 1).astype(bool)
            dist[~rev, u, v] = w
            dist[rev, v, u] = w
        for k in range(n):
            np.minimum(dist, dist[:, :, k, None] + dist[:, None, k, :], out=dist)
        rt = dist + dist.transpose(0, 2, 1)
        vals = (rt[:, iu, ju] / peri_pairs).max(axis=1)
        k = int(np.argmin(vals))  # first minimum within the batch
        if vals[k] < best_val:
            best_val = float(vals[k])
            best_mask = int(masks[k])

    oriented = [
        (v, u) if (best_mask >> b) & 1 else (u, v) for b, (u, v) in enumerate(edges)
    ]
    return build_graph(pts, oriented), best_val


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


def make_k4_fixture(scale: float = 1.0) -> PointSet:
    """Equilateral triangle of the given side with its centroid inside.

    Indices 0, 1, 3 are the corners and 2 the centroid.  No orientation of
    any graph on these four points beats dilation 2*sqrt(3) - 2.
    """
    if scale <= 0:
        raise GeometryError("scale must be positive")
    s = float(scale)
    return PointSet(
        [
            (0.0, 0.0),
            (s, 0.0),
            (s / 2.0, s * math.sqrt(3.0) / 6.0),  # centroid
            (s / 2.0, s * math.sqrt(3.0) / 2.0),
        ]
    )


def make_nonconvex_fixture(
    n: int,
    eps: float = 1e-2,
    delta: float = 1e-3,
    delta2: float = 1e-4,
    hub_gap: float | None = None,
) -> PointSet:
    """Point set whose greedy triangulation is a bad spanner however oriented.

    Indices 2..n-1 sit on a flat parabola at unit x-spacing with total sag
    ``delta2``; the hub (index 1) is ``hub_gap`` right of index 2 at the
    parabola's base level, and index 0 is another 1 + eps right and
    ``delta`` below.  Every long edge out of index 0 is blocked by the fan
    out of the hub, so the greedy triangulation leaves index 0 with
    exactly the neighbours 1 and n - 1, and every orientation pays a
    detour of at least (n - 2 + hub_gap + eps) / (1 + hub_gap + eps)
    between indices 0 and 2.  The default ``hub_gap`` of
    (n - 4) / (2 (n - 2)) keeps that ratio above (n + eps) / (2 + eps)
    for any eps below (n - 4) / 2; pass ``hub_gap=1.0`` for the
    unit-spaced variant, whose guarantee is (n - 1 + eps) / (2 + eps).
    """
    if n < 5:
        raise GeometryError("fixture needs at least 5 points for the fan structure")
    if eps <= 0 or delta <= 0 or delta2 <= 0:
        raise GeometryError("eps, delta and delta2 must be positive")
    g = (n - 4.0) / (2.0 * (n - 2.0)) if hub_gap is None else float(hub_gap)
    if g <= 0:
        raise GeometryError("hub_gap must be positive")
    # Edges from index 0 must dip under the hub to be blocked by its fan.
    if delta2 * (1.0 + eps) >= delta * g:
        raise GeometryError("delta * hub_gap must exceed delta2 * (1 + eps)")
    c = delta2 / (n - 3) ** 2  # arc spans height delta2 over its n - 3 units
    hub_x = n - 3.0 + g
    points = [(hub_x + 1.0 + eps, -delta), (hub_x, 0.0)]
    for i in range(3, n + 1):
        x = float(n - i)
        points.append((x, c * x * x))
    return PointSet(points)


def make_delaunay_counterexample(
    separation: float, spread: float = 0.1
) -> tuple[PointSet, tuple[tuple[int, int], ...]]:
    """Four points and five edges on which every orientation dilates badly.

    Points 1, 2, 3 form a flat cluster on a circle of radius ``separation``
    and point 0 sits at the circle's centre, ``separation`` away.  The
    five returned undirected edges are the fan from point 0 plus the two
    short cluster edges; any oriented cycle through the outer cluster pair
    must run through point 0, so shrinking ``spread`` (or growing
    ``separation``) blows the dilation up.
    """
    if separation <= 0:
        raise GeometryError("separation must be positive")
    if not 0 < spread < separation:
        raise GeometryError("spread must be in (0, separation)")
    r = float(separation)
    theta = math.asin(spread / r)
    pts = PointSet(
        [
            (0.0, r),  # circle centre
            (r * math.sin(theta), r * (1.0 - math.cos(theta))),
            (0.0, 0.0),  # bottom of the circle
            (-r * math.sin(theta), r * (1.0 - math.cos(theta))),
        ]
    )
    edges = ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3))
    return pts, edges
