"""Spanner constructions and exact evaluators for sorted 1D point sets.

Both closed-form spanners, the candidate-pair dilation evaluator, the
greedy one-page construction, the linear-time dilation scan for maximal
one-page graphs, the dynamic program for the optimal one-page spanner,
and an exhaustive enumerator used as the oracle in tests.
"""

from __future__ import annotations

import heapq

from .errors import GeometryError, GraphError, GuardError, TooFewPointsError
from .geometry import PointSet, optimal_triangle
from .graphs import (
    DilationReport,
    OrientedGraph,
    PairDilation,
    build_graph,
    shortest_path_matrix,
)


def _require_sorted_1d(pts: PointSet, what: str) -> None:
    if pts.dim != 1:
        raise GeometryError(f"{what} requires a 1D point set")
    if not pts.sorted_ascending:
        raise GeometryError(f"{what} requires coordinates sorted ascending (unsorted input)")


def baseline_edges(n: int) -> list[tuple[int, int]]:
    """The left-to-right path (i, i+1), present in every 1-PPB graph."""
    return [(i, i + 1) for i in range(n - 1)]


class OneppbGraph:
    """One-page plane graph: the baseline plus non-crossing back edges.

    Back edges run right-to-left and skip at least one point; two back
    edges may nest or share endpoints but never cross.  With n - 2 back
    edges the graph is maximal: a triangulation of the convex polygon
    spanned by the line order.
    """

    __slots__ = ("base", "back_edges", "_graph")

    def __init__(self, base: PointSet, back_edges):
        _require_sorted_1d(base, "a 1-PPB graph")
        n = len(base)
        norm = []
        for e in back_edges:
            r, l = int(e[0]), int(e[1])
            if not (0 <= l < n and 0 <= r < n):
                raise IndexError(f"back edge ({r}, {l}) out of range for n={n}")
            if r < l + 2:
                raise GraphError(f"({r}, {l}) is not a back edge: needs r >= l + 2")
            norm.append((r, l))
        if len(set(norm)) != len(norm):
            raise GraphError("duplicate back edge")
        _check_one_page(norm)
        self.base = base
        self.back_edges = tuple(sorted(norm, key=lambda e: (e[1], e[0])))
        self._graph = None

    def __repr__(self) -> str:
        return f"OneppbGraph(n={len(self.base)}, back_edges={len(self.back_edges)})"

    @classmethod
    def _trusted(cls, base: PointSet, back_edges) -> "OneppbGraph":
        # For construction algorithms whose output is valid by design;
        # skips the re-validation pass but keeps the canonical edge order.
        self = object.__new__(cls)
        self.base = base
        self.back_edges = tuple(sorted(back_edges, key=lambda e: (e[1], e[0])))
        self._graph = None
        return self

    @property
    def maximal(self) -> bool:
        return len(self.back_edges) == len(self.base) - 2

    @property
    def graph(self) -> OrientedGraph:
        """The derived oriented graph (baseline plus back edges)."""
        if self._graph is None:
            self._graph = build_graph(
                self.base, baseline_edges(len(self.base)) + list(self.back_edges)
            )
        return self._graph


def _check_one_page(back_edges) -> None:
    """Crossing test for arcs above the line: forbidden iff l < l' < r < r'."""
    intervals = sorted(((l, r) for r, l in back_edges), key=lambda e: (e[0], -e[1]))
    stack: list[tuple[int, int]] = []
    for l, r in intervals:
        while stack and stack[-1][1] <= l:
            stack.pop()
        if stack and r > stack[-1][1]:
            raise GraphError(
                f"back edges ({stack[-1][1]}, {stack[-1][0]}) and ({r}, {l}) cross"
            )
        stack.append((l, r))


def build_1spanner_1d(pts: PointSet) -> OrientedGraph:
    """Dilation-1 oriented graph with 3n - 6 edges.

    Forward baseline plus all skip-2 and skip-3 back edges: every pair
    that matters gets its optimal triangle as an actual cycle.
    """
    _require_sorted_1d(pts, "build_1spanner_1d")
    n = len(pts)
    if n < 3:
        raise TooFewPointsError("no oriented spanners for |P| < 3")
    edges = baseline_edges(n)
    edges += [(j + 2, j) for j in range(n - 2)]
    edges += [(k + 3, k) for k in range(n - 3)]
    return build_graph(pts, edges)


def build_2page_2spanner(pts: PointSet) -> OrientedGraph:
    """Two-page plane graph with 2n - 3 edges and dilation at most 2."""
    _require_sorted_1d(pts, "build_2page_2spanner")
    n = len(pts)
    if n < 3:
        raise TooFewPointsError("no oriented spanners for |P| < 3")
    return build_graph(pts, baseline_edges(n) + [(j + 2, j) for j in range(n - 2)])


def candidate_pairs(n: int) -> list[tuple[int, int]]:
    """The index pairs whose dilation determines the maximum in 1D."""
    if n == 3:
        return [(0, 2)]
    return sorted([(i, i + 2) for i in range(n - 2)] + [(j, j + 3) for j in range(n - 3)])


def dilation_1d_candidates(G: OrientedGraph, include_pairs: bool = False) -> DilationReport:
    """Oriented dilation of a 1D graph from skip-2 and skip-3 pairs only.

    Equals the full evaluator exactly: in one dimension every other pair
    is dominated by one of these.
    """
    pts = G.base
    _require_sorted_1d(pts, "dilation_1d_candidates")
    n = len(pts)
    if n < 3:
        raise TooFewPointsError("no oriented spanners for |P| < 3")
    d = shortest_path_matrix(G)
    best = -1.0
    witness = None
    cycle = 0.0
    rows = []
    for i, j in candidate_pairs(n):
        rt = float(d[i, j] + d[j, i])
        peri = optimal_triangle(pts, i, j).perimeter
        odil = rt / peri
        if include_pairs:
            rows.append((i, j, rt, peri, odil))
        if witness is None or odil > best:
            best = odil
            witness = (i, j)
            cycle = rt
    pairs = tuple(PairDilation(*row) for row in rows) if include_pairs else None
    return DilationReport(dilation=best, witness=witness, cycle_length=cycle, pairs=pairs)


def orient_one_page(pts: PointSet, undirected_edges) -> OneppbGraph:
    """Orient a one-page plane edge set: baseline rightward, the rest leftward.

    The input must contain every consecutive pair.  Among all orientations
    of the same edges, this one never has larger dilation.
    """
    _require_sorted_1d(pts, "orient_one_page")
    n = len(pts)
    pairs = {(min(int(a), int(b)), max(int(a), int(b))) for a, b in undirected_edges}
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError(f"edge ({a}, {b}) out of range for n={n}")
        if a == b:
            raise GraphError(f"self-loop at {a}")
    for i in range(n - 1):
        if (i, i + 1) not in pairs:
            raise GraphError(f"missing consecutive pair ({i}, {i + 1})")
    back = [(b, a) for a, b in pairs if b >= a + 2]
    return OneppbGraph(pts, back)


def greedy_1ppb(pts: PointSet) -> OneppbGraph:
    """Greedy maximal one-page graph; dilation is at most 5.

    Repeatedly covers the surviving point whose list neighbours are
    closest: extract it, add the back edge between those neighbours, and
    update.  Ties extract the smallest point index.  O(n log n).
    """
    _require_sorted_1d(pts, "greedy_1ppb")
    n = len(pts)
    if n < 3:
        raise TooFewPointsError("no oriented spanners for |P| < 3")
    xs = pts.xs.tolist()  # native floats keep the heap loop cheap
    prv = list(range(-1, n - 1))
    nxt = list(range(1, n + 1))
    alive = [True] * n
    val = [0.0] * n
    heap: list[tuple[float, int]] = []
    for i in range(1, n - 1):
        val[i] = xs[i + 1] - xs[i - 1]
        heap.append((val[i], i))
    heapq.heapify(heap)

    back: list[tuple[int, int]] = []
    while len(back) < n - 2:
        v, p = heapq.heappop(heap)
        if not alive[p] or v != val[p]:
            continue  # stale heap entry
        left, right = prv[p], nxt[p]
        back.append((right, left))
        alive[p] = False
        nxt[left] = right
        prv[right] = left
        for q in (left, right):
            if 0 < q < n - 1 and alive[q]:
                val[q] = xs[nxt[q]] - xs[prv[q]]
                heapq.heappush(heap, (val[q], q))
    return OneppbGraph._trusted(pts, back)


def _scan_max_dilation(xs, lo: int, hi: int, back_edges):
    """Max dilation of a maximal 1-PPB graph on points lo..hi, O(hi - lo).

    Walks the interior points and reads off the shortest cycle through
    each (p_{i-1}, p_{i+1}) pair from four local degree cases; in a
    maximal graph those pairs carry the maximum.  Returns
    (dilation, witness index pair, cycle length).
    """
    rin: dict[int, int] = {}  # innermost back-edge source into a vertex
    lout: dict[int, int] = {}  # innermost back-edge target out of a vertex
    for r, l in back_edges:
        if l not in rin or r < rin[l]:
            rin[l] = r
        if r not in lout or l > lout[r]:
            lout[r] = l

    best = -1.0
    best_pair = None
    best_half = 0.0
    for i in range(lo + 1, hi):
        gap = xs[i + 1] - xs[i - 1]
        has_in = i in rin
        has_out = i in lout
        if not has_in and not has_out:
            half = gap  # the covering edge (i+1, i-1) closes the triangle
        elif has_in and not has_out:
            r = rin.get(i - 1)
            if r is None:
                raise GraphError("not a maximal 1-PPB graph")
            half = xs[r] - xs[i - 1]
        elif has_out and not has_in:
            l = lout.get(i + 1)
            if l is None:
                raise GraphError("not a maximal 1-PPB graph")
            half = xs[i + 1] - xs[l]
        else:
            half = xs[rin[i]] - xs[lout[i]]
        t = half / gap
        if best_pair is None or t > best:
            best = t
            best_pair = (i - 1, i + 1)
            best_half = half
    return best, best_pair, best_half


def dilation_1ppb(G: OneppbGraph) -> DilationReport:
    """Dilation of a maximal 1-PPB graph in linear time.

    Exact: agrees with the all-pairs evaluator on the derived graph.
    """
    if not G.maximal:
        raise GraphError(
            f"dilation_1ppb needs a maximal graph: expected {len(G.base) - 2} "
            f"back edges, got {len(G.back_edges)}"
        )
    xs = G.base.xs.tolist()
    t, pair, half = _scan_max_dilation(xs, 0, len(G.base) - 1, G.back_edges)
    return DilationReport(dilation=t, witness=pair, cycle_length=2.0 * half)


def enumerate_maximal_1ppb(pts: PointSet, max_points: int = 14):
    """Yield every maximal 1-PPB graph exactly once, deterministic order.

    There are Catalan(n - 2) of them, one per triangulation of the convex
    polygon induced by the line order, hence the size guard.
    """
    _require_sorted_1d(pts, "enumerate_maximal_1ppb")
    n = len(pts)
    if n < 3:
        raise TooFewPointsError("no oriented spanners for |P| < 3")
    if n > max_points:
        raise GuardError(f"enumeration guard: n={n} exceeds {max_points}")

    def tris(l, r):
        # Triangulations of the sub-polygon l..r closed by the chord (l, r);
        # split on the apex of the triangle resting on that chord.
        if r - l < 2:
            yield frozenset()
            return
        for m in range(l + 1, r):
            for left in tris(l, m):
                for right in tris(m, r):
                    extra = []
                    if m - l >= 2:
                        extra.append((m, l))
                    if r - m >= 2:
                        extra.append((r, m))
                    yield left | right | frozenset(extra)

    closure = frozenset({(n - 1, 0)})
    for diagonals in tris(0, n - 1):
        yield OneppbGraph._trusted(pts, diagonals | closure)


def optimal_1ppb(pts: PointSet, max_points: int = 12) -> tuple[OneppbGraph, float]:
    """Minimum-dilation maximal 1-PPB graph via dynamic programming.

    The table is indexed by a sub-range [l, r] plus two boundary
    parameters: lp, the innermost back-edge source into p_l, and rp, the
    innermost back-edge target out of p_r.  Each cell stores the back-edge
    set minimising the dilation of the sub-range graph (own baseline),
    scored with the linear-time scan.  Seven cases drive the recursion;
    candidate ties resolve to the lexicographically smallest choice.
    O(n^8) overall, hence the configurable guard.
    """
    _require_sorted_1d(pts, "optimal_1ppb")
    n = len(pts)
    if n < 3:
        raise TooFewPointsError("no oriented spanners for |P| < 3")
    if n > max_points:
        raise GuardError(f"optimal_1ppb guard: n={n} exceeds {max_points}")
    xs = pts.xs.tolist()
    memo: dict[tuple[int, int, int, int], tuple[float, frozenset] | None] = {}

    def score(l, r, edges):
        return _scan_max_dilation(xs, l, r, edges)[0]

    def solve(l, lp, rp, r):
        # (i)/(ii): boundary parameters outside their ranges, or too few points.
        if r < l + 2 or not (l + 2 <= lp <= r) or not (l <= rp <= r - 2):
            return None
        key = (l, lp, rp, r)
        if key in memo:
            return memo[key]

        if lp == r and rp == l:
            # (iii): both boundary cycles use the closing edge itself, which
            # in a maximal graph forces the 3-point base case.
            res = (1.0, frozenset({(r, l)})) if r == l + 2 else None
        elif lp < r and rp == l:
            # (v): only back edge out of p_r is (r, l), so (r-1, l) is present;
            # recurse on [l, r-1] choosing its right boundary parameter.
            best = None
            for kr in range(l, r - 2):
                sub = solve(l, lp, kr, r - 1)
                if sub is None:
                    continue
                edges = sub[1] | {(r, l)}
                sc = score(l, r, edges)
                if best is None or sc < best[0]:
                    best = (sc, edges)
            res = best
        elif lp == r and rp > l:
            # (vi): mirror image of (v) on [l+1, r].
            best = None
            for kl in range(l + 3, r + 1):
                sub = solve(l + 1, kl, rp, r)
                if sub is None:
                    continue
                edges = sub[1] | {(r, l)}
                sc = score(l, r, edges)
                if best is None or sc < best[0]:
                    best = (sc, edges)
            res = best
        elif lp > rp:
            # (iv): the two boundary back edges would cross.
            res = None
        else:
            # (vii): split at an interior point k covered by (r, l); kr and kl
            # are the boundary parameters the halves meet at.
            best = None
            best_choice = None
            for k in range(l + 2, r - 1):
                for kr in range(l, k - 1):
                    left = solve(l, lp, kr, k)
                    if left is None:
                        continue
                    for kl in range(k + 2, r + 1):
                        right = solve(k, kl, rp, r)
                        if right is None:
                            continue
                        edges = left[1] | right[1] | {(r, l)}
                        sc = score(l, r, edges)
                        choice = (kr, k, kl)
                        if (
                            best is None
                            or sc < best[0]
                            or (sc == best[0] and choice < best_choice)
                        ):
                            best = (sc, edges)
                            best_choice = choice
            res = best
        memo[key] = res
        return res

    best = None
    best_bounds = None
    for lp in range(2, n):
        for rp in range(0, n - 2):
            cand = solve(0, lp, rp, n - 1)
            if cand is None:
                continue
            bounds = (lp, rp)
            if best is None or cand[0] < best[0] or (cand[0] == best[0] and bounds < best_bounds):
                best = cand
                best_bounds = bounds
    assert best is not None  # every n >= 3 admits a maximal graph
    graph = OneppbGraph._trusted(pts, best[1])
    return graph, best[0]
