import math

import numpy as np
import pytest

from orispan import (
    GeometryError,
    GraphError,
    GuardError,
    OneppbGraph,
    PointSet,
    TooFewPointsError,
    build_1spanner_1d,
    build_2page_2spanner,
    build_graph,
    dilation_1d_candidates,
    dilation_1ppb,
    enumerate_maximal_1ppb,
    greedy_1ppb,
    min_dilation_over_orientations,
    optimal_1ppb,
    orient_one_page,
    oriented_dilation,
)
from orispan.one_dim import baseline_edges

from conftest import sorted_points, worstcase_points

UNIT5 = PointSet([0.0, 1.0, 2.0, 3.0, 4.0])

# All maximal one-page graphs on five points, written as back-edge sets.
FIVE_POINT_MAXIMAL = [
    {(2, 0), (4, 2), (4, 0)},
    {(2, 0), (3, 0), (4, 0)},
    {(3, 1), (3, 0), (4, 0)},
    {(3, 1), (4, 1), (4, 0)},
    {(4, 2), (4, 1), (4, 0)},
]


# --- closed-form constructions ---------------------------------------------


def test_1spanner_smallest_case():
    g = build_1spanner_1d(PointSet([0.0, 1.0, 2.0]))
    assert g.edges() == [(0, 1), (1, 2), (2, 0)]


def test_1spanner_edge_count_eight_points():
    g = build_1spanner_1d(PointSet(np.arange(8.0)))
    assert g.m == 3 * 8 - 6
    assert g.has_edge(2, 0) and g.has_edge(3, 0) and g.has_edge(7, 4)
    assert not g.has_edge(4, 0)


def test_1spanner_dilation_is_one(rng):
    rep = oriented_dilation(build_1spanner_1d(sorted_points(rng, 20)))
    assert rep.dilation == pytest.approx(1.0, abs=1e-9)


def test_2page_counts_and_bounds(rng):
    g3 = build_2page_2spanner(PointSet([0.0, 0.5, 2.0]))
    assert oriented_dilation(g3).dilation == pytest.approx(1.0, abs=1e-12)
    g = build_2page_2spanner(sorted_points(rng, 30))
    assert g.m == 2 * 30 - 3
    assert oriented_dilation(g).dilation <= 2 + 1e-9


def test_2page_unit_spacing_value():
    # Witness cycle detours over one interior gap: 1 + 1/3.
    rep = oriented_dilation(build_2page_2spanner(UNIT5))
    assert rep.dilation == pytest.approx(4.0 / 3.0, rel=1e-12)


def test_constructions_reject_unsorted_and_small():
    with pytest.raises(GeometryError, match="unsorted"):
        build_1spanner_1d(PointSet([1.0, 0.0, 2.0]))
    with pytest.raises(TooFewPointsError):
        build_2page_2spanner(PointSet([0.0, 1.0]))
    with pytest.raises(GeometryError):
        build_1spanner_1d(PointSet([(0.0, 0.0), (1.0, 0.5), (2.0, 0.1)]))


# --- candidate-pair evaluator ----------------------------------------------


def test_candidates_match_oracle_on_2page(rng):
    for n in (3, 4, 6, 17, 30):
        g = build_2page_2spanner(sorted_points(rng, n))
        assert dilation_1d_candidates(g).dilation == oriented_dilation(g).dilation


def test_candidates_match_oracle_on_1spanner_subgraphs(rng):
    # Random oriented subgraphs, including disconnected ones.
    for _ in range(20):
        pts = sorted_points(rng, 12)
        full = build_1spanner_1d(pts).edges()
        keep = [e for e in full if e[1] == e[0] + 1 or rng.random() < 0.5]
        g = build_graph(pts, keep)
        a = dilation_1d_candidates(g).dilation
        b = oriented_dilation(g).dilation
        assert a == b or (math.isinf(a) and math.isinf(b))


def test_candidates_match_oracle_on_maximal_one_page(rng):
    pts = sorted_points(rng, 8)
    for g in enumerate_maximal_1ppb(pts):
        got = dilation_1d_candidates(g.graph).dilation
        want = oriented_dilation(g.graph).dilation
        assert got == pytest.approx(want, rel=1e-12)


def test_candidates_rejects_2d():
    pts = PointSet([(0.0, 0.0), (1.0, 0.3), (2.0, 0.0)])
    g = build_graph(pts, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(GeometryError):
        dilation_1d_candidates(g)


# --- orienting an undirected one-page set -----------------------------------


def test_orient_one_page_triangle():
    g = orient_one_page(PointSet([0.0, 1.0, 2.0]), [(0, 1), (1, 2), (0, 2)])
    assert g.back_edges == ((2, 0),)


def test_orient_one_page_five_points():
    und = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (2, 4), (0, 4)]
    g = orient_one_page(UNIT5, und)
    assert set(g.back_edges) == {(2, 0), (4, 2), (4, 0)}


def test_orient_one_page_errors():
    with pytest.raises(GraphError, match="cross"):
        orient_one_page(UNIT5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (1, 3)])
    with pytest.raises(GraphError, match="consecutive"):
        orient_one_page(UNIT5, [(0, 1), (2, 3), (3, 4), (0, 2)])


def test_one_page_orientation_is_optimal(rng):
    # Among all orientations of the same undirected edges, directing the
    # baseline rightward and everything else leftward is never beaten.
    for n in (5, 6, 7):
        pts = sorted_points(rng, n, span=10)
        graphs = list(enumerate_maximal_1ppb(pts))
        pick = graphs[int(rng.integers(len(graphs)))]
        und = [(i, i + 1) for i in range(n - 1)] + [(l, r) for r, l in pick.back_edges]
        _, best = min_dilation_over_orientations(pts, und)
        ours = oriented_dilation(pick.graph).dilation
        assert ours == pytest.approx(best, rel=1e-12)


# --- greedy construction -----------------------------------------------------


def test_greedy_three_points():
    assert greedy_1ppb(PointSet([0.0, 4.0, 5.0])).back_edges == ((2, 0),)


def test_greedy_unit5_ties_and_value():
    g = greedy_1ppb(UNIT5)
    assert set(g.back_edges) == {(2, 0), (4, 2), (4, 0)}
    rep = dilation_1ppb(g)
    assert rep.dilation == pytest.approx(2.0, abs=1e-12)
    assert rep.witness == (1, 3)


def test_greedy_worstcase_instance():
    eps = 0.01
    g = greedy_1ppb(worstcase_points(eps))
    assert set(g.back_edges) == {(2, 0), (4, 2), (5, 2), (6, 2), (6, 0)}
    rep = dilation_1ppb(g)
    assert rep.dilation == pytest.approx((5 - 7 * eps) / (1 + eps), rel=1e-12)
    assert rep.witness == (1, 3)
    full = oriented_dilation(g.graph)
    assert full.dilation == pytest.approx(rep.dilation, rel=1e-12)


def test_greedy_is_maximal_and_bounded(rng):
    for _ in range(50):
        n = int(rng.integers(3, 60))
        g = greedy_1ppb(sorted_points(rng, n))
        assert g.maximal
        assert dilation_1ppb(g).dilation <= 5 + 1e-9


# --- linear dilation scan ----------------------------------------------------


def test_scan_requires_maximal():
    g = OneppbGraph(UNIT5, [(2, 0)])
    with pytest.raises(GraphError, match="maximal"):
        dilation_1ppb(g)


def test_scan_on_all_five_point_graphs():
    # Also pins the values: the fans score 2, every graph scores >= 2 here.
    for back in FIVE_POINT_MAXIMAL:
        g = OneppbGraph(UNIT5, back)
        got = dilation_1ppb(g).dilation
        want = oriented_dilation(g.graph).dilation
        assert got == pytest.approx(want, rel=1e-12)
        assert got >= 2.0 - 1e-12


def test_scan_near_one_spanner_instance():
    eps = 1e-3
    pts = PointSet([0.0, eps, 1 + eps, 2 + eps, 2 + 2 * eps])
    # Two short skips alone already realise dilation 1 + eps; the closing
    # edge required for maximality does not change the witness cycle.
    sparse = build_graph(pts, baseline_edges(5) + [(2, 0), (4, 2)])
    assert oriented_dilation(sparse).dilation == pytest.approx(1 + eps, rel=1e-12)
    g = OneppbGraph(pts, [(2, 0), (4, 2), (4, 0)])
    rep = dilation_1ppb(g)
    assert rep.dilation == pytest.approx(1 + eps, rel=1e-12)
    assert rep.witness == (1, 3)


def test_scan_matches_oracle_on_enumeration(rng):
    pts = sorted_points(rng, 10)
    count = 0
    for g in enumerate_maximal_1ppb(pts):
        count += 1
        assert dilation_1ppb(g).dilation == pytest.approx(
            oriented_dilation(g.graph).dilation, rel=1e-12
        )
    assert count == 1430


# --- enumeration -------------------------------------------------------------


@pytest.mark.parametrize("n,count", [(3, 1), (4, 2), (5, 5), (6, 14), (10, 1430)])
def test_enumeration_counts(n, count):
    pts = PointSet(np.arange(float(n)))
    graphs = list(enumerate_maximal_1ppb(pts))
    assert len(graphs) == count
    seen = {g.back_edges for g in graphs}
    assert len(seen) == count  # no duplicates
    for g in graphs:
        assert g.maximal


def test_enumeration_five_points_explicit():
    got = [set(g.back_edges) for g in enumerate_maximal_1ppb(UNIT5)]
    assert len(got) == 5
    for want in FIVE_POINT_MAXIMAL:
        assert want in got


def test_enumeration_guard():
    with pytest.raises(GuardError):
        list(enumerate_maximal_1ppb(PointSet(np.arange(15.0))))


# --- optimal construction ----------------------------------------------------


def test_optimal_unit5_is_two():
    g, val = optimal_1ppb(UNIT5)
    assert val == 2.0
    assert g.maximal
    assert dilation_1ppb(g).dilation == 2.0


def test_optimal_beats_greedy_on_worstcase():
    eps = 0.01
    pts = worstcase_points(eps)
    g, val = optimal_1ppb(pts)
    assert val <= (2 - 2 * eps) / (1 + eps) + 1e-12
    assert val < dilation_1ppb(greedy_1ppb(pts)).dilation
    assert oriented_dilation(g.graph).dilation == pytest.approx(val, rel=1e-12)


def test_optimal_above_one_for_more_than_three_points(rng):
    for n in (4, 5, 7):
        _, val = optimal_1ppb(sorted_points(rng, n))
        assert val > 1.0 + 1e-12


def test_optimal_matches_enumeration_minimum(rng):
    for n in (4, 5, 6, 7, 8):
        pts = sorted_points(rng, n)
        _, val = optimal_1ppb(pts)
        want = min(dilation_1ppb(g).dilation for g in enumerate_maximal_1ppb(pts))
        assert val == pytest.approx(want, rel=1e-12)


def test_optimal_is_deterministic(rng):
    pts = PointSet(np.arange(7.0))
    a = optimal_1ppb(pts)
    b = optimal_1ppb(pts)
    assert a[0].back_edges == b[0].back_edges
    assert a[1] == b[1]


def test_optimal_guards():
    with pytest.raises(GuardError):
        optimal_1ppb(PointSet(np.arange(13.0)))
    optimal_1ppb(PointSet(np.arange(13.0)), max_points=13)
    with pytest.raises(TooFewPointsError):
        optimal_1ppb(PointSet([0.0, 1.0]))


# --- invariants over random corpora ------------------------------------------


def test_greedy_never_below_optimal(rng):
    for _ in range(10):
        n = int(rng.integers(4, 9))
        pts = sorted_points(rng, n)
        _, best = optimal_1ppb(pts)
        assert dilation_1ppb(greedy_1ppb(pts)).dilation >= best - 1e-12


def test_one_page_crossing_validation():
    with pytest.raises(GraphError, match="cross"):
        OneppbGraph(UNIT5, [(3, 1), (4, 2)])
    # Nesting and shared endpoints are allowed.
    OneppbGraph(UNIT5, [(4, 0), (3, 1)])
    OneppbGraph(UNIT5, [(2, 0), (4, 2)])
