from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from plslab import problems as P
from plslab.core import Bipartition, WeightedGraph
from plslab.engine import (PivotRule, build_transition_graph, check_cap, compute_heights,
                           feasible_count, initial_solution, is_local_optimum, run_local_search,
                           standard_solution)
from plslab.errors import CapExceededError, ValidationError
from plslab.problems import ProblemKind
from plslab.verify import random_instance

K2 = WeightedGraph(2, [(0, 1, 5)])


def test_k2_transition_graph():
    tg = build_transition_graph(P.MAX_CUT, K2)
    assert len(tg.nodes) == 4
    assert len(tg.arcs) == 4
    assert sorted(P.labels(tg.nodes[i]) for i in tg.sinks()) == [(0, 1), (1, 0)]
    assert max(tg.heights) == 1


def test_k2_search_from_uncut():
    trace = run_local_search(P.MAX_CUT, K2, Bipartition((True, True)))
    assert trace.iterations == 1
    assert P.cost(P.MAX_CUT, K2, trace.final) == 5


def test_initial_solution_shapes():
    assert P.labels(initial_solution(P.MAX_CUT, WeightedGraph(5))) == (1, 1, 1, 0, 0)
    assert P.labels(initial_solution(ProblemKind.kmeans(3), P.EuclideanInstance(WeightedGraph(4)))) == (0, 1, 2, 0)
    with pytest.raises(ValidationError):
        initial_solution(P.ODD_MAX_BISECTION, WeightedGraph(4))


def test_cap():
    assert feasible_count(P.ODD_MAX_BISECTION, 5) == 20
    assert feasible_count(P.DENSEST_CUT, 4) == 14
    with pytest.raises(CapExceededError):
        check_cap(P.MAX_CUT, 21, None)
    with pytest.raises(CapExceededError):
        build_transition_graph(P.MAX_CUT, WeightedGraph(5), limit=16)


def test_heights_bfs():
    assert compute_heights(4, [(0, 1), (1, 2), (0, 3), (3, 2)]) == [2, 1, 0, 1]


def test_max_iters_truncates():
    g = WeightedGraph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)])
    trace = run_local_search(P.MAX_CUT, g, Bipartition((True,) * 4), max_iters=0)
    assert trace.truncated and trace.iterations == 0


KINDS = [P.MAX_CUT, P.ODD_MAX_BISECTION, P.ODD_MIN_BISECTION, P.DENSEST_CUT,
         P.SPARSEST_CUT, ProblemKind.kmeans(3), P.POS_NAE3, P.ODD_HALF_NAE2]


@given(st.sampled_from(KINDS), st.integers(0, 10**6), st.sampled_from(list(PivotRule)))
def test_search_terminates_at_local_optimum(kind, seed, rule):
    n = 11 if kind.is_odd else 12
    if kind.is_kmeans:
        n = 7
    inst = random_instance(kind, n, (-5, 20) if kind.is_nae else (1, 20), seed)
    trace = run_local_search(kind, inst, initial_solution(kind, inst), rule)
    assert not trace.truncated
    assert is_local_optimum(kind, inst, trace.final)
    assert trace.replay() == trace.final
    costs = [P.cost(kind, inst, trace.start)]
    for _, _, d in trace.moves:
        assert kind.improves(d)
        costs.append(costs[-1] + d)
    assert costs[-1] == P.cost(kind, inst, trace.final)


@settings(max_examples=30)
@given(st.sampled_from(KINDS), st.integers(0, 10**6))
def test_transition_graph_acyclic_and_sinks_sound(kind, seed):
    n = 7 if kind.is_odd else 8
    if kind.is_kmeans:
        n = 5
    inst = random_instance(kind, n, (1, 9), seed)
    tg = build_transition_graph(kind, inst)
    assert tg.is_acyclic()
    assert len(tg.nodes) == feasible_count(kind, n)
    sinks = set(tg.sinks())
    for i, s in enumerate(tg.nodes):
        assert (i in sinks) == is_local_optimum(kind, inst, s)
        assert (tg.heights[i] == 0) == (i in sinks)
    for i, j, d in tg.arcs:
        assert tg.heights[i] <= tg.heights[j] + 1
        assert d == tg.costs[j] - tg.costs[i]


@given(st.integers(0, 10**6))
def test_standard_solution_deterministic(seed):
    g = random_instance(P.MAX_CUT, 10, (1, 50), seed)
    a = standard_solution(P.MAX_CUT, g)
    assert a == standard_solution(P.MAX_CUT, g)
    assert is_local_optimum(P.MAX_CUT, g, a)


def test_dot_and_json_render():
    tg = build_transition_graph(P.MAX_CUT, K2)
    assert tg.to_dot().startswith("digraph")
    doc = tg.to_json()
    assert doc["nodes"][0]["cost"] == "0/1"
    assert {a["delta"] for a in doc["arcs"]} == {"5/1"}
