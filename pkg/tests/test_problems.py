from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, strategies as st

from plslab import problems as P
from plslab.core import Assignment, Bipartition, Clustering, PointMatrix, SqrtCoord, WeightedGraph
from plslab.errors import DimensionError, InfeasibleMoveError, UndefinedObjectiveError
from plslab.problems import Clause, EuclideanInstance, NaeFormula, ProblemKind
from plslab.verify import points_instance, random_instance

K3 = WeightedGraph(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1)])


def bp(n, xs):
    return Bipartition.from_sets(n, xs)


def test_feasibility_examples():
    g = WeightedGraph(5)
    assert P.is_feasible(P.ODD_MAX_BISECTION, g, bp(5, [0, 1, 2]))
    assert not P.is_feasible(P.ODD_MAX_BISECTION, g, bp(5, [0, 1, 2, 3]))
    assert P.is_feasible(P.MAX_CUT, g, bp(5, []))
    with pytest.raises(DimensionError):
        P.is_feasible(P.MAX_CUT, g, bp(4, []))


def test_cost_examples():
    assert P.cost(P.DENSEST_CUT, K3, bp(3, [0])) == 1
    g = WeightedGraph(2, [(0, 1, 4)])
    k2 = ProblemKind.kmeans(2)
    assert P.cost(k2, g, Clustering((0, 0), 2)) == 2
    pts = PointMatrix.from_rationals([(0,), (2,)])
    assert P.kmeans_cost_points(pts, Clustering((0, 0), 2)) == 2
    f = NaeFormula(2, (Clause((0, 1), 5),))
    assert P.cost(P.POS_NAE3, f, Assignment((True, False))) == 5
    assert P.cost(P.POS_NAE3, f, Assignment((True, True))) == 0


def test_ratio_empty_side_undefined():
    with pytest.raises(UndefinedObjectiveError):
        P.cost(P.DENSEST_CUT, K3, bp(3, []))
    assert not P.is_feasible(P.SPARSEST_CUT, K3, bp(3, [0, 1, 2]))


def test_flip_delta_examples():
    assert P.flip_delta(P.MAX_CUT, K3, bp(3, [0]), 1) == 0
    g = WeightedGraph(3, [(0, 1, 1)])
    assert P.flip_delta(P.MAX_CUT, g, bp(3, []), 2) == 0
    star = WeightedGraph(4, [(0, 1, 1), (0, 2, 8), (0, 3, 3)])
    assert P.flip_delta(P.MAX_CUT, star, bp(4, []), 0) == 12


def test_flip_delta_errors():
    s = bp(3, [0, 1])
    with pytest.raises(InfeasibleMoveError):
        P.flip_delta(P.ODD_MAX_BISECTION, K3, s, 2)  # would give 3/0
    with pytest.raises(InfeasibleMoveError):
        P.flip_delta(P.MAX_CUT, K3, s, 0, target=1)


def test_neighbor_counts():
    assert len(P.neighbors(P.ODD_MAX_BISECTION, K3, bp(3, [0, 1]))) == 2
    assert len(P.neighbors(P.MAX_CUT, K3, bp(3, [1]))) == 3
    g = WeightedGraph(4)
    assert len(P.neighbors(ProblemKind.kmeans(3), g, Clustering((0, 1, 2, 0), 3))) == 8


def test_validate_examples():
    k6 = WeightedGraph(6, [(u, v, 1) for u, v in combinations(range(6), 2)])
    k7 = WeightedGraph(7, [(u, v, 1) for u, v in combinations(range(7), 2)])
    assert P.validate_instance(P.MAX_CUT_DEG5, k6) == []
    assert any("degree 6" in m for m in P.validate_instance(P.MAX_CUT_DEG5, k7))
    assert "vertex count must be odd" in P.validate_instance(P.ODD_MAX_BISECTION, WeightedGraph(4))
    inst = points_instance([(0,), (1,), (3,)])
    assert P.validate_instance(P.SQ_EUCLIDEAN_MAX_CUT, inst) == []
    bad = EuclideanInstance(WeightedGraph(3, [(0, 1, 2), (0, 2, 9), (1, 2, 4)]), inst.witness)
    assert P.validate_instance(P.SQ_EUCLIDEAN_MAX_CUT, bad)


def test_validate_counts_explicit_zero_edges():
    g = WeightedGraph(7, [(0, v, 1) for v in range(1, 6)] + [(0, 6, 0)])
    assert P.validate_instance(P.MAX_CUT_DEG5, g)


def test_euclidean_requires_certified_distances():
    w = PointMatrix.from_rationals([(0, 0), (1, 1)])  # distance sqrt 2
    g = WeightedGraph(2, [(0, 1, 1)])
    assert any("irrational" in m for m in P.validate_instance(P.EUCLIDEAN_MAX_CUT, EuclideanInstance(g, w)))
    assert P.validate_instance(P.EUCLIDEAN_MAX_CUT, EuclideanInstance(g)) == ["missing witness point matrix"]


def test_merged_formula():
    f = NaeFormula(3, (Clause((0, 1), 2), Clause((1, 0), 3), Clause((0, 1, 2), -1)))
    m = f.merged()
    assert {c.lits: c.weight for c in m.clauses} == {(0, 1): 5, (0, 1, 2): -1}


# -- properties ----------------------------------------------------------------

KINDS = [
    (P.MAX_CUT, 6), (P.MAX_CUT_DEG5, 7), (P.ODD_MAX_BISECTION, 5), (P.ODD_MIN_BISECTION, 7),
    (P.DENSEST_CUT, 6), (P.SPARSEST_CUT, 5), (ProblemKind.kmeans(2), 5), (ProblemKind.kmeans(3), 5),
    (P.POS_NAE3, 6), (P.ODD_HALF_NAE3, 7), (P.ODD_HALF_NAE2, 5),
    (P.SQ_EUCLIDEAN_MAX_CUT, 5), (P.EUCLIDEAN_MAX_CUT, 5),
]


@st.composite
def kind_instance_solution(draw):
    kind, n = draw(st.sampled_from(KINDS))
    inst = random_instance(kind, n, (1, 9), draw(st.integers(0, 10_000)))
    while True:
        lab = [draw(st.integers(0, kind.arity - 1)) for _ in range(n)]
        sol = P.from_labels(kind, lab)
        if P.is_feasible(kind, inst, sol):
            return kind, inst, sol


@given(kind_instance_solution())
def test_flip_delta_equals_recomputation(data):
    kind, inst, sol = data
    base = P.cost(kind, inst, sol)
    for e, t in P.moves(kind, inst, sol):
        nb = P.apply_move(sol, e, t)
        assert P.is_feasible(kind, inst, nb)
        assert P.flip_delta(kind, inst, sol, e, t) == P.cost(kind, inst, nb) - base


@given(kind_instance_solution())
def test_two_sided_costs_symmetric(data):
    kind, inst, sol = data
    if kind.is_kmeans:
        return
    other = P.from_labels(kind, [1 - x for x in P.labels(sol)])
    assert P.cost(kind, inst, sol) == P.cost(kind, inst, other)


@given(kind_instance_solution())
def test_odd_kinds_stay_balanced(data):
    kind, inst, sol = data
    if not kind.is_odd:
        return
    for nb in [sol] + P.neighbors(kind, inst, sol):
        ones = sum(P.labels(nb))
        assert abs(ones - (len(nb) - ones)) == 1


@given(st.integers(0, 5000), st.integers(2, 3))
def test_kmeans_graph_cost_equals_point_cost(seed, k):
    kind = ProblemKind.kmeans(k)
    inst = random_instance(kind, 5, (1, 6), seed)
    pts = [[sympy.Integer(int(e.sign) * sympy.sqrt(e.radicand.numerator)) if e.sign else 0 for e in row]
           for row in inst.witness.rows]
    for code in range(0, k ** 5, 7):
        lab = [(code // k ** i) % k for i in range(5)]
        c = Clustering(tuple(lab), k)
        oracle = 0
        for members in c.clusters():
            if not members:
                continue
            cm = [sympy.Rational(sum(pts[i][d] for i in members), len(members)) for d in range(2)]
            oracle += sum((pts[i][d] - cm[d]) ** 2 for i in members for d in range(2))
        got = P.cost(kind, inst, c)
        assert sympy.Rational(got.numerator, got.denominator) == sympy.nsimplify(oracle)
        assert got == P.kmeans_cost_points(inst.witness, c)
