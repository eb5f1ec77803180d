from fractions import Fraction
from itertools import combinations, product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from plslab import problems as P
from plslab.core import Assignment, Bipartition, Clustering, PointMatrix, SqrtCoord, WeightedGraph
from plslab.engine import initial_solution, is_local_optimum
from plslab.errors import ValidationError
from plslab.problems import Clause, NaeFormula, ProblemKind
from plslab.reductions import (apply_reduction, chain_reduce, compute_delta_min_max, map_solution,
                               r1_distinct, r2_nae3, r3_nae3_to_nae2, r4_nonneg, r5_bisection,
                               r6_densest, r7_two_means, r8_lift_kmeans, r9_sq_euclid, r10_euclid,
                               r11_sparsest)
from plslab.verify import points_instance, random_instance

STAR = WeightedGraph(4, [(0, 1, 1), (0, 2, 8), (0, 3, 3)])
K3 = WeightedGraph(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1)])
PATH = WeightedGraph(3, [(0, 1, 2), (1, 2, 2)])  # u-v-x


def all_labels(n, arity=2):
    return product(range(arity), repeat=n)


# -- delta bounds ---------------------------------------------------------------

def test_delta_bounds():
    assert compute_delta_min_max(STAR, vertex=0) == (4, 12)
    assert compute_delta_min_max(STAR) == (1, 12)
    assert compute_delta_min_max(WeightedGraph(2, [(0, 1, 7)])) == (7, 7)
    assert compute_delta_min_max(WeightedGraph(2, [(0, 1, 0)])) == (1, 0)
    with pytest.raises(ValidationError):
        compute_delta_min_max(WeightedGraph(7, [(0, v, 1) for v in range(1, 7)]))


# -- r1 --------------------------------------------------------------------------

def test_r1_triangle():
    h, cert = r1_distinct(K3)
    assert h.n == 6
    assert [h.weight(u, v) for u, v in combinations(range(3), 2)] == [11, 11, 11]
    dummies = [(u, v, w) for u, v, w in h.edges() if v >= 3]
    assert len(dummies) == 3 and all(w == 1 for *_, w in dummies)
    assert all(h.degree(v) % 2 == 1 for v in range(h.n))
    assert map_solution(cert, Bipartition.from_sets(6, [0, 3])) == Bipartition.from_sets(3, [0])


def test_r1_all_odd_degrees():
    g = WeightedGraph(4, [(0, 1, 2), (2, 3, 5)])
    h, _ = r1_distinct(g)
    assert h.n == 4 and sorted(w for *_, w in h.edges()) == [21, 51]


@given(st.integers(0, 10**6))
def test_r1_output_odd_degree_and_distinct(seed):
    g = random_instance(P.MAX_CUT_DEG5, 6, (0, 6), seed)
    h, _ = r1_distinct(g)
    assert all(h.degree(v) % 2 == 1 for v in range(h.n))
    assert P.has_distinct_neighbor_costs(h)


# -- r2 --------------------------------------------------------------------------

def test_r2_star_gadget():
    f, cert = r2_nae3(STAR)
    p = cert.params
    assert (p["N"], p["L"], p["M"]) == (9, 576, 34849)
    L, M = p["L"], p["M"]
    lv = p["clause_levels"]
    lvl1 = [c for c, l in zip(f.clauses, lv) if l == 1]
    lvl2 = [c for c, l in zip(f.clauses, lv) if l == 2 and c.lits[0] == 4]
    assert [c.weight for c in lvl1] == [M, 8 * M, 3 * M]
    assert [(c.lits[1], c.weight) for c in lvl2] == [(1, -L), (2, -8 * L), (3, -3 * L)]
    expected = {(1, 2, 3): -1, (1, 2): -1, (1, 3): 0, (2, 3): -1, (1,): 0, (2,): -1, (3,): 0, (): 0}
    lvl3 = [c for c, l in zip(f.clauses, lv) if l == 3]
    for (v, Q, i), c in zip(p["level3"], lvl3):
        if v == 0:
            assert c.weight == expected[Q]
            assert c.lits == (0, 4, 8 + i)
    per = [sum(1 for (v, _, i) in p["level3"] if v == 0 and i == j) for j in range(9)]
    assert per == [8] * 9


def test_r2_sizes_and_map():
    h, _ = r1_distinct(STAR)
    f, cert = r2_nae3(h)
    assert f.num_vars == 4 * h.n + 1
    f4, c4 = r2_nae3(STAR)
    assert f4.num_vars == 17
    bits = [True, False, True, False] + [True] * 6 + [False] * 7
    assert map_solution(c4, Assignment(tuple(bits))) == Bipartition.from_sets(4, [0, 2])


def test_r2_rejects_non_distinct_without_force():
    with pytest.raises(ValidationError):
        r2_nae3(K3)
    f, _ = r2_nae3(K3, force=True)
    assert f.num_vars == 13


# -- r3 / r4 / r5 ----------------------------------------------------------------

def test_r3_single_clause():
    f = NaeFormula(3, (Clause((0, 1, 2), 4),))
    t, cert = r3_nae3_to_nae2(f)
    assert [c.weight for c in t.clauses] == [2, 2, 2] and cert.params["scale"] == 1
    tt_f = Assignment((True, True, False))
    assert P.cost(P.POS_NAE3, f, tt_f) == 4 == P.cost(P.POS_NAE3, t, tt_f)
    ttt = Assignment((True,) * 3)
    assert P.cost(P.POS_NAE3, t, ttt) == 0
    for lab in all_labels(3):
        a = Assignment(tuple(map(bool, lab)))
        assert P.cost(P.POS_NAE3, f, a) == P.cost(P.POS_NAE3, t, a)


def test_r3_odd_weight_doubles():
    f = NaeFormula(3, (Clause((0, 1, 2), 3), Clause((0, 1), -1)))
    t, cert = r3_nae3_to_nae2(f)
    assert cert.params["scale"] == 2
    for lab in all_labels(3):
        a = Assignment(tuple(map(bool, lab)))
        assert P.cost(P.POS_NAE3, t, a) == 2 * P.cost(P.POS_NAE3, f, a)


def test_r4_shift_example():
    f = NaeFormula(3, (Clause((0, 1), -2), Clause((1, 2), 5)))
    t, cert = r4_nonneg(f)
    assert cert.params["shift"] == 3
    assert {c.lits: c.weight for c in t.clauses} == {(0, 1): 1, (0, 2): 3, (1, 2): 8}
    g = NaeFormula(3, (Clause((0, 1), 2),))
    assert r4_nonneg(g)[1].params["shift"] == 1


@pytest.mark.parametrize("half", [1, 2, 3])
def test_r4_exactly_n_n_plus_1_pairs_satisfied(half):
    n = 2 * half + 1
    ones = NaeFormula(n, tuple(Clause(p, 1) for p in combinations(range(n), 2)))
    for lab in all_labels(n):
        a = Assignment(tuple(map(bool, lab)))
        if P.is_feasible(P.ODD_HALF_NAE2, ones, a):
            assert P.cost(P.ODD_HALF_NAE2, ones, a) == half * (half + 1)


def test_r5_example():
    f = NaeFormula(3, (Clause((0, 1), 3),))
    gmax, _ = r5_bisection(f, "max")
    gmin, cmin = r5_bisection(f, "min")
    assert gmax.edges() == [(0, 1, 3)]
    assert cmin.params["K"] == 3
    assert {(u, v): gmin.weight(u, v) for u, v in combinations(range(3), 2)} == {(0, 1): 0, (0, 2): 3, (1, 2): 3}
    p = Bipartition.from_sets(3, [0])
    assert P.cost(P.ODD_MAX_BISECTION, gmax, p) == 3 == P.cost(P.ODD_HALF_NAE2, f, map_solution(cmin, p))
    assert map_solution(cmin, p) == Assignment((True, False, False))


@given(st.integers(0, 10**6), st.sampled_from([3, 5, 7]))
def test_r5_min_is_constant_minus_max(seed, n):
    f, _ = r4_nonneg(random_instance(P.ODD_HALF_NAE2, n, (0, 9), seed))
    gmax, _ = r5_bisection(f, "max")
    gmin, cert = r5_bisection(f, "min")
    half = n // 2
    for lab in all_labels(n):
        p = Bipartition(tuple(map(bool, lab)))
        if P.is_feasible(P.ODD_MIN_BISECTION, gmin, p):
            assert P.cost(P.ODD_MIN_BISECTION, gmin, p) == \
                half * (half + 1) * cert.params["K"] - P.cost(P.ODD_MAX_BISECTION, gmax, p)


# -- r6 --------------------------------------------------------------------------

def test_r6_triangle_constants():
    g = WeightedGraph(3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])
    t, cert = r6_densest(g)
    assert t.n == 3 + 2 * 81
    assert sorted(t.weight(u, v) for u, v in combinations(range(3), 2)) == [59050, 59051, 59052]
    matching = [(u, v, w) for u, v, w in t.edges() if u >= 3]
    assert len(matching) == 81 and {w for *_, w in matching} == {177156}
    p = cert.params
    assert Fraction(p["aux_w_min"], p["aux_w_max"]) >= 1 - Fraction(1, 3 ** 9)
    assert all(t.degree(v) > 0 for v in range(t.n))


def test_r6_map_restricts_and_falls_back():
    g = WeightedGraph(3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])
    t, cert = r6_densest(g, matching_size=2)
    good = Bipartition.from_sets(7, [0, 3, 5])
    assert map_solution(cert, good) == Bipartition.from_sets(3, [0])
    bad = Bipartition.from_sets(7, [0, 1, 3, 5])
    assert map_solution(cert, bad) == initial_solution(P.ODD_MAX_BISECTION, g)
    with pytest.raises(ValidationError):
        r6_densest(WeightedGraph(4))


# -- r7 --------------------------------------------------------------------------

def test_r7_matrix_rows():
    g = WeightedGraph(4, [(0, 1, 2), (1, 2, 3), (0, 3, 5)])
    x, cert = r7_two_means(g)
    r = lambda w, s=1: SqrtCoord.root(w, s)
    z = SqrtCoord.zero()
    assert x.witness.rows == (
        (r(2), z, r(5)), (r(2, -1), r(3), z), (z, r(3, -1), z), (z, z, r(5, -1)))
    assert map_solution(cert, Clustering((0, 1, 1, 0), 2)) == Bipartition.from_sets(4, [1, 2])


def test_r7_triangle_cost_identity():
    x, cert = r7_two_means(K3)
    c = Clustering((0, 1, 1), 2)
    assert P.cost(ProblemKind.kmeans(2), x, c) == 3
    assert cert.params["cost_constant"] - Fraction(3 * 2, 1 * 2) == 3


def test_r7_rejects_isolated():
    with pytest.raises(ValidationError):
        r7_two_means(WeightedGraph(3, [(0, 1, 1)]))


@settings(max_examples=20)
@given(st.integers(0, 10**6))
def test_r7_cost_order_reverses_density(seed):
    g = random_instance(P.DENSEST_CUT, 6, (1, 9), seed)
    x, _ = r7_two_means(g)
    vals = []
    for lab in all_labels(6):
        if 0 < sum(lab) < 6:
            vals.append((P.cost(P.DENSEST_CUT, g, Bipartition(tuple(map(bool, lab)))),
                         P.cost(ProblemKind.kmeans(2), x, Clustering(lab, 2))))
    for (d1, c1), (d2, c2) in combinations(vals, 2):
        assert (c1 < c2) == (d1 > d2)


# -- r8 --------------------------------------------------------------------------

def test_r8_lift_weights():
    x = points_instance([(0, 0), (1, 0), (0, 3), (2, 2)])
    y, cert = r8_lift_kmeans(x, 2)
    T = cert.params["offset"]
    assert T * T >= (3 * 4 * cert.params["D"]) ** 2 * 2
    z = cert.params["lifted_point"]
    gx, gy = x.graph, y.graph
    assert gy.weight(0, z) == T * T
    for v in range(1, 4):
        assert gy.weight(v, z) == gx.weight(0, v) + T * T
    assert y.witness.validate() is None
    newcol = [row[-1] for row in y.witness.rows]
    assert sum(1 for e in newcol if e.sign) == 1
    with pytest.raises(ValidationError):
        r8_lift_kmeans(points_instance([(0,)]), 2)


def test_r8_local_optima_isolate_lifted_point():
    from plslab.tables import SolutionTable
    x = points_instance([(0, 0), (1, 0), (0, 3), (2, 2)])
    y, cert = r8_lift_kmeans(x, 2)
    table = SolutionTable(ProblemKind.kmeans(3), y)
    for code in table.sink_codes():
        assert cert.reasonable(table.decode(int(code)))


# -- r9 / r10 --------------------------------------------------------------------

def _sympy_point(row):
    return [e.sign * sympy.sqrt(sympy.Rational(e.radicand.numerator, e.radicand.denominator)) for e in row]


def test_r9_path():
    x, cert = r9_sq_euclid(PATH)
    assert cert.params["alpha_radicands"] == [1, 0, 1]
    w = x.witness
    assert (w.squared_distance(0, 1), w.squared_distance(1, 2), w.squared_distance(0, 2)) == (2, 2, 4)
    assert all(w.squared_norm(i) == 2 for i in range(3))
    p = Bipartition.from_sets(3, [1])
    assert P.cost(P.SQ_EUCLIDEAN_MAX_CUT, x, p) == 4 == 1 * 2 * 4 - P.cost(P.ODD_MIN_BISECTION, PATH, p)


def test_r10_path():
    x, cert = r10_euclid(PATH)
    w = x.witness
    assert w.squared_norm(0) == 32 and w.inner(0, 1) == 14
    assert w.squared_distance(0, 1) == 36 and x.graph.weight(0, 1) == 6
    pts = [_sympy_point(r) for r in w.rows]
    assert sympy.sqrt(sum((a - b) ** 2 for a, b in zip(pts[0], pts[1]))) == 6


def test_r9_trivial_and_fallback():
    x, cert = r9_sq_euclid(WeightedGraph(3))
    assert cert.params["trivial"]
    _, c = r9_sq_euclid(PATH)
    unbalanced = Bipartition.from_sets(3, [])
    assert map_solution(c, unbalanced) == initial_solution(P.ODD_MIN_BISECTION, PATH)


@settings(max_examples=30)
@given(st.integers(0, 10**6), st.sampled_from([3, 5, 7]))
def test_r9_r10_distances_against_sympy(seed, n):
    g = random_instance(P.ODD_MIN_BISECTION, n, (0, 7), seed)
    if g.total_weight() == 0:
        return
    wE = g.total_weight()
    x9, _ = r9_sq_euclid(g)
    x10, _ = r10_euclid(g)
    p9 = [_sympy_point(r) for r in x9.witness.rows]
    for u in range(n):
        assert sum(a * a for a in p9[u]) == sympy.Rational(wE, 2)
    for u, v in combinations(range(n), 2):
        d9 = sympy.expand(sum((a - b) ** 2 for a, b in zip(p9[u], p9[v])))
        assert d9 == wE - g.weight(u, v) == x9.graph.weight(u, v)
        assert x10.witness.squared_distance(u, v) == (2 * wE - g.weight(u, v)) ** 2
        assert x10.graph.weight(u, v) == 2 * wE - g.weight(u, v)


def test_r9_unbalancing_flip_loses_weight():
    for seed in range(10):
        g = random_instance(P.ODD_MIN_BISECTION, 5, (1, 7), seed)
        x, _ = r9_sq_euclid(g)
        for lab in all_labels(5):
            p = Bipartition(tuple(map(bool, lab)))
            if abs(2 * sum(lab) - 5) != 1:
                continue
            for v in range(5):
                q = p.flip(v)
                if abs(2 * sum(P.labels(q)) - 5) > 1:
                    assert P.cost(P.SQ_EUCLIDEAN_MAX_CUT, x, q) < P.cost(P.SQ_EUCLIDEAN_MAX_CUT, x, p)


# -- r11 -------------------------------------------------------------------------

def test_r11_triangle():
    g = WeightedGraph(3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])
    t, cert = r11_sparsest(g)
    assert cert.params["M"] == 3
    assert [t.weight(0, 1), t.weight(0, 2), t.weight(1, 2)] == [2, 1, 0]
    g2 = WeightedGraph(3, [(0, 1, 1), (0, 2, 2)])
    t2, c2 = r11_sparsest(g2)
    p = Bipartition.from_sets(3, [0])
    assert P.cost(P.DENSEST_CUT, g2, p) == Fraction(3, 2)
    assert P.cost(P.SPARSEST_CUT, t2, p) == c2.params["M"] - Fraction(3, 2)


@given(st.integers(0, 10**6))
def test_r11_local_optima_coincide(seed):
    g = random_instance(P.DENSEST_CUT, 6, (0, 9), seed)
    t, _ = r11_sparsest(g)
    for lab in all_labels(6):
        if 0 < sum(lab) < 6:
            p = Bipartition(tuple(map(bool, lab)))
            assert is_local_optimum(P.DENSEST_CUT, g, p) == is_local_optimum(P.SPARSEST_CUT, t, p)


# -- chains ----------------------------------------------------------------------

def test_chain_sizes_and_composition():
    t, cert = chain_reduce(P.MAX_CUT_DEG5, STAR, ["r1", "r2"])
    sizes = cert.sizes()
    assert sizes[2] == 4 * sizes[1] + 1
    f = NaeFormula(3, (Clause((0, 1), 3), Clause((1, 2), 1)))
    t2, c2 = chain_reduce(P.ODD_HALF_NAE2, f, ["r5min", "r9"])
    assert t2.witness is not None
    out = c2.map(Bipartition.from_sets(3, [2]))
    assert isinstance(out, Assignment)


def test_chain_rejects_incompatible_path():
    with pytest.raises(ValidationError, match="r7->r5min"):
        chain_reduce(P.DENSEST_CUT, K3, ["r7", "r5min"])
    with pytest.raises(ValidationError):
        apply_reduction("r9", P.DENSEST_CUT, K3)


def test_map_rejects_infeasible_target_solution():
    _, cert = r5_bisection(NaeFormula(3, (Clause((0, 1), 3),)), "max")
    with pytest.raises(ValidationError):
        map_solution(cert, Bipartition.from_sets(3, []))
