"""Instance transformers with solution-mapping certificates.

Each ``r*`` function takes a source instance and returns ``(target, cert)``.
The certificate maps any feasible target solution back to a feasible source
solution (:func:`map_solution`) and decides membership in the reasonable set
used for tightness (:func:`is_reasonable`).

Reduction ids: r1, r2, r3, r4, r5max, r5min, r6, r7, r8, r9, r10, r11.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Any, Callable

from . import problems as P
from .core import (
    Assignment,
    Bipartition,
    Clustering,
    PointMatrix,
    SqrtCoord,
    WeightedGraph,
)
from .engine import initial_solution
from .errors import DimensionError, ValidationError
from .problems import Clause, EuclideanInstance, NaeFormula, ProblemKind

# --------------------------------------------------------------------------
# Certificates


@dataclass
class ReductionCert:
    rid: str
    kind_from: ProblemKind
    kind_to: ProblemKind
    source: Any
    target: Any
    params: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)

    def map(self, solution):
        return map_solution(self, solution)

    def reasonable(self, solution) -> bool:
        return is_reasonable(self, solution)


@dataclass
class ChainCert:
    """Composition of several reductions applied left to right."""

    stages: list[ReductionCert]

    @property
    def rid(self) -> str:
        return ",".join(c.rid for c in self.stages)

    @property
    def kind_from(self) -> ProblemKind:
        return self.stages[0].kind_from

    @property
    def kind_to(self) -> ProblemKind:
        return self.stages[-1].kind_to

    @property
    def source(self):
        return self.stages[0].source

    @property
    def target(self):
        return self.stages[-1].target

    def sizes(self) -> list[int]:
        """Element counts of the source and of every stage output."""
        out = [P.size_of(self.kind_from, self.source)]
        out += [P.size_of(c.kind_to, c.target) for c in self.stages]
        return out

    def map(self, solution):
        return map_solution(self, solution)


def _check_target(cert: ReductionCert, solution) -> None:
    if not P.is_feasible(cert.kind_to, cert.target, solution):
        raise ValidationError(f"solution is infeasible for the {cert.rid} target")


def map_solution(cert, solution):
    """Apply g. Composed certificates apply their stages in reverse order."""
    if isinstance(cert, ChainCert):
        for c in reversed(cert.stages):
            solution = map_solution(c, solution)
        return solution
    _check_target(cert, solution)
    out = _MAPS[cert.rid](cert, solution)
    if cert.params.get("corrupt_flip"):
        out = _swap_first(cert.kind_from, out)
    return out


def _swap_first(kind: ProblemKind, s):
    """Exchange the part of element 0 with the first element in another part.

    Used only by negative controls; keeps feasibility intact.
    """
    lab = list(P.labels(s))
    for i in range(1, len(lab)):
        if lab[i] != lab[0]:
            lab[0], lab[i] = lab[i], lab[0]
            break
    return P.from_labels(kind, lab)


def is_reasonable(cert: ReductionCert, solution) -> bool:
    if isinstance(cert, ChainCert):
        raise ValidationError("reasonable sets are defined per stage")
    if not P.is_feasible(cert.kind_to, cert.target, solution):
        return False
    return _REASONABLE.get(cert.rid, lambda c, s: True)(cert, solution)


def _fallback(cert: ReductionCert):
    return initial_solution(cert.kind_from, cert.source)


# --------------------------------------------------------------------------
# Delta bounds and the distinct-cost gadget


def compute_delta_min_max(g: WeightedGraph, vertex: int | None = None) -> tuple[int, int]:
    """Smallest nonzero and largest absolute flip delta over all same-side
    neighbor subsets (1 and 0 when every delta vanishes).

    All vertices are considered unless ``vertex`` restricts the scan to one.
    """
    if g.max_degree() > 5:
        raise ValidationError(f"maximum degree {g.max_degree()} exceeds 5")
    verts = range(g.n) if vertex is None else [vertex]
    mags = [abs(d) for v in verts for d in P.delta_values(g, v)]
    nonzero = [d for d in mags if d]
    return (min(nonzero) if nonzero else 1), max(mags, default=0)


def r1_distinct(g: WeightedGraph):
    if g.max_degree() > 5:
        raise ValidationError(f"maximum degree {g.max_degree()} exceeds 5")
    edges = [(u, v, 10 * w + 1) for u, v, w in g.edges()]
    dummies = []
    nxt = g.n
    for v in range(g.n):
        if g.degree(v) % 2 == 0:
            dummies.append((v, nxt))
            edges.append((v, nxt, 1))
            nxt += 1
    target = WeightedGraph(nxt, edges)
    cert = ReductionCert("r1", P.MAX_CUT_DEG5, P.DISTINCT_MAX_CUT_DEG5, g, target,
                         {"original_n": g.n, "dummies": dummies})
    return target, cert


def level3_subsets(nbrs: list[int]) -> list[tuple[int, ...]]:
    """Subsets of a neighbor list by decreasing size, then lexicographically."""
    out = []
    for size in range(len(nbrs), -1, -1):
        out.extend(combinations(nbrs, size))
    return out


def r2_nae3(g: WeightedGraph, *, L=None, M=None, force: bool = False):
    """Distinct Max Cut-5 to Odd-Half Pos NAE 3-SAT via the three-level gadget.

    ``L`` and ``M`` override the computed constants (for negative controls);
    ``L="M"`` sets L to the default value of M.
    """
    n = g.n
    dmin, dmax = compute_delta_min_max(g)
    if not force and not P.has_distinct_neighbor_costs(g):
        raise ValidationError("some flip leaves the cut weight unchanged; pass force=True to override")
    N = 2 * n + 1
    L0 = 2 ** 6 * N
    M0 = 5 * dmax * L0 + 2 ** 5 * N + 1
    L = L0 if L is None else (M0 if L == "M" else int(L))
    M = M0 if M is None else int(M)

    clauses: list[Clause] = []
    levels: list[int] = []
    level3: list[tuple[int, tuple[int, ...], int]] = []
    for u, v, w in g.edges():
        clauses.append(Clause((u, v), M * w))
        levels.append(1)
    for v in range(n):
        for u in g.neighbors(v):
            clauses.append(Clause((n + v, u), -L * g.weight(u, v)))
            levels.append(2)
    subsets = {v: level3_subsets(g.neighbors(v)) for v in range(n)}
    for i in range(N):
        for v in range(n):
            nbrs = g.neighbors(v)
            for Q in subsets[v]:
                d = sum(g.weight(v, u) if u in Q else -g.weight(v, u) for u in nbrs)
                clauses.append(Clause((v, n + v, 2 * n + i), -1 if d > 0 else 0))
                levels.append(3)
                level3.append((v, Q, i))
    roles = [("level1", v) for v in range(n)] + [("level2", v) for v in range(n)] + [("level3", i) for i in range(N)]
    target = NaeFormula(4 * n + 1, tuple(clauses))
    params = {"n": n, "N": N, "L": L, "M": M, "delta_min": dmin, "delta_max": dmax, "level1_offset": 0,
              "var_roles": roles, "clause_levels": levels, "level3": level3}
    cert = ReductionCert("r2", P.DISTINCT_MAX_CUT_DEG5, P.ODD_HALF_NAE3, g, target, params,
                         {"L": L, "M": M, "force": force})
    return target, cert


def r3_nae3_to_nae2(f: NaeFormula):
    """Split each 3-clause of weight W into its three pairs with weight W/2.

    All weights are doubled first when some 3-clause weight is odd.
    """
    scale = 2 if any(len(c.lits) == 3 and c.weight % 2 for c in f.clauses) else 1
    out = []
    for c in f.clauses:
        w = c.weight * scale
        if len(c.lits) == 2:
            out.append(Clause(c.lits, w))
        else:
            a, b, x = c.lits
            out.extend(Clause(p, w // 2) for p in ((a, b), (b, x), (a, x)))
    target = NaeFormula(f.num_vars, tuple(out))
    return target, ReductionCert("r3", P.ODD_HALF_NAE3, P.ODD_HALF_NAE2, f, target, {"scale": scale})


def r4_nonneg(f: NaeFormula):
    if f.max_clause_size > 2:
        raise ValidationError("expected pair clauses only")
    if f.num_vars % 2 == 0:
        raise ValidationError("variable count must be odd")
    merged = {tuple(sorted(c.lits)): c.weight for c in f.merged().clauses}
    full = {p: merged.get(p, 0) for p in combinations(range(f.num_vars), 2)}
    low = min(full.values(), default=0)
    S = 1 + max(0, -low)
    target = NaeFormula(f.num_vars, tuple(Clause(p, w + S) for p, w in full.items()))
    half = (f.num_vars - 1) // 2
    cert = ReductionCert("r4", P.ODD_HALF_NAE2, P.ODD_HALF_NAE2, f, target,
                         {"shift": S, "half": half, "offset": half * (half + 1) * S})
    return target, cert


def r5_bisection(f: NaeFormula, orientation: str = "max"):
    if f.max_clause_size > 2:
        raise ValidationError("expected pair clauses only")
    merged = {tuple(sorted(c.lits)): c.weight for c in f.merged().clauses}
    if any(w < 0 for w in merged.values()):
        raise ValidationError("clause weights must be non-negative")
    n = f.num_vars
    if orientation == "max":
        target = WeightedGraph(n, [(u, v, w) for (u, v), w in merged.items() if w])
        cert = ReductionCert("r5max", P.ODD_HALF_NAE2, P.ODD_MAX_BISECTION, f, target, {})
    elif orientation == "min":
        K = max(merged.values(), default=0)
        pairs = combinations(range(n), 2)
        target = WeightedGraph(n, [(u, v, K - merged.get((u, v), 0)) for u, v in pairs
                                   if K - merged.get((u, v), 0)])
        cert = ReductionCert("r5min", P.ODD_HALF_NAE2, P.ODD_MIN_BISECTION, f, target, {"K": K})
    else:
        raise ValueError(f"orientation must be 'max' or 'min', got {orientation!r}")
    return target, cert


def r6_densest(g: WeightedGraph, *, matching_size: int | None = None, scale: int | None = None,
               matching_weight: int | None = None):
    """Odd Max Bisection to Densest Cut via a heavy complete graph plus a
    perfect matching on fresh vertices.

    The defaults are the faithful constants (matching size n**4, scale
    n**9); smaller values are for exhaustive oracle runs.
    """
    n = g.n
    if n % 2 == 0 or n < 3:
        raise ValidationError("source needs an odd vertex count of at least 3")
    if any(w < 0 for _, _, w in g.edges()):
        raise ValidationError("edge weights must be non-negative")
    m = n ** 4 if matching_size is None else matching_size
    s = n ** 9 if scale is None else scale
    what_max = max(g.max_weight(), 1)
    base = s * what_max
    edges = [(u, v, base + g.weight(u, v)) for u, v in combinations(range(n), 2)]
    w_max = max(w for _, _, w in edges)
    w_min = min(w for _, _, w in edges)
    mw = n * w_max if matching_weight is None else matching_weight
    pairs = [(n + 2 * i, n + 2 * i + 1) for i in range(m)]
    edges += [(a, b, mw) for a, b in pairs]
    target = WeightedGraph(n + 2 * m, edges)
    params = {"n": n, "aux_base": base, "scale": s, "matching_size": m, "matching_weight": mw,
              "matching_pairs": pairs, "aux_w_max": w_max, "aux_w_min": w_min}
    cert = ReductionCert("r6", P.ODD_MAX_BISECTION, P.DENSEST_CUT, g, target, params,
                         {"matching_size": matching_size, "scale": scale, "matching_weight": matching_weight})
    return target, cert


def r7_two_means(g: WeightedGraph):
    """Densest Cut to 2-Means: one point per vertex, one column per edge."""
    live = [(u, v, w) for u, v, w in g.edges() if w]
    touched = {x for u, v, _ in live for x in (u, v)}
    lonely = [v for v in range(g.n) if v not in touched]
    if lonely:
        raise ValidationError(f"vertex {lonely[0]} has no incident nonzero-weight edge")
    if any(w < 0 for _, _, w in live):
        raise ValidationError("edge weights must be non-negative")
    rows = [[SqrtCoord.zero()] * len(live) for _ in range(g.n)]
    for c, (u, v, w) in enumerate(live):
        rows[u][c] = SqrtCoord.root(w, 1)
        rows[v][c] = SqrtCoord.root(w, -1)
    witness = PointMatrix(tuple(tuple(r) for r in rows))
    target = EuclideanInstance(_distance_graph(witness), witness)
    wE = g.total_weight()
    params = {"column_map": [(u, v) for u, v, _ in live], "cost_constant": 2 * wE,
              "printed_constant": wE}
    cert = ReductionCert("r7", P.DENSEST_CUT, ProblemKind.kmeans(2), g, target, params)
    return target, cert


def _distance_graph(m: PointMatrix, root: bool = False) -> WeightedGraph:
    edges = []
    for i, j, d2 in m.squared_distance_rows():
        if root:
            d = isqrt(d2.numerator)
            if d2.denominator != 1 or d * d != d2.numerator:
                raise ValidationError(f"distance between {i} and {j} is not an integer")
            val = d
        else:
            if d2.denominator != 1:
                raise ValidationError(f"squared distance between {i} and {j} is not an integer")
            val = d2.numerator
        if val:
            edges.append((i, j, val))
    return WeightedGraph(m.m, edges)


def r8_lift_kmeans(x: EuclideanInstance, k: int):
    """k-Means to (k+1)-Means by adding one far-away point ``z``."""
    if not isinstance(x, EuclideanInstance) or x.witness is None:
        raise ValidationError("the lift needs a witness point matrix")
    w = x.witness
    n = w.m
    if k > n:
        raise ValidationError(f"k+1 = {k + 1} exceeds the point count {n + 1}")
    D = sum((d2 for _, _, d2 in w.squared_distance_rows()), Fraction(0))
    dim = max(w.dim, 1)
    root_d = isqrt(dim)
    if root_d * root_d < dim:
        root_d += 1
    T = 3 * n * max(int(-(-D.numerator // D.denominator)), 1) * root_d
    lifted = w.with_column([SqrtCoord.zero()] * n)
    z = tuple(lifted.rows[0][:-1]) + (SqrtCoord.rational(T),)
    witness = lifted.with_row(z)
    target = EuclideanInstance(_distance_graph(witness), witness)
    params = {"lifted_point": n, "offset": T, "D": D, "k": k}
    cert = ReductionCert("r8", ProblemKind.kmeans(k), ProblemKind.kmeans(k + 1), x, target, params)
    return target, cert


def _embedding(g: WeightedGraph, edge_radicand: Callable, alpha_sq: Callable, signed: bool):
    live = [(u, v, w) for u, v, w in g.edges() if w]
    cols = len(live) + g.n
    rows = [[SqrtCoord.zero()] * cols for _ in range(g.n)]
    for c, (u, v, w) in enumerate(live):
        r = edge_radicand(w)
        rows[u][c] = SqrtCoord.root(r, 1)
        rows[v][c] = SqrtCoord.root(r, -1 if signed else 1)
    alphas = []
    for v in range(g.n):
        a2 = alpha_sq(v)
        if a2 < 0:
            raise ValidationError(f"negative radicand {a2} for vertex {v}")
        alphas.append(a2)
        rows[v][len(live) + v] = SqrtCoord.root(a2)
    params = {"column_map": [(u, v) for u, v, _ in live],
              "diag_map": [len(live) + v for v in range(g.n)],
              "alpha_radicands": alphas}
    return PointMatrix(tuple(tuple(r) for r in rows)), params


def _check_min_bisection(g: WeightedGraph) -> None:
    if g.n % 2 == 0:
        raise ValidationError("source needs an odd vertex count")
    if any(w < 0 for _, _, w in g.edges()):
        raise ValidationError("edge weights must be non-negative")


def r9_sq_euclid(g: WeightedGraph, *, signed: bool = False):
    """Odd Min Bisection to Squared Euclidean Max Cut.

    Edge columns hold +sqrt(w/2) at both endpoints; ``signed=True`` negates
    the second endpoint instead (a deliberately wrong variant).
    """
    _check_min_bisection(g)
    wE = g.total_weight()
    if wE == 0:
        witness = PointMatrix(tuple((SqrtCoord.zero(),) for _ in range(g.n)))
        target = EuclideanInstance(WeightedGraph(g.n), witness)
        params = {"column_map": [], "diag_map": [], "alpha_radicands": [Fraction(0)] * g.n,
                  "trivial": True, "total_weight": 0}
    else:
        witness, params = _embedding(
            g, lambda w: Fraction(w, 2),
            lambda v: Fraction(wE, 2) - Fraction(g.incident_weight(v), 2), signed)
        target = EuclideanInstance(_distance_graph(witness), witness)
        params.update(trivial=False, total_weight=wE)
    cert = ReductionCert("r9", P.ODD_MIN_BISECTION, P.SQ_EUCLIDEAN_MAX_CUT, g, target, params,
                         {"signed": signed})
    return target, cert


def r10_euclid(g: WeightedGraph, *, C: int = 2):
    """Odd Min Bisection to Euclidean Max Cut with integer distances C*w(E) - w(uv)."""
    if C < 2:
        raise ValidationError("the constant C must be at least 2")
    _check_min_bisection(g)
    wE = g.total_weight()
    if wE == 0:
        witness = PointMatrix(tuple((SqrtCoord.zero(),) for _ in range(g.n)))
        target = EuclideanInstance(WeightedGraph(g.n), witness)
        params = {"column_map": [], "diag_map": [], "alpha_radicands": [Fraction(0)] * g.n,
                  "trivial": True}
    else:
        def edge_r(w):
            return Fraction(C * w * wE) - Fraction(w * w, 2)

        def alpha(v):
            return Fraction(C * C * wE * wE, 2) - sum(
                (edge_r(g.weight(v, u)) for u in g.neighbors(v) if g.weight(v, u)), Fraction(0))

        witness, params = _embedding(g, edge_r, alpha, signed=False)
        target = EuclideanInstance(_distance_graph(witness, root=True), witness)
        params["trivial"] = False
    params.update(scale_c=C, total_weight=wE)
    cert = ReductionCert("r10", P.ODD_MIN_BISECTION, P.EUCLIDEAN_MAX_CUT, g, target, params, {"C": C})
    return target, cert


def r11_sparsest(g: WeightedGraph):
    M = g.max_weight()
    edges = [(u, v, M - g.weight(u, v)) for u, v in combinations(range(g.n), 2) if M - g.weight(u, v)]
    target = WeightedGraph(g.n, edges)
    return target, ReductionCert("r11", P.DENSEST_CUT, P.SPARSEST_CUT, g, target, {"M": M})


# --------------------------------------------------------------------------
# Solution maps and reasonable sets


def _balanced(p: Bipartition) -> bool:
    x, y = p.sizes()
    return abs(x - y) == 1


def _g_r1(cert, s: Bipartition):
    return Bipartition(s.side[: cert.params["original_n"]])


def _g_r2(cert, s: Assignment):
    off = cert.params.get("level1_offset", 0)
    return Bipartition(s.truth[off: off + cert.params["n"]])


def _g_identity(cert, s):
    return s


def _g_r5(cert, s: Bipartition):
    return Assignment(s.side)


def _r6_reasonable(cert, s: Bipartition) -> bool:
    side = s.side
    if not all(side[a] != side[b] for a, b in cert.params["matching_pairs"]):
        return False
    return _balanced(Bipartition(side[: cert.params["n"]]))


def _g_r6(cert, s: Bipartition):
    head = Bipartition(s.side[: cert.params["n"]])
    return head if _balanced(head) else _fallback(cert)


def _g_r7(cert, s: Clustering):
    if 0 in s.sizes():
        return _fallback(cert)
    return Bipartition(tuple(a == 1 for a in s.assign))


def _r8_alone(cert, s: Clustering) -> bool:
    z = cert.params["lifted_point"]
    return s.sizes()[s.assign[z]] == 1


def _g_r8(cert, s: Clustering):
    if not _r8_alone(cert, s):
        return _fallback(cert)
    z = cert.params["lifted_point"]
    j = s.assign[z]
    return Clustering(tuple(a - (a > j) for a in s.assign[:z]), cert.params["k"])


def _g_balanced(cert, s: Bipartition):
    return s if _balanced(s) else _fallback(cert)


_MAPS = {
    "r1": _g_r1, "r2": _g_r2, "r3": _g_identity, "r4": _g_identity,
    "r5max": _g_r5, "r5min": _g_r5, "r6": _g_r6, "r7": _g_r7, "r8": _g_r8,
    "r9": _g_balanced, "r10": _g_balanced, "r11": _g_identity,
}

_REASONABLE = {
    "r6": _r6_reasonable,
    "r7": lambda c, s: 0 not in s.sizes(),
    "r8": _r8_alone,
    "r9": lambda c, s: _balanced(s),
    "r10": lambda c, s: _balanced(s),
}


# --------------------------------------------------------------------------
# Dispatch and composition

REDUCTIONS: dict[str, Callable] = {
    "r1": r1_distinct,
    "r2": r2_nae3,
    "r3": r3_nae3_to_nae2,
    "r4": r4_nonneg,
    "r5max": lambda x, **kw: r5_bisection(x, "max", **kw),
    "r5min": lambda x, **kw: r5_bisection(x, "min", **kw),
    "r6": r6_densest,
    "r7": r7_two_means,
    "r8": None,  # needs k, see apply_reduction
    "r9": r9_sq_euclid,
    "r10": r10_euclid,
    "r11": r11_sparsest,
}

ACCEPTS = {
    "r1": {P.Tag.MAX_CUT_DEG5, P.Tag.DISTINCT_MAX_CUT_DEG5},
    "r2": {P.Tag.DISTINCT_MAX_CUT_DEG5},
    "r3": {P.Tag.ODD_HALF_NAE3, P.Tag.ODD_HALF_NAE2},
    "r4": {P.Tag.ODD_HALF_NAE2},
    "r5max": {P.Tag.ODD_HALF_NAE2},
    "r5min": {P.Tag.ODD_HALF_NAE2},
    "r6": {P.Tag.ODD_MAX_BISECTION},
    "r7": {P.Tag.DENSEST_CUT},
    "r8": {P.Tag.KMEANS},
    "r9": {P.Tag.ODD_MIN_BISECTION},
    "r10": {P.Tag.ODD_MIN_BISECTION},
    "r11": {P.Tag.DENSEST_CUT},
}


def apply_reduction(rid: str, kind: ProblemKind, instance, **kwargs):
    """Run reduction ``rid`` on an instance of ``kind``."""
    if rid not in ACCEPTS:
        raise ValidationError(f"unknown reduction id {rid!r}")
    if kind.tag not in ACCEPTS[rid]:
        raise ValidationError(f"{rid} does not accept {kind} instances")
    if rid == "r8":
        target, cert = r8_lift_kmeans(instance, kind.k, **kwargs)
    else:
        target, cert = REDUCTIONS[rid](instance, **kwargs)
    cert.kind_from = kind if rid in ("r1", "r3") else cert.kind_from
    return target, cert


def chain_reduce(kind: ProblemKind, instance, path: list[str], options: dict | None = None):
    """Apply the reductions in ``path`` in order; returns ``(target, ChainCert)``.

    ``options`` maps a reduction id to keyword arguments for that stage.
    """
    if not path:
        raise ValidationError("empty reduction path")
    options = options or {}
    for a, b in zip(path, path[1:]):
        if a not in ACCEPTS or b not in ACCEPTS:
            raise ValidationError(f"unknown reduction id in {a}->{b}")
        if _OUTPUT[a] not in ACCEPTS[b]:
            raise ValidationError(f"incompatible step {a}->{b}")
    stages = []
    cur_kind, cur = kind, instance
    for rid in path:
        cur, cert = apply_reduction(rid, cur_kind, cur, **options.get(rid, {}))
        stages.append(cert)
        cur_kind = cert.kind_to
    return cur, ChainCert(stages)


_OUTPUT = {
    "r1": P.Tag.DISTINCT_MAX_CUT_DEG5, "r2": P.Tag.ODD_HALF_NAE3, "r3": P.Tag.ODD_HALF_NAE2,
    "r4": P.Tag.ODD_HALF_NAE2, "r5max": P.Tag.ODD_MAX_BISECTION, "r5min": P.Tag.ODD_MIN_BISECTION,
    "r6": P.Tag.DENSEST_CUT, "r7": P.Tag.KMEANS, "r8": P.Tag.KMEANS,
    "r9": P.Tag.SQ_EUCLIDEAN_MAX_CUT, "r10": P.Tag.EUCLIDEAN_MAX_CUT, "r11": P.Tag.SPARSEST_CUT,
}


def source_kind(rid: str, k: int | None = None) -> ProblemKind:
    """Canonical source kind of a reduction."""
    tag = {
        "r1": P.Tag.MAX_CUT_DEG5, "r2": P.Tag.DISTINCT_MAX_CUT_DEG5, "r3": P.Tag.ODD_HALF_NAE3,
        "r4": P.Tag.ODD_HALF_NAE2, "r5max": P.Tag.ODD_HALF_NAE2, "r5min": P.Tag.ODD_HALF_NAE2,
        "r6": P.Tag.ODD_MAX_BISECTION, "r7": P.Tag.DENSEST_CUT, "r8": P.Tag.KMEANS,
        "r9": P.Tag.ODD_MIN_BISECTION, "r10": P.Tag.ODD_MIN_BISECTION, "r11": P.Tag.DENSEST_CUT,
    }[rid]
    return ProblemKind(tag, k if tag is P.Tag.KMEANS else None)


RIDS = list(ACCEPTS)
