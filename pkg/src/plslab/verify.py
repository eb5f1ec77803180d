"""Brute-force oracles: local optima, reduction preservation and tightness,
cost identities, distinct costs, vertex types and random instances."""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any

import numpy as np

from . import problems as P
from . import reductions as R
from .core import Bipartition, PointMatrix, WeightedGraph, rational_sqrt
from .engine import initial_solution
from .errors import ValidationError
from .formats import digest, instance_to_json
from .problems import Clause, EuclideanInstance, NaeFormula, ProblemKind
from .tables import SolutionTable, TwinTable, pair_tables

# --------------------------------------------------------------------------
# Local optima


def enumerate_local_optima(kind: ProblemKind, instance, cap: int | None = None) -> list:
    table = SolutionTable(kind, instance, cap)
    return [table.decode(c) for c in table.sink_codes()]


# --------------------------------------------------------------------------
# Preservation


@dataclass
class PreservationReport:
    reduction: str
    digest: str
    sinks_checked: int = 0
    violations: list = field(default_factory=list)
    mode: str = "exhaustive"
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "reduction": self.reduction, "digest": self.digest, "mode": self.mode,
            "sinks_checked": self.sinks_checked, "ok": self.ok,
            "violations": [
                {"target": list(t), "source": list(s), "move": list(m) if m else None}
                for t, s, m in self.violations
            ],
            "notes": {k: str(v) if isinstance(v, Fraction) else v for k, v in self.notes.items()},
        }


def _source_digest(kind: ProblemKind, source) -> str:
    return digest(instance_to_json(kind, source))


def corrupt(cert) -> None:
    """Break a certificate's solution map in place (negative controls)."""
    if cert.rid == "r2":
        cert.params["level1_offset"] = cert.params["n"]
    else:
        cert.params["corrupt_flip"] = True


def check_preservation(rid: str, source, cap: int | None = None, *, kind: ProblemKind | None = None,
                       corrupted: bool = False, max_violations: int = 20, **options) -> PreservationReport:
    """Every sink of the target must map to a sink of the source."""
    kind = kind or R.source_kind(rid)
    target, cert = R.apply_reduction(rid, kind, source, **options)
    if corrupted:
        corrupt(cert)
    return _check_cert(rid, kind, source, cert, cap, max_violations)


def _check_cert(label, kind, source, cert, cap, max_violations) -> PreservationReport:
    report = PreservationReport(label, _source_digest(kind, source))
    src = SolutionTable(kind, source, cap)
    tgt = SolutionTable(cert.kind_to, cert.target, cap)
    for code in tgt.sink_codes():
        t_sol = tgt.decode(code)
        s_sol = R.map_solution(cert, t_sol)
        report.sinks_checked += 1
        s_code = src.encode(s_sol)
        if not (src.feasible[s_code] and src.is_sink(s_code)):
            move = src.improving_move(s_code) if src.feasible[s_code] else None
            report.violations.append((P.labels(t_sol), P.labels(s_sol), move))
            if len(report.violations) >= max_violations:
                break
    return report


def check_chain_preservation(source: WeightedGraph, path: list[str], *, kind: ProblemKind | None = None,
                             options: dict | None = None, cap: int | None = None,
                             twin: bool | None = None) -> PreservationReport:
    """Preservation for a composed chain ending in a cut problem.

    Large targets are enumerated over twin-class count vectors. The composed
    map reads only the target vertices that carry the source ids, so each
    sink state is checked for every distinct labeling of those vertices.
    """
    kind = kind or R.source_kind(path[0])
    target, cert = R.chain_reduce(kind, source, path, options)
    report = PreservationReport(",".join(path), _source_digest(kind, source), mode="chain")
    src = SolutionTable(kind, source, cap)
    n_t = P.size_of(cert.kind_to, target)
    if twin is None:
        twin = n_t > 20
    report.notes["target_size"] = n_t
    if not twin:
        tgt = SolutionTable(cert.kind_to, target, cap)
        reps = [[P.labels(tgt.decode(c))] for c in tgt.sink_codes()]
    else:
        tt = TwinTable(cert.kind_to, target, cap)
        report.notes["twin_classes"] = len(tt.classes)
        report.notes["states"] = tt.size
        relevant = range(P.size_of(kind, source))
        reps = [list(tt.representatives(s, relevant)) for s in tt.sink_states()]
    for group in reps:
        report.sinks_checked += 1
        for lab in group:
            t_sol = P.from_labels(cert.kind_to, lab)
            s_sol = R.map_solution(cert, t_sol)
            s_code = src.encode(s_sol)
            if not src.is_sink(s_code):
                report.violations.append((lab, P.labels(s_sol), src.improving_move(s_code)))
    return report


# --------------------------------------------------------------------------
# Tightness

ISO = {"r3", "r4", "r5max", "r5min", "r11"}
RESTRICTED = {"r7", "r8", "r9", "r10"}


@dataclass
class TightnessReport:
    reduction: str
    digest: str
    mode: str
    sinks_outside: list = field(default_factory=list)
    unreached_sources: list = field(default_factory=list)
    bad_paths: list = field(default_factory=list)
    improving_exits: list = field(default_factory=list)
    iso_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.sinks_outside or self.unreached_sources or self.bad_paths
                    or self.improving_exits or self.iso_failures)

    def to_json(self) -> dict:
        return {"reduction": self.reduction, "digest": self.digest, "mode": self.mode, "ok": self.ok,
                "sinks_outside": len(self.sinks_outside),
                "unreached_sources": len(self.unreached_sources),
                "bad_paths": len(self.bad_paths),
                "improving_exits": len(self.improving_exits),
                "iso_failures": len(self.iso_failures)}


def _arc_sets(table: SolutionTable) -> dict[int, set[int]]:
    out: dict[int, set[int]] = {}
    for src, dst in table.arcs():
        for a, b in zip(src.tolist(), dst.tolist()):
            out.setdefault(a, set()).add(b)
    return out


def _block(cert, sol) -> int:
    if cert.rid == "r8":
        return sol.assign[cert.params["lifted_point"]]
    return 0


def check_tightness(rid: str, source, cap: int | None = None, *, kind: ProblemKind | None = None,
                    **options) -> TightnessReport:
    """Check the three tight-reduction properties on one instance.

    ``iso`` reductions must also give isomorphic transition graphs under g;
    ``restricted`` ones must give an isomorphism on each block of the
    reasonable set and have no improving arc leaving it.
    """
    kind = kind or R.source_kind(rid)
    target, cert = R.apply_reduction(rid, kind, source, **options)
    mode = "iso" if rid in ISO else "restricted" if rid in RESTRICTED else "general"
    rep = TightnessReport(rid, _source_digest(kind, source), mode)
    S = SolutionTable(kind, source, cap)
    T = SolutionTable(cert.kind_to, target, cap)
    s_arcs = _arc_sets(S)
    t_arcs = _arc_sets(T)

    in_R = np.zeros(T.size, dtype=bool)
    gmap = np.full(T.size, -1, dtype=np.int64)
    block = np.zeros(T.size, dtype=np.int64)
    for code in np.flatnonzero(T.feasible).tolist():
        sol = T.decode(code)
        if R.is_reasonable(cert, sol):
            in_R[code] = True
            gmap[code] = S.encode(R.map_solution(cert, sol))
            block[code] = _block(cert, sol)

    # 1: every sink is reasonable
    rep.sinks_outside = [int(c) for c in T.sink_codes() if not in_R[c]]
    # 2: g restricted to R reaches every source solution
    reached = set(gmap[in_R].tolist())
    rep.unreached_sources = [int(c) for c in np.flatnonzero(S.feasible) if int(c) not in reached]
    # 3: paths from R to R through non-R nodes
    for s in np.flatnonzero(in_R).tolist():
        seen = {s}
        stack = list(t_arcs.get(s, ()))
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            if in_R[x]:
                a, b = int(gmap[s]), int(gmap[x])
                if a != b and b not in s_arcs.get(a, ()):
                    rep.bad_paths.append((s, x))
            else:
                if mode == "restricted":
                    rep.improving_exits.append((s, x))
                stack.extend(t_arcs.get(x, ()))

    if mode == "iso":
        _check_iso(rep, S, T, in_R, gmap, np.zeros(T.size, dtype=np.int64), s_arcs, t_arcs, require_all=True)
    elif mode == "restricted":
        _check_iso(rep, S, T, in_R, gmap, block, s_arcs, t_arcs, require_all=False)
    return rep


def _check_iso(rep, S, T, in_R, gmap, block, s_arcs, t_arcs, require_all: bool) -> None:
    if require_all and not np.array_equal(in_R, T.feasible):
        rep.iso_failures.append(("reasonable set is not all feasible solutions",))
    src_feasible = set(np.flatnonzero(S.feasible).tolist())
    src_arc_count = sum(len(v) for v in s_arcs.values())
    for b in sorted(set(block[in_R].tolist())):
        members = np.flatnonzero(in_R & (block == b)).tolist()
        images = [int(gmap[c]) for c in members]
        if len(set(images)) != len(images) or set(images) != src_feasible:
            rep.iso_failures.append(("g is not a bijection on block", b))
            continue
        mset = set(members)
        count = 0
        for a in members:
            for x in t_arcs.get(a, ()):
                if x in mset:
                    count += 1
                    if int(gmap[x]) not in s_arcs.get(int(gmap[a]), ()):
                        rep.iso_failures.append(("arc without source counterpart", a, x))
                elif in_R[x]:
                    rep.iso_failures.append(("improving arc between blocks", a, x))
        if count != src_arc_count:
            rep.iso_failures.append(("arc count differs", b, count, src_arc_count))


# --------------------------------------------------------------------------
# Cost identities


def identities_r3(f: NaeFormula) -> list:
    target, cert = R.r3_nae3_to_nae2(f)
    s = SolutionTable(P.POS_NAE3, f, None)
    t = SolutionTable(P.POS_NAE3, target, None)
    scale = cert.params["scale"]
    bad = np.flatnonzero(np.asarray(t.key != scale * s.key, dtype=bool))
    return [("r3", int(c)) for c in bad[:10]]


def identities_r4(f: NaeFormula) -> list:
    target, cert = R.r4_nonneg(f)
    s = SolutionTable(P.ODD_HALF_NAE2, f, None)
    t = SolutionTable(P.ODD_HALF_NAE2, target, None)
    off = cert.params["offset"]
    bad = np.flatnonzero(s.feasible & np.asarray(t.key != s.key + off, dtype=bool))
    return [("r4", int(c)) for c in bad[:10]]


def identities_r5min(f: NaeFormula) -> list:
    gmax, _ = R.r5_bisection(f, "max")
    gmin, cert = R.r5_bisection(f, "min")
    a = SolutionTable(P.ODD_MAX_BISECTION, gmax, None)
    b = SolutionTable(P.ODD_MIN_BISECTION, gmin, None)
    h = (f.num_vars - 1) // 2
    const = h * (h + 1) * cert.params["K"]
    # b.key is the negated min cost
    bad = np.flatnonzero(a.feasible & np.asarray(-b.key != const - a.key, dtype=bool))
    return [("r5min", int(c)) for c in bad[:10]]


def identities_r7(g: WeightedGraph) -> list:
    """2-Means cost equals 2 w(E) - n w(Q,R)/(q r) on every split with both sides nonempty."""
    target, cert = R.r7_two_means(g)
    k2 = ProblemKind.kmeans(2)
    n, wE = g.n, g.total_weight()
    bad = []
    for code in range(1, 2 ** n - 1):
        side = tuple(bool(code >> v & 1) for v in range(n))
        cl = P.from_labels(k2, [int(x) for x in side])
        lhs = P.cost(k2, target, cl)
        q = sum(side)
        rhs = 2 * wE - Fraction(n * P.cut_edge_weight(g, Bipartition(side)), q * (n - q))
        if lhs != rhs:
            bad.append(("r7", code, lhs, rhs))
    return bad


def identities_r9(g: WeightedGraph, *, signed: bool = False) -> list:
    target, cert = R.r9_sq_euclid(g, signed=signed)
    n, wE = g.n, g.total_weight()
    bad = []
    w = target.witness
    for i in range(n):
        if w.squared_norm(i) != Fraction(wE, 2):
            bad.append(("norm", i))
    T = P.graph_of(target)
    for u, v in combinations(range(n), 2):
        if T.weight(u, v) != wE - g.weight(u, v):
            bad.append(("distance", u, v))
    for code in range(2 ** n):
        side = Bipartition(tuple(bool(code >> v & 1) for v in range(n)))
        x, y = side.sizes()
        if P.cut_edge_weight(T, side) != x * y * wE - P.cut_edge_weight(g, side):
            bad.append(("cost", code))
    return bad


def identities_r10(g: WeightedGraph, C: int = 2) -> list:
    target, cert = R.r10_euclid(g, C=C)
    n, wE = g.n, g.total_weight()
    bad = []
    for a in cert.params["alpha_radicands"]:
        if a < 0:
            bad.append(("alpha", a))
    w = target.witness
    for u, v, d2 in w.squared_distance_rows():
        d = rational_sqrt(d2)
        if d is None or d.denominator != 1:
            bad.append(("integrality", u, v))
        elif d != C * wE - g.weight(u, v):
            bad.append(("distance", u, v, d))
    return bad


def identities_r11(g: WeightedGraph) -> list:
    target, cert = R.r11_sparsest(g)
    M = cert.params["M"]
    bad = []
    for code in range(1, 2 ** g.n - 1):
        side = Bipartition(tuple(bool(code >> v & 1) for v in range(g.n)))
        if P.cost(P.SPARSEST_CUT, target, side) != M - P.cost(P.DENSEST_CUT, g, side):
            bad.append(("r11", code))
    return bad


# --------------------------------------------------------------------------
# Distinct costs and vertex types


def check_distinct_costs(g: WeightedGraph, cap: int | None = None):
    """Return ``(True, None)`` when every flip changes the cut weight, else
    ``(False, (cut, vertex))`` for a witness."""
    t = SolutionTable(P.MAX_CUT, g, cap)
    for v in range(g.n):
        nb = t.codes ^ (1 << v)
        same = np.flatnonzero(np.asarray(t.key[nb] == t.key, dtype=bool))
        if len(same):
            return False, (t.decode(int(same[0])), v)
    return True, None


class VertexType(str, enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"
    OTHER = "other"


@dataclass(frozen=True)
class VertexTypeReport:
    vertex: int
    sorted_incident: tuple[int, int, int, int]
    vtype: VertexType


def classify_weights(ws) -> VertexType:
    a, b, c, d = sorted(list(ws) + [0] * (4 - len(ws)), reverse=True)
    if a > b + c + d:
        return VertexType.TYPE_I
    if a + d > b + c and a < b + c + d:
        return VertexType.TYPE_II
    if a + d < b + c:
        return VertexType.TYPE_III
    return VertexType.OTHER


def classify_vertex(g: WeightedGraph, v: int) -> VertexTypeReport:
    if g.degree(v) > 4:
        raise ValidationError(f"vertex {v} has degree {g.degree(v)} > 4")
    ws = sorted((g.weight(v, u) for u in g.neighbors(v)), reverse=True)
    ws += [0] * (4 - len(ws))
    return VertexTypeReport(v, tuple(ws), classify_weights(ws))


def check_typed_flip_distinct(g: WeightedGraph, v: int, cap: int | None = None, table=None) -> bool:
    rep = classify_vertex(g, v)
    if rep.vtype is VertexType.OTHER:
        raise ValidationError(f"vertex {v} has no type; the typed-flip check does not apply")
    t = table if table is not None else SolutionTable(P.MAX_CUT, g, cap)
    nb = t.codes ^ (1 << v)
    return not bool(np.any(np.asarray(t.key[nb] == t.key, dtype=bool)))


# --------------------------------------------------------------------------
# Random instances


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def _random_graph(rng, n, lo, hi, p=0.5, max_degree=None, no_isolated=False) -> WeightedGraph:
    pairs = list(combinations(range(n), 2))
    order = rng.permutation(len(pairs))
    deg = [0] * n
    edges = []
    for idx in order:
        u, v = pairs[idx]
        if max_degree is not None and (deg[u] >= max_degree or deg[v] >= max_degree):
            continue
        if rng.random() < p:
            edges.append((u, v, int(rng.integers(lo, hi + 1))))
            deg[u] += 1
            deg[v] += 1
    if no_isolated:
        for v in range(n):
            if deg[v] == 0 and n > 1:
                cands = [u for u in range(n) if u != v and (max_degree is None or deg[u] < max_degree)]
                u = int(rng.choice(cands))
                edges.append((min(u, v), max(u, v), int(rng.integers(max(lo, 1), max(hi, 1) + 1))))
                deg[u] += 1
                deg[v] += 1
    edges.sort(key=lambda e: (e[0], e[1]))
    return WeightedGraph(n, edges)


def random_instance(kind: ProblemKind, n: int, weight_range=(1, 10), seed=0):
    """Seeded random instance of ``kind`` with ``n`` elements; passes validation."""
    lo, hi = weight_range
    if lo > hi:
        raise ValidationError("empty weight range")
    if kind.is_odd and n % 2 == 0:
        raise ValidationError(f"{kind} requires an odd size, got {n}")
    if n < 1:
        raise ValidationError("size must be positive")
    rng = _rng(seed)
    tag = kind.tag
    if tag is P.Tag.DISTINCT_MAX_CUT_DEG5:
        for _ in range(2000):
            g = _random_graph(rng, n, max(lo, 1), hi, p=0.6, max_degree=5, no_isolated=True)
            if P.has_distinct_neighbor_costs(g):
                return g
        raise ValidationError("could not sample a distinct-cost instance")
    if tag is P.Tag.MAX_CUT_DEG5:
        return _random_graph(rng, n, lo, hi, p=0.6, max_degree=5)
    if tag in (P.Tag.MAX_CUT, P.Tag.ODD_MAX_BISECTION, P.Tag.ODD_MIN_BISECTION):
        return _random_graph(rng, n, lo, hi)
    if kind.is_ratio:
        if n < 2:
            raise ValidationError("cut ratios need at least two vertices")
        return _random_graph(rng, n, max(lo, 1), max(hi, 1), no_isolated=True)
    if kind.is_nae:
        if n < 3 and tag is not P.Tag.ODD_HALF_NAE2:
            raise ValidationError("three-literal clauses need at least three variables")
        clauses = []
        for _ in range(2 * n):
            size = 2 if tag is P.Tag.ODD_HALF_NAE2 or n < 3 or rng.random() < 0.5 else 3
            lits = tuple(int(x) for x in rng.choice(n, size=size, replace=False))
            clauses.append(Clause(lits, int(rng.integers(-hi, hi + 1))))
        return NaeFormula(n, tuple(clauses))
    if kind.is_kmeans:
        side = max(hi, int(np.ceil(np.sqrt(n))) + 1)
        cells = rng.choice(side * side, size=n, replace=False)
        pts = [(int(c) // side, int(c) % side) for c in cells]
        return points_instance(pts)
    if tag in P.EUCLID_TAGS:
        xs = sorted(int(x) for x in rng.choice(max(hi, n) + 1, size=n, replace=False))
        pts = [(x,) for x in xs]
        inst = points_instance(pts)
        if tag is P.Tag.EUCLIDEAN_MAX_CUT:
            g = WeightedGraph(n, [(i, j, abs(xs[i] - xs[j])) for i, j in combinations(range(n), 2)])
            return EuclideanInstance(g, inst.witness)
        return inst
    raise ValidationError(f"no generator for {kind}")


def points_instance(points) -> EuclideanInstance:
    """Graph of squared distances between rational points, with its witness."""
    w = PointMatrix.from_rationals(points)
    edges = []
    for i, j, d2 in w.squared_distance_rows():
        if d2.denominator != 1:
            raise ValidationError("squared distances must be integers")
        if d2:
            edges.append((i, j, d2.numerator))
    return EuclideanInstance(WeightedGraph(w.m, edges), w)


# --------------------------------------------------------------------------
# Sampled check for the faithful Densest Cut construction


@dataclass
class SampledReport:
    samples: int = 0
    sample_sinks: int = 0
    search_sinks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class _RatioState:
    """Fast exact densest-cut arithmetic on an integer weight matrix."""

    def __init__(self, g: WeightedGraph):
        self.n = g.n
        self.W = np.zeros((g.n, g.n), dtype=np.int64)
        for u, v, w in g.edges():
            self.W[u, v] = self.W[v, u] = w
        self.total = int(self.W.sum()) // 2

    def gains(self, x: np.ndarray) -> tuple[int, np.ndarray]:
        s = 2 * x.astype(np.int64) - 1
        Ws = self.W @ s
        cut = (self.total - int(s @ Ws) // 2) // 2
        return cut, s * Ws

    def improving(self, x: np.ndarray) -> np.ndarray:
        """Mask of vertices whose flip strictly increases the density."""
        cut, gain = self.gains(x)
        a = int(x.sum())
        b = self.n - a
        na = np.where(x, a - 1, a + 1)
        nb = self.n - na
        valid = (na > 0) & (nb > 0)
        lhs = (cut + gain) * (a * b)
        rhs = cut * (na * nb)
        return valid & (lhs > rhs)


def r6_sampled_check(source: WeightedGraph, samples: int = 10_000, searches: int = 20, seed: int = 0,
                     **options) -> SampledReport:
    """Preservation for the faithful Densest Cut construction by sampling.

    Samples mix the reasonable set, small perturbations of it and uniform
    cuts. Each sampled sink, and each sink reached by local search from a
    random start, must map to a source local optimum.
    """
    target, cert = R.r6_densest(source, **options)
    src = SolutionTable(P.ODD_MAX_BISECTION, source)
    st = _RatioState(target)
    rng = _rng(seed)
    n = source.n
    pairs = np.array(cert.params["matching_pairs"], dtype=np.int64)
    rep = SampledReport()

    def reasonable():
        x = np.zeros(st.n, dtype=bool)
        ones = rng.choice(n, size=(n + 1) // 2 if rng.random() < 0.5 else (n - 1) // 2, replace=False)
        x[ones] = True
        flip = rng.random(len(pairs)) < 0.5
        x[pairs[:, 0]] = flip
        x[pairs[:, 1]] = ~flip
        return x

    def check(x):
        sol = Bipartition(tuple(bool(b) for b in x))
        s = R.map_solution(cert, sol)
        code = src.encode(s)
        if not src.is_sink(code):
            rep.violations.append((P.labels(sol), P.labels(s)))

    for i in range(samples):
        r = i % 4
        if r < 2:
            x = reasonable()
        elif r == 2:
            x = reasonable()
            idx = rng.choice(st.n, size=int(rng.integers(1, 4)), replace=False)
            x[idx] = ~x[idx]
        else:
            x = rng.random(st.n) < 0.5
        if x.all() or not x.any():
            continue
        rep.samples += 1
        if not st.improving(x).any():
            rep.sample_sinks += 1
            check(x)
    for _ in range(searches):
        x = rng.random(st.n) < 0.5
        if x.all() or not x.any():
            x[0] = not x[0]
        while True:
            imp = np.flatnonzero(st.improving(x))
            if not len(imp):
                break
            x[imp[0]] = ~x[imp[0]]
        rep.search_sinks += 1
        check(x)
    return rep


# --------------------------------------------------------------------------
# Corpus helpers

SUITES = ("preservation", "tightness", "identities", "distinct", "types")


def corpus_source(rid: str, n: int, seed: int, weight_range=(1, 10), k: int = 2):
    """Random source instance suitable for reduction ``rid``."""
    kind = R.source_kind(rid, k)
    if rid in ("r4", "r5max", "r5min"):
        f = random_instance(P.ODD_HALF_NAE2, n, weight_range, seed)
        if rid != "r4":
            f = R.r4_nonneg(f)[0]
        return kind, f
    if rid == "r3":
        return kind, random_instance(P.ODD_HALF_NAE3, n, weight_range, seed)
    return kind, random_instance(kind, n, weight_range, seed)


def random_degree4_graph(n: int, seed, weight_range=(1, 10)) -> WeightedGraph:
    lo, hi = weight_range
    return _random_graph(_rng(seed), n, lo, hi, p=0.7, max_degree=4)


def check_vertex_types(g: WeightedGraph, cap: int | None = None) -> tuple[int, list]:
    """Typed-flip check for every typed vertex; returns ``(typed, violations)``."""
    table = SolutionTable(P.MAX_CUT, g, cap)
    typed, bad = 0, []
    for v in range(g.n):
        rep = classify_vertex(g, v)
        if rep.vtype is VertexType.OTHER:
            continue
        typed += 1
        if not check_typed_flip_distinct(g, v, table=table):
            bad.append((v, rep.vtype.value, rep.sorted_incident))
    return typed, bad


IDENTITY_CHECKS = {
    "r3": (P.ODD_HALF_NAE3, identities_r3),
    "r4": (P.ODD_HALF_NAE2, identities_r4),
    "r5min": (P.ODD_HALF_NAE2, identities_r5min),
    "r7": (P.DENSEST_CUT, identities_r7),
    "r9": (P.ODD_MIN_BISECTION, identities_r9),
    "r10": (P.ODD_MIN_BISECTION, identities_r10),
    "r11": (P.DENSEST_CUT, identities_r11),
}


def identity_source(rid: str, n: int, seed, weight_range=(1, 10)):
    kind, fn = IDENTITY_CHECKS[rid]
    inst = random_instance(kind, n, weight_range, seed)
    if rid == "r5min":
        inst = R.r4_nonneg(inst)[0]
    return inst, fn
