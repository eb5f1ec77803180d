"""Problem definitions: feasibility, exact costs, orientation and Flip moves.

A solution move is a pair ``(element, target)``. For two-sided problems the
target is ``1`` (side X / true) or ``0`` (side Y / false); for k-Means it is
the destination cluster id.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence, Union

from .core import (
    Assignment,
    Bipartition,
    Clustering,
    PointMatrix,
    WeightedGraph,
    cut_edge_weight,
    rational_sqrt,
)
from .errors import (
    DimensionError,
    InfeasibleMoveError,
    UndefinedObjectiveError,
    ValidationError,
)


class Tag(str, enum.Enum):
    MAX_CUT = "max-cut"
    MAX_CUT_DEG5 = "maxcut5"
    DISTINCT_MAX_CUT_DEG5 = "distinct-maxcut5"
    POS_NAE3 = "pos-nae3"
    ODD_HALF_NAE3 = "odd-half-nae3"
    ODD_HALF_NAE2 = "odd-half-nae2"
    ODD_MAX_BISECTION = "odd-max-bisection"
    ODD_MIN_BISECTION = "odd-min-bisection"
    DENSEST_CUT = "densest-cut"
    SPARSEST_CUT = "sparsest-cut"
    KMEANS = "kmeans"
    SQ_EUCLIDEAN_MAX_CUT = "sq-euclidean-max-cut"
    EUCLIDEAN_MAX_CUT = "euclidean-max-cut"


CUT_TAGS = frozenset({
    Tag.MAX_CUT, Tag.MAX_CUT_DEG5, Tag.DISTINCT_MAX_CUT_DEG5,
    Tag.ODD_MAX_BISECTION, Tag.ODD_MIN_BISECTION,
    Tag.SQ_EUCLIDEAN_MAX_CUT, Tag.EUCLIDEAN_MAX_CUT,
})
NAE_TAGS = frozenset({Tag.POS_NAE3, Tag.ODD_HALF_NAE3, Tag.ODD_HALF_NAE2})
RATIO_TAGS = frozenset({Tag.DENSEST_CUT, Tag.SPARSEST_CUT})
ODD_TAGS = frozenset({
    Tag.ODD_HALF_NAE3, Tag.ODD_HALF_NAE2, Tag.ODD_MAX_BISECTION, Tag.ODD_MIN_BISECTION,
})
MIN_TAGS = frozenset({Tag.ODD_MIN_BISECTION, Tag.SPARSEST_CUT, Tag.KMEANS})
DEG5_TAGS = frozenset({Tag.MAX_CUT_DEG5, Tag.DISTINCT_MAX_CUT_DEG5})
EUCLID_TAGS = frozenset({Tag.SQ_EUCLIDEAN_MAX_CUT, Tag.EUCLIDEAN_MAX_CUT})


@dataclass(frozen=True)
class ProblemKind:
    tag: Tag
    k: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "tag", Tag(self.tag))
        if self.tag is Tag.KMEANS:
            if self.k is None or self.k < 2:
                raise ValueError("k-Means needs k >= 2")
        elif self.k is not None:
            raise ValueError(f"{self.tag.value} takes no k")

    @classmethod
    def kmeans(cls, k: int) -> ProblemKind:
        return cls(Tag.KMEANS, k)

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> ProblemKind:
        tag = Tag(text)
        return cls(tag, k if tag is Tag.KMEANS else None)

    @property
    def maximize(self) -> bool:
        return self.tag not in MIN_TAGS

    @property
    def is_cut(self) -> bool:
        return self.tag in CUT_TAGS

    @property
    def is_nae(self) -> bool:
        return self.tag in NAE_TAGS

    @property
    def is_ratio(self) -> bool:
        return self.tag in RATIO_TAGS

    @property
    def is_odd(self) -> bool:
        return self.tag in ODD_TAGS

    @property
    def is_kmeans(self) -> bool:
        return self.tag is Tag.KMEANS

    @property
    def arity(self) -> int:
        """Number of parts a solution distributes elements over."""
        return self.k if self.is_kmeans else 2

    def improves(self, delta) -> bool:
        return delta > 0 if self.maximize else delta < 0

    def better(self, a, b) -> bool:
        """True when cost ``a`` is strictly better than cost ``b``."""
        return a > b if self.maximize else a < b

    def __str__(self) -> str:
        return f"kmeans({self.k})" if self.is_kmeans else self.tag.value


MAX_CUT = ProblemKind(Tag.MAX_CUT)
MAX_CUT_DEG5 = ProblemKind(Tag.MAX_CUT_DEG5)
DISTINCT_MAX_CUT_DEG5 = ProblemKind(Tag.DISTINCT_MAX_CUT_DEG5)
POS_NAE3 = ProblemKind(Tag.POS_NAE3)
ODD_HALF_NAE3 = ProblemKind(Tag.ODD_HALF_NAE3)
ODD_HALF_NAE2 = ProblemKind(Tag.ODD_HALF_NAE2)
ODD_MAX_BISECTION = ProblemKind(Tag.ODD_MAX_BISECTION)
ODD_MIN_BISECTION = ProblemKind(Tag.ODD_MIN_BISECTION)
DENSEST_CUT = ProblemKind(Tag.DENSEST_CUT)
SPARSEST_CUT = ProblemKind(Tag.SPARSEST_CUT)
SQ_EUCLIDEAN_MAX_CUT = ProblemKind(Tag.SQ_EUCLIDEAN_MAX_CUT)
EUCLIDEAN_MAX_CUT = ProblemKind(Tag.EUCLIDEAN_MAX_CUT)


# --------------------------------------------------------------------------
# Instances


@dataclass(frozen=True)
class Clause:
    lits: tuple[int, ...]
    weight: int

    def __post_init__(self):
        lits = tuple(int(x) for x in self.lits)
        object.__setattr__(self, "lits", lits)
        object.__setattr__(self, "weight", int(self.weight))
        if len(lits) not in (2, 3):
            raise ValidationError(f"clause size must be 2 or 3, got {len(lits)}")
        if len(set(lits)) != len(lits):
            raise ValidationError(f"clause literals must be distinct: {lits}")

    def satisfied(self, truth: Sequence[bool]) -> bool:
        first = truth[self.lits[0]]
        return any(truth[x] != first for x in self.lits[1:])


@dataclass(frozen=True)
class NaeFormula:
    """Weighted positive NAE clauses over variables ``0..num_vars-1``.

    Duplicate clauses are kept as separate records; :meth:`merged` folds
    clauses over the same variable set together.
    """

    num_vars: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        cl = tuple(c if isinstance(c, Clause) else Clause(*c) for c in self.clauses)
        object.__setattr__(self, "clauses", cl)
        for c in cl:
            for x in c.lits:
                if not 0 <= x < self.num_vars:
                    raise DimensionError(f"literal {x} out of range for {self.num_vars} variables")

    @property
    def max_clause_size(self) -> int:
        return max((len(c.lits) for c in self.clauses), default=0)

    def merged(self) -> NaeFormula:
        acc: dict[tuple[int, ...], int] = {}
        for c in self.clauses:
            key = tuple(sorted(c.lits))
            acc[key] = acc.get(key, 0) + c.weight
        return NaeFormula(self.num_vars, tuple(Clause(k, w) for k, w in acc.items()))

    def incident(self) -> list[list[int]]:
        """Clause indices containing each variable."""
        out: list[list[int]] = [[] for _ in range(self.num_vars)]
        for i, c in enumerate(self.clauses):
            for x in c.lits:
                out[x].append(i)
        return out


@dataclass(frozen=True)
class EuclideanInstance:
    """A graph together with an optional point witness.

    For the squared variant (and k-Means) each weight must equal the squared
    distance of the corresponding witness rows; for the Euclidean variant its
    square must.
    """

    graph: WeightedGraph
    witness: PointMatrix | None = field(default=None, compare=False)


Instance = Union[WeightedGraph, NaeFormula, EuclideanInstance]
Solution = Union[Bipartition, Assignment, Clustering]


def graph_of(instance) -> WeightedGraph:
    if isinstance(instance, EuclideanInstance):
        return instance.graph
    if isinstance(instance, WeightedGraph):
        return instance
    raise ValidationError(f"expected a graph instance, got {type(instance).__name__}")


def size_of(kind: ProblemKind, instance) -> int:
    """Number of elements (vertices, variables or points)."""
    if kind.is_nae:
        if not isinstance(instance, NaeFormula):
            raise ValidationError(f"{kind} expects an NaeFormula")
        return instance.num_vars
    return graph_of(instance).n


def _check_shape(kind: ProblemKind, instance, solution) -> None:
    n = size_of(kind, instance)
    if kind.is_kmeans:
        if not isinstance(solution, Clustering):
            raise ValidationError("k-Means solutions are Clusterings")
        if solution.k != kind.k:
            raise DimensionError(f"clustering has k={solution.k}, problem has k={kind.k}")
    elif kind.is_nae:
        if not isinstance(solution, Assignment):
            raise ValidationError("NAE solutions are Assignments")
    elif not isinstance(solution, Bipartition):
        raise ValidationError(f"{kind} solutions are Bipartitions")
    if len(solution) != n:
        raise DimensionError(f"solution has length {len(solution)}, instance has {n} elements")


def labels(solution: Solution) -> tuple[int, ...]:
    """Per-element part index: 1/0 for two-sided solutions, cluster id otherwise."""
    if isinstance(solution, Clustering):
        return solution.assign
    if isinstance(solution, Bipartition):
        return tuple(int(s) for s in solution.side)
    return tuple(int(t) for t in solution.truth)


def from_labels(kind: ProblemKind, values: Sequence[int]) -> Solution:
    if kind.is_kmeans:
        return Clustering(tuple(values), kind.k)
    if kind.is_nae:
        return Assignment(tuple(bool(v) for v in values))
    return Bipartition(tuple(bool(v) for v in values))


def apply_move(solution: Solution, element: int, target: int) -> Solution:
    if isinstance(solution, Clustering):
        return solution.move(element, target)
    cur = labels(solution)[element]
    if int(target) not in (0, 1):
        raise DimensionError(f"two-sided target must be 0 or 1, got {target}")
    return solution if cur == int(target) else solution.flip(element)


# --------------------------------------------------------------------------
# Feasibility and cost


def is_feasible(kind: ProblemKind, instance, solution) -> bool:
    _check_shape(kind, instance, solution)
    if kind.is_odd or kind.is_ratio:
        a = sum(labels(solution))
        b = len(solution) - a
        if kind.is_odd:
            return abs(a - b) == 1
        return a > 0 and b > 0
    return True


def _nae_cost(f: NaeFormula, truth: Sequence[bool]) -> int:
    return sum(c.weight for c in f.clauses if c.satisfied(truth))


def kmeans_cost_graph(g: WeightedGraph, c: Clustering) -> Fraction:
    total = Fraction(0)
    for members in c.clusters():
        if len(members) < 2:
            continue
        s = sum(g.weight(u, v) for u, v in combinations(members, 2))
        total += Fraction(s, len(members))
    return total


def kmeans_cost_points(m: PointMatrix, c: Clustering) -> Fraction:
    """Sum of squared distances of every point to its cluster centroid."""
    return sum((m.scatter(members) for members in c.clusters()), Fraction(0))


def cost(kind: ProblemKind, instance, solution) -> Fraction:
    _check_shape(kind, instance, solution)
    if kind.is_nae:
        return Fraction(_nae_cost(instance, solution.truth))
    g = graph_of(instance)
    if kind.is_kmeans:
        return kmeans_cost_graph(g, solution)
    cut = cut_edge_weight(g, solution)
    if kind.is_ratio:
        x, y = solution.sizes()
        if x == 0 or y == 0:
            raise UndefinedObjectiveError("density is undefined when one side is empty")
        return Fraction(cut, x * y)
    return Fraction(cut)


def _cut_gain(g: WeightedGraph, side: Sequence, v: int) -> int:
    """Change in cut weight when ``v`` switches sides."""
    d = 0
    for u in g.neighbors(v):
        w = g.weight(u, v)
        d += w if side[u] == side[v] else -w
    return d


def flip_delta(kind: ProblemKind, instance, solution, element: int, target: int | None = None) -> Fraction:
    """Exact cost change of moving ``element`` to ``target``.

    Uses only the terms touched by the move. The target defaults to the other
    side for two-sided problems and is required for k-Means.
    """
    _check_shape(kind, instance, solution)
    n = len(solution)
    if not 0 <= element < n:
        raise DimensionError(f"element {element} out of range for {n} elements")
    lab = labels(solution)
    if target is None:
        if kind.is_kmeans:
            raise InfeasibleMoveError("k-Means moves need an explicit target cluster")
        target = 1 - lab[element]
    target = int(target)
    if not 0 <= target < kind.arity:
        raise DimensionError(f"target {target} out of range")
    if target == lab[element]:
        raise InfeasibleMoveError(f"element {element} is already in part {target}")
    if not _move_feasible(kind, lab, element, target):
        raise InfeasibleMoveError(f"moving {element} to {target} gives an infeasible solution")

    if kind.is_nae:
        truth = solution.truth
        after = list(truth)
        after[element] = not after[element]
        d = 0
        for i in instance.incident()[element]:
            c = instance.clauses[i]
            d += c.weight * (int(c.satisfied(after)) - int(c.satisfied(truth)))
        return Fraction(d)

    g = graph_of(instance)
    if kind.is_kmeans:
        src = lab[element]
        members = [[i for i in range(n) if lab[i] == src], [i for i in range(n) if lab[i] == target]]

        def term(ms):
            if len(ms) < 2:
                return Fraction(0)
            return Fraction(sum(g.weight(u, v) for u, v in combinations(ms, 2)), len(ms))

        before = term(members[0]) + term(members[1])
        moved = [[i for i in members[0] if i != element], sorted(members[1] + [element])]
        return term(moved[0]) + term(moved[1]) - before

    gain = _cut_gain(g, lab, element)
    if kind.is_ratio:
        cut = cut_edge_weight(g, solution)
        x = sum(lab)
        y = n - x
        nx_ = x - 1 if lab[element] else x + 1
        return Fraction(cut + gain, nx_ * (n - nx_)) - Fraction(cut, x * y)
    return Fraction(gain)


def _move_feasible(kind: ProblemKind, lab: Sequence[int], element: int, target: int) -> bool:
    if kind.is_kmeans:
        return True
    if kind.is_odd or kind.is_ratio:
        x = sum(lab)
        nx_ = x + (1 if target == 1 else -1)
        ny = len(lab) - nx_
        if kind.is_odd:
            return abs(nx_ - ny) == 1
        return nx_ > 0 and ny > 0
    return True


def moves(kind: ProblemKind, instance, solution) -> Iterator[tuple[int, int]]:
    """Feasible single-element moves in scan order (element, then target)."""
    _check_shape(kind, instance, solution)
    lab = labels(solution)
    for e in range(len(lab)):
        for t in range(kind.arity):
            if t != lab[e] and _move_feasible(kind, lab, e, t):
                yield e, t


def neighbors(kind: ProblemKind, instance, solution) -> list:
    return [apply_move(solution, e, t) for e, t in moves(kind, instance, solution)]


# --------------------------------------------------------------------------
# Instance validation


def delta_values(g: WeightedGraph, v: int) -> list[int]:
    """All flip deltas of ``v``: sum over Q minus sum over N(v) \\ Q, for Q ⊆ N(v)."""
    ws = [g.weight(v, u) for u in g.neighbors(v)]
    total = sum(ws)
    out = []
    for mask in range(1 << len(ws)):
        inside = sum(w for i, w in enumerate(ws) if mask >> i & 1)
        out.append(2 * inside - total)
    return out


def has_distinct_neighbor_costs(g: WeightedGraph) -> bool:
    """True when every flip, from every cut, changes the cut weight."""
    return all(0 not in delta_values(g, v) for v in range(g.n))


def validate_instance(kind: ProblemKind, instance) -> list[str]:
    out: list[str] = []
    try:
        n = size_of(kind, instance)
    except ValidationError as exc:
        return [str(exc)]
    if kind.is_nae:
        if kind.tag is Tag.ODD_HALF_NAE2 and instance.max_clause_size > 2:
            out.append("clauses must have exactly two literals")
    else:
        g = graph_of(instance)
        if kind.tag in DEG5_TAGS and g.max_degree() > 5:
            worst = max(range(n), key=g.degree)
            out.append(f"vertex {worst} has degree {g.degree(worst)} > 5")
        if kind.tag is Tag.DISTINCT_MAX_CUT_DEG5 and g.max_degree() <= 5 and not has_distinct_neighbor_costs(g):
            out.append("some flip leaves the cut weight unchanged")
        if any(w < 0 for _, _, w in g.edges()) and not kind.is_nae:
            out.append("edge weights must be non-negative")
        out.extend(_witness_violations(kind, instance))
    if kind.is_odd and n % 2 == 0:
        out.append("vertex count must be odd")
    return out


def _witness_violations(kind: ProblemKind, instance) -> list[str]:
    if kind.tag not in EUCLID_TAGS and not kind.is_kmeans:
        return []
    w = instance.witness if isinstance(instance, EuclideanInstance) else None
    if w is None:
        return ["missing witness point matrix"] if kind.tag in EUCLID_TAGS else []
    g = instance.graph
    if w.m != g.n:
        return [f"witness has {w.m} rows for {g.n} vertices"]
    if not w.is_aligned():
        return ["witness columns are not aligned"]
    out = []
    for u, v, d2 in w.squared_distance_rows():
        wt = g.weight(u, v)
        if kind.tag is Tag.EUCLIDEAN_MAX_CUT:
            d = rational_sqrt(d2)
            if d is None:
                out.append(f"distance of ({u}, {v}) is irrational")
            elif d != wt:
                out.append(f"weight of ({u}, {v}) is {wt}, witness distance is {d}")
        elif d2 != wt:
            out.append(f"weight of ({u}, {v}) is {wt}, witness squared distance is {d2}")
    return out
