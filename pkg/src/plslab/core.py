"""Exact carriers shared by every module: graphs, partitions and root matrices.

All arithmetic is exact. Integers are Python ints (unbounded), rationals are
:class:`fractions.Fraction`. Square roots are never evaluated numerically;
a :class:`PointMatrix` only ever exposes rational squared distances.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionError, InvalidMatrixError

Rat = Fraction


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact values")
    return Fraction(x)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


# --------------------------------------------------------------------------
# Graphs


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class WeightedGraph:
    """Undirected graph on vertices ``0..n-1`` with integer edge weights.

    Absent pairs have weight 0 and are non-edges. A pair stored with weight 0
    is an *explicit* zero-weight edge: it carries no weight but still counts
    toward degrees and neighborhoods. Edges keep their insertion order, which
    fixes column order in the embeddings built from a graph.
    """

    __slots__ = ("n", "_w", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = int(n)
        w: dict[tuple[int, int], int] = {}
        for u, v, weight in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise DimensionError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if isinstance(weight, (float, Fraction)) and weight != int(weight):
                raise TypeError(f"edge weight must be an integer, got {weight!r}")
            key = _pair(u, v)
            if key in w:
                raise ValueError(f"duplicate edge {key}")
            w[key] = int(weight)
        self._w = w
        self._adj: list[list[int]] | None = None

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> WeightedGraph:
        """Build from a symmetric matrix, keeping only nonzero entries."""
        n = len(matrix)
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if matrix[u][v] != matrix[v][u]:
                    raise ValueError(f"matrix not symmetric at ({u}, {v})")
                if matrix[u][v]:
                    edges.append((u, v, int(matrix[u][v])))
        return cls(n, edges)

    def weight(self, u: int, v: int) -> int:
        return self._w.get(_pair(u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return _pair(u, v) in self._w

    def edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, w) for (u, v), w in self._w.items()]

    def explicit_zero_edges(self) -> list[tuple[int, int]]:
        return [e for e, w in self._w.items() if w == 0]

    def _adjacency(self) -> list[list[int]]:
        if self._adj is None:
            adj: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self._w:
                adj[u].append(v)
                adj[v].append(u)
            for row in adj:
                row.sort()
            self._adj = adj
        return self._adj

    def neighbors(self, v: int) -> list[int]:
        return list(self._adjacency()[v])

    def degree(self, v: int) -> int:
        return len(self._adjacency()[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adjacency()), default=0)

    def incident_weight(self, v: int) -> int:
        return sum(self.weight(v, u) for u in self._adjacency()[v])

    def total_weight(self) -> int:
        return sum(self._w.values())

    def max_weight(self) -> int:
        return max(self._w.values(), default=0)

    def min_weight(self) -> int:
        return min(self._w.values(), default=0)

    def weight_matrix(self, dtype=object) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=dtype)
        for (u, v), w in self._w.items():
            m[u, v] = w
            m[v, u] = w
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self._w == other._w

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._w.items())))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, edges={self.edges()!r})"


# --------------------------------------------------------------------------
# Solutions


def _check_index(i: int, length: int) -> None:
    if not 0 <= i < length:
        raise DimensionError(f"index {i} out of range for length {length}")


@dataclass(frozen=True)
class Bipartition:
    """A 2-way cut; ``side[v]`` is True when ``v`` lies in X."""

    side: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "side", tuple(bool(s) for s in self.side))

    @classmethod
    def from_sets(cls, n: int, x: Iterable[int]) -> Bipartition:
        xs = set(x)
        for v in xs:
            _check_index(v, n)
        return cls(tuple(v in xs for v in range(n)))

    def __len__(self) -> int:
        return len(self.side)

    @property
    def X(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s)

    @property
    def Y(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if not s)

    def sizes(self) -> tuple[int, int]:
        x = sum(self.side)
        return x, len(self.side) - x

    def flip(self, v: int) -> Bipartition:
        _check_index(v, len(self.side))
        s = list(self.side)
        s[v] = not s[v]
        return Bipartition(tuple(s))

    def swapped(self) -> Bipartition:
        return Bipartition(tuple(not s for s in self.side))

    def __str__(self) -> str:
        return "".join("1" if s else "0" for s in self.side)


@dataclass(frozen=True)
class Assignment:
    """Truth assignment for a NAE formula."""

    truth: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "truth", tuple(bool(t) for t in self.truth))

    def __len__(self) -> int:
        return len(self.truth)

    def counts(self) -> tuple[int, int]:
        t = sum(self.truth)
        return t, len(self.truth) - t

    def flip(self, v: int) -> Assignment:
        _check_index(v, len(self.truth))
        t = list(self.truth)
        t[v] = not t[v]
        return Assignment(tuple(t))

    def negated(self) -> Assignment:
        return Assignment(tuple(not t for t in self.truth))

    def __str__(self) -> str:
        return "".join("1" if t else "0" for t in self.truth)


@dataclass(frozen=True)
class Clustering:
    """Assignment of ``n`` points to clusters ``0..k-1``; clusters may be empty."""

    assign: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "assign", tuple(int(a) for a in self.assign))
        if self.k < 1:
            raise ValueError("k must be positive")
        for a in self.assign:
            if not 0 <= a < self.k:
                raise DimensionError(f"cluster id {a} out of range for k={self.k}")

    def __len__(self) -> int:
        return len(self.assign)

    def clusters(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for i, a in enumerate(self.assign):
            out[a].append(i)
        return out

    def sizes(self) -> list[int]:
        s = [0] * self.k
        for a in self.assign:
            s[a] += 1
        return s

    def move(self, i: int, target: int) -> Clustering:
        _check_index(i, len(self.assign))
        _check_index(target, self.k)
        a = list(self.assign)
        a[i] = target
        return Clustering(tuple(a), self.k)

    def __str__(self) -> str:
        return "".join(str(a) if self.k <= 10 else f"{a}," for a in self.assign)


def cut_edge_weight(g: WeightedGraph, p: Bipartition) -> int:
    """Total weight of the edges with endpoints on different sides."""
    if len(p) != g.n:
        raise DimensionError(f"bipartition has length {len(p)}, graph has {g.n} vertices")
    s = p.side
    return sum(w for u, v, w in g.edges() if s[u] != s[v])


def flip(p: Bipartition, v: int) -> Bipartition:
    return p.flip(v)


# --------------------------------------------------------------------------
# Square-root coordinates


@dataclass(frozen=True)
class SqrtCoord:
    """The real number ``sign * sqrt(radicand)`` with a rational radicand."""

    sign: int
    radicand: Fraction

    def __post_init__(self):
        r = as_rat(self.radicand)
        object.__setattr__(self, "radicand", r)
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if r < 0:
            raise ValueError(f"negative radicand {r}")
        if (self.sign == 0) != (r == 0):
            raise ValueError("sign is 0 exactly when the radicand is 0")

    @classmethod
    def zero(cls) -> SqrtCoord:
        return cls(0, Fraction(0))

    @classmethod
    def root(cls, radicand, sign: int = 1) -> SqrtCoord:
        r = as_rat(radicand)
        return cls(0, r) if r == 0 else cls(sign, r)

    @classmethod
    def rational(cls, q) -> SqrtCoord:
        q = as_rat(q)
        return cls((q > 0) - (q < 0), q * q)

    def __neg__(self) -> SqrtCoord:
        return SqrtCoord(-self.sign, self.radicand)


@dataclass(frozen=True)
class _Column:
    base: Fraction  # every entry is coef * sqrt(base)
    coefs: tuple[Fraction, ...]


@dataclass(frozen=True)
class PointMatrix:
    """Points as rows of :class:`SqrtCoord` entries.

    Column alignment: within a column, every nonzero entry must be a rational
    multiple of one common square root. Entries with equal radicands always
    qualify; so do plain rational coordinates. Under alignment every squared
    distance is rational and is computed column by column.
    """

    rows: tuple[tuple[SqrtCoord, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise DimensionError("rows of a point matrix must have equal length")

    @classmethod
    def from_rationals(cls, rows: Sequence[Sequence]) -> PointMatrix:
        return cls(tuple(tuple(SqrtCoord.rational(x) for x in r) for r in rows))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @cached_property
    def _columns(self) -> tuple[_Column, ...]:
        cols = []
        for c in range(self.dim):
            entries = [r[c] for r in self.rows]
            base = next((e.radicand for e in entries if e.sign), Fraction(0))
            coefs = []
            for i, e in enumerate(entries):
                if e.sign == 0:
                    coefs.append(Fraction(0))
                    continue
                ratio = rational_sqrt(e.radicand / base)
                if ratio is None:
                    raise InvalidMatrixError(
                        f"column {c}: radicands {base} and {e.radicand} (row {i}) "
                        "are not rationally commensurable"
                    )
                coefs.append(e.sign * ratio)
            cols.append(_Column(base, tuple(coefs)))
        return tuple(cols)

    def validate(self) -> None:
        """Raise :class:`InvalidMatrixError` unless column alignment holds."""
        self._columns

    def is_aligned(self) -> bool:
        try:
            self._columns
        except InvalidMatrixError:
            return False
        return True

    def _check_row(self, i: int) -> None:
        if not 0 <= i < self.m:
            raise DimensionError(f"point {i} out of range for {self.m} points")

    def squared_distance(self, i: int, j: int) -> Fraction:
        self._check_row(i)
        self._check_row(j)
        total = Fraction(0)
        for col in self._columns:
            d = col.coefs[i] - col.coefs[j]
            total += d * d * col.base
        return total

    def squared_norm(self, i: int) -> Fraction:
        self._check_row(i)
        return sum((c.coefs[i] ** 2 * c.base for c in self._columns), Fraction(0))

    def inner(self, i: int, j: int) -> Fraction:
        self._check_row(i)
        self._check_row(j)
        return sum((c.coefs[i] * c.coefs[j] * c.base for c in self._columns), Fraction(0))

    def scatter(self, members: Sequence[int]) -> Fraction:
        """Sum of squared distances of ``members`` to their centroid."""
        if not members:
            return Fraction(0)
        total = Fraction(0)
        size = len(members)
        for col in self._columns:
            vals = [col.coefs[i] for i in members]
            mean = sum(vals, Fraction(0)) / size
            total += sum(((v - mean) ** 2 for v in vals), Fraction(0)) * col.base
        return total

    def is_injective(self) -> bool:
        """True when no two rows describe the same point."""
        cols = self._columns
        seen = set()
        for i in range(self.m):
            key = tuple(c.coefs[i] for c in cols if c.base)
            if key in seen:
                return False
            seen.add(key)
        return True

    def squared_distance_rows(self) -> Iterator[tuple[int, int, Fraction]]:
        for i in range(self.m):
            for j in range(i + 1, self.m):
                yield i, j, self.squared_distance(i, j)

    def with_column(self, entries: Sequence[SqrtCoord]) -> PointMatrix:
        if len(entries) != self.m:
            raise DimensionError("new column must have one entry per point")
        return PointMatrix(tuple(r + (e,) for r, e in zip(self.rows, entries)))

    def with_row(self, row: Sequence[SqrtCoord]) -> PointMatrix:
        if self.rows and len(row) != self.dim:
            raise DimensionError("new row has the wrong dimension")
        return PointMatrix(self.rows + (tuple(row),))


def squared_distance(m: PointMatrix, i: int, j: int) -> Fraction:
    return m.squared_distance(i, j)
