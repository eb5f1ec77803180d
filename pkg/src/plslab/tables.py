"""Vectorized exhaustive solution tables.

Every solution is an integer code: a bitmask for two-sided problems (bit v
set means side X / true) and base-k digits for k-Means. Costs are stored as
scaled integer *keys* with the orientation folded in, so a move improves
exactly when the key strictly increases. This is what makes exhaustive
enumeration of around a million solutions practical.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from math import lcm
from typing import Iterator, Sequence

import numpy as np

from . import problems as P
from .core import WeightedGraph
from .engine import check_cap, decode, encode
from .errors import CapExceededError, ValidationError

INT64_SAFE = 1 << 62


def _dtype_for(bound: int):
    return np.int64 if bound < INT64_SAFE else object


def _popcount(codes: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros(codes.shape, dtype=np.int64)
    for v in range(n):
        out += (codes >> v) & 1
    return out


def pair_tables(W: np.ndarray, n: int, dtype) -> tuple[np.ndarray, np.ndarray]:
    """``cut[mask]`` and ``inside[mask]`` for every vertex subset.

    ``cut`` is the weight between the subset and its complement and
    ``inside`` the weight of pairs inside the subset. Both are built by
    doubling, one vertex at a time.
    """
    deg = [sum(W[v, u] for u in range(n) if u != v) for v in range(n)]
    cut = np.zeros(1, dtype=dtype)
    inside = np.zeros(1, dtype=dtype)
    for v in range(n):
        s = np.zeros(1, dtype=dtype)
        for u in range(v):
            s = np.concatenate([s, s + W[u, v]])
        cut = np.concatenate([cut, cut + deg[v] - 2 * s])
        inside = np.concatenate([inside, inside + s])
    return cut, inside


class SolutionTable:
    """All solutions of one instance with feasibility and scaled cost keys."""

    def __init__(self, kind: P.ProblemKind, instance, limit: int | None = None):
        self.kind = kind
        self.instance = instance
        self.n = n = P.size_of(kind, instance)
        self.arity = kind.arity
        check_cap(kind, n, limit)
        self.size = self.arity ** n
        self.codes = np.arange(self.size, dtype=np.int64)
        self.scale = 1
        if kind.is_kmeans:
            self._build_kmeans()
        elif kind.is_nae:
            self._build_nae()
        else:
            self._build_cut()
        if not kind.maximize:
            self.key = -self.key
        self._sinks = None

    # -- construction --------------------------------------------------

    def _build_cut(self):
        g = P.graph_of(self.instance)
        n = self.n
        pop = _popcount(self.codes, n)
        if self.kind.is_odd:
            self.feasible = np.abs(2 * pop - n) == 1
        elif self.kind.is_ratio:
            self.feasible = (pop > 0) & (pop < n)
        else:
            self.feasible = np.ones(self.size, dtype=bool)
        absw = sum(abs(w) for _, _, w in g.edges())
        if self.kind.is_ratio:
            self.scale = reduce(lcm, (q * (n - q) for q in range(1, n)), 1)
        dtype = _dtype_for((absw + 1) * self.scale)
        cut, _ = pair_tables(g.weight_matrix(), n, dtype)
        if self.kind.is_ratio:
            denom = pop * (n - pop)
            denom[denom == 0] = 1  # infeasible rows; value unused
            if dtype is object:
                denom = denom.astype(object)
            factor = self.scale // denom
            self.key = cut * factor
            self.key[~self.feasible] = 0
        else:
            self.key = cut

    def _build_nae(self):
        f: P.NaeFormula = self.instance
        n = self.n
        pop = _popcount(self.codes, n)
        self.feasible = np.abs(2 * pop - n) == 1 if self.kind.is_odd else np.ones(self.size, dtype=bool)
        absw = sum(abs(c.weight) for c in f.clauses)
        dtype = _dtype_for(absw + 1)
        W = np.zeros((n, n), dtype=object)
        triples: dict[tuple[int, int, int], int] = {}
        for c in f.clauses:
            if len(c.lits) == 2:
                a, b = c.lits
                W[a, b] += c.weight
                W[b, a] += c.weight
            else:
                key = tuple(sorted(c.lits))
                triples[key] = triples.get(key, 0) + c.weight
        key, _ = pair_tables(W, n, dtype)
        for (a, b, c), w in triples.items():
            if w == 0:
                continue
            ba, bb, bc = ((self.codes >> x) & 1 for x in (a, b, c))
            sat = ~((ba == bb) & (bb == bc))
            key = key + np.where(sat, w, 0).astype(dtype)
        self.key = key

    def _build_kmeans(self):
        g = P.graph_of(self.instance)
        n, k = self.n, self.arity
        self.scale = reduce(lcm, range(1, n + 1), 1)
        self.feasible = np.ones(self.size, dtype=bool)
        absw = sum(abs(w) for _, _, w in g.edges())
        dtype = _dtype_for((absw + 1) * self.scale)
        _, inside = pair_tables(g.weight_matrix(), n, dtype)
        inv = np.array([0] + [self.scale // s for s in range(1, n + 1)], dtype=object if dtype is object else np.int64)
        masks = np.zeros((k, self.size), dtype=np.int64)
        rest = self.codes.copy()
        for v in range(n):
            d = rest % k
            rest //= k
            for c in range(k):
                masks[c] |= (d == c).astype(np.int64) << v
        total = np.zeros(self.size, dtype=dtype)
        for c in range(k):
            total = total + inside[masks[c]] * inv[_popcount(masks[c], n)]
        self.key = total

    # -- codes -----------------------------------------------------------

    def digits(self) -> np.ndarray:
        """``(size, n)`` array with the part index of every element."""
        out = np.empty((self.size, self.n), dtype=np.int8)
        c = self.codes.copy()
        for v in range(self.n):
            out[:, v] = c % self.arity
            c //= self.arity
        return out

    def decode(self, code: int):
        return P.from_labels(self.kind, decode(int(code), self.n, self.arity))

    def encode(self, solution) -> int:
        return encode(P.labels(solution), self.arity)

    def cost(self, code: int) -> Fraction:
        k = Fraction(int(self.key[code]), self.scale)
        return k if self.kind.maximize else -k

    # -- moves -----------------------------------------------------------

    def moves(self) -> list[tuple[int, int]]:
        """Move slots ``(element, target)``; two-sided problems use target -1 for a flip."""
        if self.arity == 2:
            return [(v, -1) for v in range(self.n)]
        return [(v, t) for v in range(self.n) for t in range(self.arity)]

    def neighbor(self, codes: np.ndarray, element: int, target: int) -> np.ndarray:
        if self.arity == 2:
            return codes ^ (1 << element)
        p = self.arity ** element
        d = (codes // p) % self.arity
        return codes + (target - d) * p

    def improving(self, element: int, target: int, codes: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray]:
        """Boolean mask over ``codes`` of improving moves and the neighbor codes."""
        codes = self.codes if codes is None else codes
        nb = self.neighbor(codes, element, target)
        ok = self.feasible[codes] & self.feasible[nb] & (nb != codes)
        better = np.asarray(self.key[nb] > self.key[codes], dtype=bool)
        return ok & better, nb

    @property
    def sinks(self) -> np.ndarray:
        if self._sinks is None:
            has = np.zeros(self.size, dtype=bool)
            for e, t in self.moves():
                imp, _ = self.improving(e, t)
                has |= imp
            self._sinks = self.feasible & ~has
        return self._sinks

    def sink_codes(self) -> np.ndarray:
        return np.flatnonzero(self.sinks)

    def is_sink(self, code: int) -> bool:
        return bool(self.sinks[code])

    def improving_move(self, code: int):
        """First improving move ``(element, target)`` out of ``code``, or None."""
        c = np.array([code], dtype=np.int64)
        for e, t in self.moves():
            imp, nb = self.improving(e, t, c)
            if imp[0]:
                if t < 0:
                    t = 1 - ((code >> e) & 1)
                return e, t
        return None

    def arcs(self) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        """Improving arcs, one batch ``(src, dst)`` per move slot."""
        for e, t in self.moves():
            imp, nb = self.improving(e, t)
            src = np.flatnonzero(imp)
            yield src, nb[src]


# --------------------------------------------------------------------------
# Twin compression for cut problems


def twin_classes(g: WeightedGraph) -> list[list[int]]:
    """Partition vertices into classes of twins: u, v are twins when
    w(u, x) = w(v, x) for every other vertex x."""
    W = g.weight_matrix()
    n = g.n
    classes: list[list[int]] = []
    for v in range(n):
        for cl in classes:
            u = cl[0]
            if all(W[u, x] == W[v, x] for x in range(n) if x != u and x != v):
                cl.append(v)
                break
        else:
            classes.append([v])
    return classes


class TwinTable:
    """Local optima of a cut problem over count vectors of twin classes.

    A state records how many members of each class lie on side X. Cost,
    feasibility and the effect of any flip depend only on the state, so sink
    detection over states is exact.
    """

    def __init__(self, kind: P.ProblemKind, instance, limit: int | None = None):
        if not kind.is_cut:
            raise ValidationError("twin compression supports cut problems only")
        self.kind = kind
        g = P.graph_of(instance)
        self.n = g.n
        self.classes = twin_classes(g)
        self.sizes = np.array([len(c) for c in self.classes], dtype=np.int64)
        J = len(self.classes)
        total = int(np.prod(self.sizes + 1, dtype=object))
        if limit is not None and total > limit:
            raise CapExceededError(f"{total} twin states exceed the cap of {limit}")
        self.size = total
        self.radix = np.cumprod(np.concatenate([[1], self.sizes[:-1] + 1])).astype(np.int64)
        codes = np.arange(total, dtype=np.int64)
        self.counts = (codes[:, None] // self.radix[None, :]) % (self.sizes + 1)[None, :]
        W = g.weight_matrix()
        reps = [c[0] for c in self.classes]
        Wc = np.zeros((J, J), dtype=object)
        diag = np.zeros(J, dtype=object)
        for i in range(J):
            for j in range(J):
                if i != j:
                    Wc[i, j] = W[reps[i], reps[j]]
            if len(self.classes[i]) > 1:
                diag[i] = W[self.classes[i][0], self.classes[i][1]]
        bound = sum(abs(w) for _, _, w in g.edges()) + 1
        dtype = _dtype_for(bound)
        A = self.counts.astype(dtype)
        B = (self.sizes[None, :] - self.counts).astype(dtype)
        cut = ((A @ Wc.astype(dtype)) * B).sum(axis=1) + (A * B) @ diag.astype(dtype)
        pop = self.counts.sum(axis=1)
        if kind.is_odd:
            self.feasible = np.abs(2 * pop - self.n) == 1
        else:
            self.feasible = np.ones(total, dtype=bool)
        self.key = cut if kind.maximize else -cut
        has = np.zeros(total, dtype=bool)
        for j in range(J):
            for step in (1, -1):
                ok = (self.counts[:, j] + step >= 0) & (self.counts[:, j] + step <= self.sizes[j])
                nb = np.where(ok, codes + step * self.radix[j], codes)
                imp = ok & self.feasible & self.feasible[nb] & np.asarray(self.key[nb] > self.key, dtype=bool)
                has |= imp
        self.sinks = self.feasible & ~has

    def representative(self, state: int, rng: np.random.Generator | None = None) -> tuple[int, ...]:
        """A labeled solution realizing ``state``: the first members of each class
        (or random members when ``rng`` is given) go to side X."""
        labels = [0] * self.n
        for j, cl in enumerate(self.classes):
            c = int(self.counts[state, j])
            members = list(cl) if rng is None else list(rng.permutation(cl))
            for v in members[:c]:
                labels[int(v)] = 1
        return tuple(labels)

    def representatives(self, state: int, relevant) -> Iterator[tuple[int, ...]]:
        """Labeled solutions realizing ``state``, one for every distinct
        labeling of the ``relevant`` vertices."""
        relevant = set(relevant)
        per_class = []
        for j, cl in enumerate(self.classes):
            c = int(self.counts[state, j])
            rel = [v for v in cl if v in relevant]
            other = [v for v in cl if v not in relevant]
            options = []
            for t in range(max(0, c - len(other)), min(c, len(rel)) + 1):
                for chosen in combinations(rel, t):
                    options.append(tuple(chosen) + tuple(other[: c - t]))
            per_class.append(options)
        for pick in product(*per_class):
            labels = [0] * self.n
            for members in pick:
                for v in members:
                    labels[v] = 1
            yield tuple(labels)

    def sink_states(self) -> np.ndarray:
        return np.flatnonzero(self.sinks)


def brute_sinks(kind: P.ProblemKind, instance, values: Sequence | None = None) -> list[tuple[int, ...]]:
    """Reference enumeration of sinks through exact per-solution costs."""
    n = P.size_of(kind, instance)
    out = []
    for lab in product(range(kind.arity), repeat=n):
        lab = lab[::-1]
        s = P.from_labels(kind, lab)
        if not P.is_feasible(kind, instance, s):
            continue
        c = P.cost(kind, instance, s)
        if all(not kind.improves(P.cost(kind, instance, nb) - c) for nb in P.neighbors(kind, instance, s)):
            out.append(lab)
    return out
