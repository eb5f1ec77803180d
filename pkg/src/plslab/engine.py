"""Flip local search: start solutions, pivoting, the standard algorithm and
exhaustive transition graphs."""
from __future__ import annotations

import enum
import json
import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from . import problems as P
from .core import Assignment, Bipartition, Clustering
from .errors import CapExceededError, ValidationError

DEFAULT_CAP = 1 << 20


def default_cap() -> int:
    env = os.environ.get("PLSLAB_CAP")
    return int(env) if env else DEFAULT_CAP


class PivotRule(str, enum.Enum):
    FIRST = "first"
    BEST = "best"


@dataclass
class SearchTrace:
    start: P.Solution
    moves: list[tuple[int, int, Fraction]] = field(default_factory=list)
    final: Optional[P.Solution] = None
    truncated: bool = False

    @property
    def iterations(self) -> int:
        return len(self.moves)

    def replay(self) -> P.Solution:
        s = self.start
        for e, t, _ in self.moves:
            s = P.apply_move(s, e, t)
        return s


def initial_solution(kind: P.ProblemKind, instance) -> P.Solution:
    """Deterministic feasible start: the first ceil(n/2) elements on side X
    (or true); point i in cluster i mod k for k-Means."""
    n = P.size_of(kind, instance)
    if kind.is_odd and n % 2 == 0:
        raise ValidationError(f"{kind} needs an odd element count, got {n}")
    if kind.is_ratio and n < 2:
        raise ValidationError(f"{kind} needs at least two vertices")
    if kind.is_kmeans:
        return Clustering(tuple(i % kind.k for i in range(n)), kind.k)
    half = (n + 1) // 2
    bits = tuple(i < half for i in range(n))
    return Assignment(bits) if kind.is_nae else Bipartition(bits)


def improving_move(kind: P.ProblemKind, instance, solution, rule: PivotRule = PivotRule.FIRST):
    """Return ``(element, target, delta)`` for an improving move, or None."""
    best = None
    for e, t in P.moves(kind, instance, solution):
        d = P.flip_delta(kind, instance, solution, e, t)
        if not kind.improves(d):
            continue
        if rule is PivotRule.FIRST:
            return e, t, d
        if best is None or kind.better(d, best[2]):
            best = (e, t, d)
    return best


def is_local_optimum(kind: P.ProblemKind, instance, solution) -> bool:
    return improving_move(kind, instance, solution) is None


def run_local_search(kind, instance, start, rule: PivotRule = PivotRule.FIRST,
                     max_iters: int | None = None) -> SearchTrace:
    if not P.is_feasible(kind, instance, start):
        raise ValidationError("start solution is infeasible")
    trace = SearchTrace(start=start)
    cur = start
    while True:
        mv = improving_move(kind, instance, cur, rule)
        if mv is None:
            break
        if max_iters is not None and trace.iterations >= max_iters:
            trace.truncated = True
            break
        trace.moves.append(mv)
        cur = P.apply_move(cur, mv[0], mv[1])
    trace.final = cur
    return trace


def standard_solution(kind, instance, rule: PivotRule = PivotRule.FIRST) -> P.Solution:
    return run_local_search(kind, instance, initial_solution(kind, instance), rule).final


# --------------------------------------------------------------------------
# Transition graphs


def feasible_count(kind: P.ProblemKind, n: int) -> int:
    if kind.is_kmeans:
        return kind.k ** n
    if kind.is_odd:
        return 2 * comb(n, (n + 1) // 2) if n % 2 else 0
    if kind.is_ratio:
        return max(2 ** n - 2, 0)
    return 2 ** n


def check_cap(kind, n: int, limit: int | None) -> int:
    limit = default_cap() if limit is None else limit
    count = feasible_count(kind, n)
    if count > limit:
        raise CapExceededError(f"{count} feasible solutions exceed the cap of {limit}")
    return count


def encode(values, arity: int) -> int:
    code = 0
    for i, v in enumerate(values):
        code += int(v) * arity ** i
    return code


def decode(code: int, n: int, arity: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        code, r = divmod(code, arity)
        out.append(r)
    return tuple(out)


@dataclass
class TransitionGraph:
    """Feasible solutions, strictly improving Flip arcs and heights.

    Node ``i`` is the solution ``nodes[i]``; arcs are ``(i, j, delta)``.
    """

    kind: P.ProblemKind
    nodes: list
    costs: list[Fraction]
    arcs: list[tuple[int, int, Fraction]]
    heights: list[int]

    @property
    def index(self) -> dict:
        return {s: i for i, s in enumerate(self.nodes)}

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.nodes]
        for i, j, _ in self.arcs:
            out[i].append(j)
        return out

    def sinks(self) -> list[int]:
        has_out = {i for i, _, _ in self.arcs}
        return [i for i in range(len(self.nodes)) if i not in has_out]

    def is_acyclic(self) -> bool:
        succ = self.successors()
        indeg = [0] * len(self.nodes)
        for i, j, _ in self.arcs:
            indeg[j] += 1
        queue = deque(i for i, d in enumerate(indeg) if d == 0)
        seen = 0
        while queue:
            i = queue.popleft()
            seen += 1
            for j in succ[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        return seen == len(self.nodes)

    def to_json(self) -> dict:
        return {
            "problem": str(self.kind),
            "nodes": [
                {"id": i, "solution": list(P.labels(s)), "cost": rat_str(c), "height": h}
                for i, (s, c, h) in enumerate(zip(self.nodes, self.costs, self.heights))
            ],
            "arcs": [{"from": i, "to": j, "delta": rat_str(d)} for i, j, d in self.arcs],
        }

    def to_dot(self) -> str:
        lines = ["digraph T {"]
        for i, (s, c, h) in enumerate(zip(self.nodes, self.costs, self.heights)):
            lab = "".join(str(x) for x in P.labels(s))
            shape = ', shape="doublecircle"' if h == 0 else ""
            lines.append(f'  n{i} [label="{lab}\\ncost {rat_str(c)}\\nh={h}"{shape}];')
        for i, j, d in self.arcs:
            lines.append(f'  n{i} -> n{j} [label="{rat_str(d)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def rat_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def compute_heights(num_nodes: int, arcs) -> list[int]:
    """Shortest distance to a sink, by reverse BFS."""
    pred: list[list[int]] = [[] for _ in range(num_nodes)]
    has_out = [False] * num_nodes
    for i, j, *_ in arcs:
        pred[j].append(i)
        has_out[i] = True
    height = [-1] * num_nodes
    queue = deque()
    for i in range(num_nodes):
        if not has_out[i]:
            height[i] = 0
            queue.append(i)
    while queue:
        j = queue.popleft()
        for i in pred[j]:
            if height[i] < 0:
                height[i] = height[j] + 1
                queue.append(i)
    return height


def build_transition_graph(kind: P.ProblemKind, instance, limit: int | None = None) -> TransitionGraph:
    n = P.size_of(kind, instance)
    check_cap(kind, n, limit)
    arity = kind.arity
    nodes, costs = [], []
    index: dict[int, int] = {}
    for code in range(arity ** n):
        s = P.from_labels(kind, decode(code, n, arity))
        if not P.is_feasible(kind, instance, s):
            continue
        index[code] = len(nodes)
        nodes.append(s)
        costs.append(P.cost(kind, instance, s))
    arcs = []
    for i, s in enumerate(nodes):
        lab = P.labels(s)
        for e, t in P.moves(kind, instance, s):
            code = encode(lab[:e] + (t,) + lab[e + 1:], arity)
            j = index[code]
            d = costs[j] - costs[i]
            if kind.improves(d):
                arcs.append((i, j, d))
    return TransitionGraph(kind, nodes, costs, arcs, compute_heights(len(nodes), arcs))


def trace_to_json(kind: P.ProblemKind, instance, trace: SearchTrace) -> dict:
    return {
        "problem": str(kind),
        "start": list(P.labels(trace.start)),
        "moves": [{"element": e, "target": t, "delta": rat_str(d)} for e, t, d in trace.moves],
        "final": list(P.labels(trace.final)),
        "final_cost": rat_str(P.cost(kind, instance, trace.final)),
        "iterations": trace.iterations,
        "truncated": trace.truncated,
    }


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"
