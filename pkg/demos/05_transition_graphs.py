"""Transition graph of a triangle, rendered as DOT."""
from plslab import problems as P
from plslab.core import WeightedGraph
from plslab.engine import build_transition_graph

k3 = WeightedGraph(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1)])
tg = build_transition_graph(P.MAX_CUT, k3)
print(f"{len(tg.nodes)} nodes, {len(tg.arcs)} arcs, {len(tg.sinks())} sinks, max height {max(tg.heights)}")
print(tg.to_dot())
