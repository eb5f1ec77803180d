"""The three-level NAE gadget on a star with weights 1, 8, 3."""
from plslab.core import WeightedGraph
from plslab.reductions import r2_nae3

star = WeightedGraph(4, [(0, 1, 1), (0, 2, 8), (0, 3, 3)])
f, cert = r2_nae3(star)
p = cert.params
print(f"N={p['N']} L={p['L']} M={p['M']} variables={f.num_vars} clauses={len(f.clauses)}")
for (v, Q, i), c in zip(p["level3"], [c for c, l in zip(f.clauses, p["clause_levels"]) if l == 3]):
    if v == 0 and i == 0:
        print("  Q =", Q, "weight", c.weight)
