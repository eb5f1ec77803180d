"""Flip local search on a small Max Cut instance, first vs best pivoting."""
from plslab import problems as P
from plslab.engine import PivotRule, initial_solution, run_local_search
from plslab.verify import random_instance

g = random_instance(P.MAX_CUT, 10, (1, 20), seed=7)
start = initial_solution(P.MAX_CUT, g)
print("start cost", P.cost(P.MAX_CUT, g, start))
for rule in PivotRule:
    trace = run_local_search(P.MAX_CUT, g, start, rule)
    print(f"{rule.value:>5}: {trace.iterations} moves, final cost {P.cost(P.MAX_CUT, g, trace.final)}")
