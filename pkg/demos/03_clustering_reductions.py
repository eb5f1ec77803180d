"""Densest Cut to 2-Means and the lifted (k+1)-Means instance."""
from plslab import problems as P
from plslab.problems import ProblemKind
from plslab.reductions import r7_two_means, r8_lift_kmeans
from plslab.verify import check_preservation, random_instance

g = random_instance(P.DENSEST_CUT, 6, (1, 9), seed=1)
x, cert = r7_two_means(g)
print("2-Means witness has", x.witness.m, "points in", x.witness.dim, "dimensions")
print("cost constant 2w(E) =", cert.params["cost_constant"])
y, lift = r8_lift_kmeans(x, 2)
print("lift offset T =", lift.params["offset"])
print("r7 preserves local optima:", check_preservation("r7", g).ok)
print("r8 preserves local optima:", check_preservation("r8", x, kind=ProblemKind.kmeans(2)).ok)
