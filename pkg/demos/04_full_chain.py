"""Max Cut-5 through to Squared Euclidean Max Cut, checked exhaustively."""
from plslab import problems as P
from plslab.reductions import chain_reduce
from plslab.verify import check_chain_preservation, random_instance

path = ["r1", "r2", "r3", "r4", "r5min", "r9"]
g = random_instance(P.MAX_CUT_DEG5, 4, (1, 10), seed=0)
_, cert = chain_reduce(P.MAX_CUT_DEG5, g, path)
print("sizes along the chain:", cert.sizes())
rep = check_chain_preservation(g, path)
print(f"{rep.sinks_checked} sink states checked, {len(rep.violations)} violations")
