"""
The in-degree bound and the exact packing number
================================================

lambda(D) is read off the in-degree histogram alone, while tau(D), the
number of arc-disjoint spanning arborescences, is a global quantity.
On small digraphs both can be computed exactly and compared.
"""

from arbpack import build, complete, compute_lambda, tau_exact

# a directed triangle: every vertex has in-degree 1
c3 = build(3, [(0, 1), (1, 2), (2, 0)])
res = compute_lambda(c3)
print("C3: lambda =", res.value, "first violated at ell =", res.violating_ell)

# tau comes with a subpartition that proves it cannot be larger
cert = tau_exact(c3)
print("C3: tau =", cert.tau, "tight subpartition:", cert.tight_subpartition)

# on complete digraphs the two agree at n - 1
for n in range(2, 7):
    K = complete(n)
    print(f"K{n}: lambda = {compute_lambda(K).value}, tau = {tau_exact(K).tau}")

# a vertex of in-degree 0 must root every arborescence, so a second one
# kills all packings while lambda already sees it
two_sources = build(4, [(0, 2), (1, 2), (2, 3), (0, 3)])
print("two sources: lambda =", compute_lambda(two_sources).value,
      "tau =", tau_exact(two_sources).tau)

# a gap: the in-degrees allow 1 but the two halves never meet
split = build(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
print("two 2-cycles: lambda =", compute_lambda(split).value,
      "tau =", tau_exact(split).tau)
