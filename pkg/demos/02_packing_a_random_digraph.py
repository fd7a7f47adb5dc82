"""
Packing arborescences in a random digraph
=========================================

Sample D(n, p) just above the connectivity threshold, compute lambda, and
ask the packer for that many arc-disjoint spanning arborescences.
"""

import math

from arbpack import compute_lambda, max_pack, sample, validate_packing
from arbpack.io import format_packing

n = 64
p = 2 * math.log(n) / (n - 1)
D = sample(n, p, seed=7)
print(f"D({n}, {p:.4f}): {D.m} arcs, min in-degree {int(D.in_degrees.min())}")

lam = compute_lambda(D).value
print("lambda =", lam)

# max_pack starts at lambda and walks down until a packing is found
res = max_pack(D)
print("packed", res.k, "arborescences; equals lambda:", res.equals_lambda)

# every packing returned is checked independently
print("valid:", bool(validate_packing(D, res.outcome.packing)))

# roots are where the low in-degree vertices force them to be
roots = sorted(T.root for T in res.outcome.packing.arborescences)
low = sorted(int(v) for v in (D.in_degrees < res.k).nonzero()[0])
print("roots:", roots, "vertices with in-degree < k:", low)

# first arborescence, one line per tree
print(format_packing(res.outcome.packing).splitlines()[0][:120], "...")
