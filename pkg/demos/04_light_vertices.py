"""
Light vertices are far apart
============================

A vertex is epsilon-in-light when its in-degree is within epsilon * n p of
the minimum. Near the threshold such vertices are rare, and two of them are
almost never adjacent or share an in-neighbour.
"""

import math

from arbpack import light_report, sample, substream

n, eps = 2000, 0.05
p = math.log(n) / (n - 1)
clean = 0
for t in range(20):
    D = sample(n, p, substream(3, n, t))
    rep = light_report(D, eps, p)
    clean += rep.in_conflicts == 0
    if t < 5:
        print(f"trial {t}: {len(rep.in_light)} in-light vertices, "
              f"{rep.adjacent_in_pairs} adjacent pairs, "
              f"{rep.shared_in_neighbor_pairs} sharing an in-neighbour")
print(f"{clean} of 20 trials have no conflicting pair")
