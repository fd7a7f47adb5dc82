"""
Where the minimum in-degree sits
================================

delta* is the least k whose expected number of in-degree-k vertices is at
least 1. For p = phi log n / (n - 1) the minimum in-degree is close to
alpha * p (n - 1), where 1 - alpha + alpha log alpha = 1 / phi.
"""

import math

import numpy as np

from arbpack import delta_star, expected_Yk, invert_F, sample, substream

# expected counts of low in-degree vertices for n = 1000 at p = log n / (n - 1)
n = 1000
p = math.log(n) / (n - 1)
for k in range(5):
    print(f"E Y_{k} = {expected_Yk(n, p, k):.4f}")
print("delta* =", delta_star(n, p))

# the same threshold predicts the sample minimum well
mins = [int(sample(n, p, substream(1, n, t)).in_degrees.min()) for t in range(40)]
print("observed min in-degrees:", np.bincount(mins))

# at phi = 2 the location is governed by F(alpha) = 1/2
alpha = invert_F(0.5)
print(f"alpha = {alpha:.12f}")
for n in (1000, 4000, 10000):
    p = 2 * math.log(n) / (n - 1)
    ratio = np.mean(
        [sample(n, p, substream(2, n, t)).in_degrees.min() / (p * (n - 1)) for t in range(10)]
    )
    print(f"n={n}: mean delta_in / (p(n-1)) = {ratio:.3f}, delta*/(p(n-1)) = "
          f"{delta_star(n, p) / (p * (n - 1)):.3f}")
# convergence to alpha is very slow: the correction decays like log log n / log n
