"""
Uniform sampling
================

sample(g, xi) maps xi in [0, 1) to the member of rank floor(total * xi), so
a uniform xi gives a uniform member.  Here we draw from the 3-d phorma whose
first two coordinates may be swapped.
"""

import numpy as np

from phorma import PhormaSpec, build, rank, sampler

g = build(PhormaSpec.from_text((3, 4, 5), "a1>=a2"))
draws = [x for x, _ in zip(sampler(g, seed=1), range(20 * g.total))]
freq = np.bincount([rank(g, x) for x in draws], minlength=g.total)
print("members:", g.total)
print("min/mean/max hits per member:", freq.min(), freq.mean(), freq.max())

try:
    from scipy import stats

    print("chi-square p-value:", stats.chisquare(freq).pvalue)
except ImportError:
    pass
