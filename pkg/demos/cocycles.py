"""
Yang-Baxter cocycles of the abelian Wada biquandle
==================================================

Two 2-cocycles on Z_p: f(x, y) = x + y, and a Mochizuki-style
polynomial cocycle.  Neither is a coboundary, and they are independent.
"""

import numpy as np

from wadabiq.biquandle import abelian_wada
from wadabiq.cocycle import (additive_cocycle, evaluate, h2_rank, independent_mod_coboundaries,
                             is_cocycle, mochizuki_cocycle)

for p in (3, 5, 7):
    X = abelian_wada(p)
    f, h = additive_cocycle(p), mochizuki_cocycle(p)
    print(f"p={p}: cocycles {is_cocycle(f, X)} {is_cocycle(h, X)}, "
          f"independent {independent_mod_coboundaries([f, h], X, p)}, "
          f"H2 rank {h2_rank(X, p)}")

# the cycle (1,0) detects f; the cycle (1,1) + 2(2,2) detects h for p = 3
print("f on (1,0):", evaluate(additive_cocycle(3), {(1, 0): 1}))
print("h on (1,1)+2(2,2):", evaluate(mochizuki_cocycle(3), {(1, 1): 1, (2, 2): 2}))
print(np.array(mochizuki_cocycle(3).values))
