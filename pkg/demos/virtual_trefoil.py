"""
Virtual torus knots VT(2,k) are not checkerboard colorable
==========================================================

A mod-2 Alexander numbering forces every coloring by an odd abelian
Wada biquandle to have zero additive-cocycle weight.  The closures of
(s1)^k v1 have colorings of nonzero weight, so no diagram of them is
checkerboard colorable.
"""

from wadabiq import corpus
from wadabiq.biquandle import abelian_wada
from wadabiq.cocycle import additive_cocycle, state_sum
from wadabiq.diagram import parse_braid
from wadabiq.numbering import integer_weight, min_span, mod2_numbering
from wadabiq.wadagroup import braid_vector_coloring

for k in range(1, 6):
    name = f"vt2_{k}"
    d = corpus.load(name)
    sums = {n: str(state_sum(d, abelian_wada(n), additive_cocycle(n))) for n in (3, 5, 7)}
    # top colors (k+1, 1-k) close up over the integers
    c = braid_vector_coloring(parse_braid(corpus.entry(name).text), [k + 1, 1 - k])
    print(f"{name}: numbering {mod2_numbering(d)}, weight of Z witness {integer_weight(d, c)}")
    for n, s in sums.items():
        print(f"    Z_{n}: {s}")
    print("    least span on this diagram:", min_span(d).span)

# a classical knot for comparison: every weight is zero
trefoil = corpus.load("trefoil")
print("trefoil over Z_3:", state_sum(trefoil, abelian_wada(3), additive_cocycle(3)))
