"""
Telling Kishino's knot from the unknot
======================================

Kishino's knot is a virtual knot that many classical tools cannot
separate from the trivial knot.  Its type W2 Wada group can.
"""

from wadabiq import corpus
from wadabiq.algebra import battery, semidirect_cyclic
from wadabiq.biquandle import from_wada
from wadabiq.coloring import count_colorings
from wadabiq.wadagroup import hom_count, presentation, simplify

kishino = corpus.load("kishino")
unknot = corpus.load("unknot")

# one generator per edge, two relators per classical crossing
p = presentation(kishino, "W2")
print("raw W2 presentation:", p)
print("after elimination:  ", simplify(p))

# Z_5 extended by Z_4, the generator acting by doubling
F20 = semidirect_cyclic(5, 4, 2)
print("homs into F20: kishino", hom_count(p, F20),
      "unknot", hom_count(presentation(unknot, "W2"), F20))

# the same number, counted on the diagram side as colorings
print("colorings by W2(F20):", count_colorings(kishino, from_wada("W2", F20)))

# W1 and the core group look infinite cyclic on every test group
for kind in ("W1", "Core"):
    q = presentation(kishino, kind)
    print(kind, [hom_count(q, G) for G in battery()], "vs orders",
          [G.order for G in battery()])
