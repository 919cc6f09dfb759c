"""
Every virtual link has a nonzero coloring by Z
==============================================

The braid matrices of the abelian Wada representation have column sums
one, so 1 is an eigenvalue and some nonzero integer vector is fixed.
Pushing it down the braid colors the closure.
"""

import random
import sys

from wadabiq.diagram import build_diagram, close_braid, random_braid_word
from wadabiq.coloring import is_cyclic_coloring
from wadabiq.wadagroup import braid_matrix, braid_vector_coloring, nonzero_integer_coloring

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 7
rng = random.Random(seed)

for _ in range(8):
    w = random_braid_word(rng)
    v = nonzero_integer_coloring(w)
    colors = braid_vector_coloring(w, v)
    d = build_diagram(close_braid(w))
    print(f"{str(w):<40} M={braid_matrix(w)} v={v} valid={is_cyclic_coloring(d, colors)}")
