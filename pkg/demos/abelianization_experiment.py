"""
Free rank of abelianized Wada groups of knots
=============================================

For a knot, every Wada group we have looked at abelianizes to Z plus
torsion.  This script tests that on random knot closures and prints
any exception it meets.  Usage: python abelianization_experiment.py [seed] [count]
"""

import random
import sys
from collections import Counter

from wadabiq.diagram import build_diagram, close_braid, random_braid_word
from wadabiq.wadagroup import abelianization, presentation

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 20240517
count = int(sys.argv[2]) if len(sys.argv) > 2 else 200
rng = random.Random(seed)

ranks = Counter()
torsion = Counter()
for _ in range(count):
    w = random_braid_word(rng, knot=True)
    d = build_diagram(close_braid(w))
    for kind in ("W1", "W2", "Core"):
        s = abelianization(presentation(d, kind))
        ranks[s.free_rank] += 1
        torsion[tuple(s.torsion)] += 1
        if s.free_rank != 1:
            print("exception:", w, kind, s.describe())

print("free ranks seen:", dict(ranks))
print("most common torsion:", torsion.most_common(5))
