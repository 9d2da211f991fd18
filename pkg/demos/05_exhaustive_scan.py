"""Scan every binary 2x2 pattern set with at most four allowed blocks.

In the low-complexity regime (at most one allowed pattern per shape
cell) a nonempty system always admits a periodic coloring, so the
dovetailed decision procedure terminates on every instance.  The scan
below decides all 2,517 such sets and tabulates certificate sizes.
"""

import itertools
from collections import Counter

import numpy as np

from tilecraft import Alphabet, DiscreteDomain, Empty, NonEmptyPeriodic
from tilecraft.sft import PatternSet, decide

alphabet = Alphabet.of([0, 1])
square = DiscreteDomain.rect(2, 2)
blocks = list(itertools.product((0, 1), repeat=4))

outcomes = Counter()
empty_sides = Counter()
witness_sizes = Counter()
for size in range(0, 5):
    for combo in itertools.combinations(blocks, size):
        ps = PatternSet.from_value_tuples(alphabet, square, combo)
        out = decide(ps, budget=20_000)
        if isinstance(out, Empty):
            outcomes["empty"] += 1
            empty_sides[out.n] += 1
        elif isinstance(out, NonEmptyPeriodic):
            outcomes["periodic"] += 1
            witness_sizes[max(out.witness.p, out.witness.q)] += 1
        else:
            outcomes["undecided"] += 1

total = sum(outcomes.values())
print(f"{total} pattern sets decided: {dict(outcomes)}")
print("emptiness certificate sides:", dict(sorted(empty_sides.items())))
print("witness sizes max(p,q):     ", dict(sorted(witness_sizes.items())))

share = np.array([outcomes["empty"], outcomes["periodic"]]) / total
print(f"empty share {share[0]:.1%}, periodic share {share[1]:.1%}")
