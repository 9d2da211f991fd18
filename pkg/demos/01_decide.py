"""Decide emptiness vs periodicity for small pattern sets.

Each pattern set allows some 2x2 blocks over {0,1}.  The decision
procedure interleaves growing square searches (exhausting one square
size certifies emptiness) with torus searches (a valid wraparound
coloring certifies a periodic configuration).
"""

from tilecraft import Alphabet, DiscreteDomain, Empty, NonEmptyPeriodic
from tilecraft.serialize import render_rows
from tilecraft.sft import PatternSet, decide

alphabet = Alphabet.of([0, 1])
square = DiscreteDomain.rect(2, 2)


def show(name, tuples):
    ps = PatternSet.from_value_tuples(alphabet, square, tuples)
    out = decide(ps, budget=100_000)
    print(f"--- {name} ({len(ps.allowed)} allowed blocks, "
          f"low_complexity={ps.low_complexity})")
    if isinstance(out, NonEmptyPeriodic):
        w = out.witness
        print(f"non-empty: {w.p}x{w.q} torus witness")
        print(render_rows(w.values, alphabet))
    elif isinstance(out, Empty):
        print(f"empty: no valid {out.n}x{out.n} square exists")
    else:
        print(f"undecided within budget: {out}")
    print()


# the two checkerboard phases tile the plane with period 2
show("checkerboard", [(0, 1, 1, 0), (1, 0, 0, 1)])

# a single block whose left column is 0 and right column is 1 cannot
# tile: overlapping copies disagree already on a 3x3 square
show("left-0 / right-1", [(0, 1, 0, 1)])

# diagonal stripes: three blocks suffice for a period-3 tiling
show("diagonal stripes", [(0, 1, 1, 0), (1, 0, 0, 0), (0, 0, 0, 1)])

# the full shift is unconstrained; the 1x1 torus fires immediately
show("full shift", [(a, b, c, d) for a in (0, 1) for b in (0, 1)
                    for c in (0, 1) for d in (0, 1)])
