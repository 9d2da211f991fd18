"""Pattern shapes need not be rectangles: any convex cell set works.

All operations accept arbitrary finite convex domains as the pattern
shape - extraction, complexity counts, the decision procedure, and the
balanced-set machinery.
"""

from tilecraft import (Alphabet, DiscreteDomain, NonEmptyPeriodic,
                       PeriodicConfig, Vec2, edge, is_balanced, is_convex,
                       patterns_of)
from tilecraft.serialize import render_rows
from tilecraft.sft import PatternSet, decide, validate_witness

triangle = DiscreteDomain([(0, 0), (1, 0), (0, 1)])
print("shape cells:", [tuple(c) for c in triangle], "convex:",
      is_convex(triangle))

checkerboard = PeriodicConfig.from_block([[0, 1], [1, 0]])
window = DiscreteDomain.rect(8, 8)
pats = patterns_of(checkerboard, triangle, window)
print(f"triangle patterns of the checkerboard: {len(pats)} "
      f"(values {[p.values for p in pats]})")

alphabet = Alphabet.of([0, 1])
ps = PatternSet(triangle, alphabet, frozenset(pats))
print("low complexity:", ps.low_complexity)
out = decide(ps, budget=100_000)
assert isinstance(out, NonEmptyPeriodic)
w = out.witness
print(f"decision: non-empty, {w.p}x{w.q} witness "
      f"(independently valid: {validate_witness(ps, w)})")
print(render_rows(w.values, alphabet))
print()

rep = is_balanced(checkerboard, triangle, Vec2(1, 1), window)
print("triangle balanced toward (1,1) in the checkerboard:",
      f"counts {rep.counts}, edge {[tuple(c) for c in edge(triangle, Vec2(1, 1))]},",
      f"balanced: {rep.balanced}")
