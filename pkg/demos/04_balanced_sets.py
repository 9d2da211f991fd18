"""Balanced-set geometry: edges, convexity, fits and the three conditions.

A convex cell set is balanced for a direction when the coloring is low
complexity on it, removing its directional edge loses almost nothing,
and no perpendicular cut is much shorter than that edge.  Balanced
sets drive the periodicity argument; the bounded search below looks
for one in canonical order.
"""

from tilecraft import (DiscreteDomain, PeriodicConfig, Stripe, Vec2,
                       WindowConfig, balanced_search, edge, fits, is_balanced,
                       is_convex, stripe_scenario_check)

triangle = DiscreteDomain([(0, 0), (1, 0), (0, 1)])
print("triangle convex:", is_convex(triangle))
print("gap {(0,0),(2,0)} convex:", is_convex(DiscreteDomain([(0, 0), (2, 0)])))
print("edge of the triangle toward (1,1):",
      [tuple(c) for c in edge(triangle, Vec2(1, 1))])
print()

window = DiscreteDomain.rect(10, 10)
checkerboard = PeriodicConfig.from_block([[0, 1], [1, 0]])
report = is_balanced(checkerboard, DiscreteDomain.rect(2, 2), Vec2(0, 1),
                     window)
print("checkerboard 2x2 toward (0,1):",
      f"patterns={report.pattern_count}, inner={report.inner_pattern_count},",
      f"edge={report.edge_size} -> balanced: {report.balanced}")

result = balanced_search(checkerboard, 2, 2, Vec2(1, 0), window)
print("first balanced set found:", [tuple(c) for c in result.domain],
      "oriented", tuple(result.orientation))
print()

# stripe scenario: two colorings equal on a band's interior but not on
# its edge line corroborate periodicity perpendicular to the band
rows_d = [[x % 2 for x in range(-4, 4)] for _ in range(6)]
rows_e = [list(r) for r in rows_d]
for r in rows_e:
    r[4] ^= 1  # disturb the stripe's edge column x = 0
d = WindowConfig.from_rows(rows_d, Vec2(-4, 0))
e = WindowConfig.from_rows(rows_e, Vec2(-4, 0))
win = DiscreteDomain.rect(8, 6, Vec2(-4, 0))
rep = stripe_scenario_check(d, e, DiscreteDomain.rect(2, 2), Vec2(1, 0), 3,
                            win, period_bound=2)
print("stripe hypotheses hold:", rep.hypotheses_hold)
print("periods perpendicular to (1,0):",
      [tuple(p) for p in rep.perpendicular_periods])
print("band placement found by fits:", tuple(rep.fit_at))
print("a 2x2 square also fits directly in the width-3 band:",
      tuple(fits(DiscreteDomain.rect(2, 2), Stripe(Vec2(1, 0), 3), win)))
