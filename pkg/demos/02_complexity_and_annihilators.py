"""Pattern complexity counts and Laurent polynomial annihilators.

A coloring viewed as a formal power series is annihilated by
x^a y^b - 1 exactly when (a, b) is one of its period vectors, and
doubly periodic colorings are annihilated by the product of their two
period difference polynomials.  Low pattern complexity guarantees a
nontrivial annihilator exists; the search below finds one by exact
integer elimination.
"""

from tilecraft import (DiscreteDomain, PeriodicConfig, Vec2, WindowConfig,
                       annihilator_search, apply, difference_poly,
                       is_low_complexity, periodic_annihilator)

checkerboard = PeriodicConfig.from_periods(Vec2(1, 1), Vec2(2, 0),
                                           lambda x, y: (x + y) % 2)
window = DiscreteDomain.rect(12, 12)

rep = is_low_complexity(checkerboard, DiscreteDomain.rect(2, 2), window)
print(f"checkerboard 2x2 patterns: {rep.count} <= {rep.bound} "
      f"-> low complexity: {rep.low}")

cert = periodic_annihilator(checkerboard)
print(f"periodic annihilator: {cert.poly}")
values = apply(cert.poly, checkerboard, window)
print(f"verified zero on {len(values)} cells:",
      all(v == 0 for v in values.values()))
print()

# searching for an annihilator from a finite window alone
rows = [[(i + j) % 2 for i in range(6)] for j in range(6)]
sample = WindowConfig.from_rows(rows)
support = DiscreteDomain.rect(2, 2)
equations = DiscreteDomain.rect(4, 4, Vec2(1, 1))
found = annihilator_search(sample, equations, support)
print(f"search over 2x2 supports on a 6x6 checkerboard window: {found.poly}")

# the difference polynomial of a period annihilates, a non-period does not
stripes = PeriodicConfig.from_periods(Vec2(2, 0), Vec2(0, 1),
                                      lambda x, y: x % 2)
for v in (Vec2(2, 0), Vec2(1, 0), Vec2(0, 1)):
    out = apply(difference_poly(v), stripes, window)
    print(f"(x^{v.x} y^{v.y} - 1) on vertical stripes: "
          f"{'annihilates' if all(c == 0 for c in out.values()) else 'does not'}")
