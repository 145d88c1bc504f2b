"""Classical and theta bounds on odd cycles, and the path family sweep.

For the n-cycle the classical bound on the cyclic sum is (n-1)/2 and
the theta bound is n cos(pi/n) / (1 + cos(pi/n)); for n = 5 the latter
is sqrt(5).  The one-parameter path family p(a) = 1/(2+r),
p(x) = r/(2+r) crosses the theta bound at r = n/theta - 2 and the
classical bound at r = n/bound - 2, so sweeping r locates both
thresholds empirically.
"""

import math
from fractions import Fraction

import pastedlogic as pl

print(f"{'n':>3} {'classical':>10} {'theta':>10} {'n/2':>6}")
for n in (3, 5, 7, 9, 11):
    b = pl.cycle_bounds(n)
    theta = f"{b.theta:.6f}" if b.theta_applicable else "-"
    print(f"{n:>3} {str(b.classical_bound):>10} {theta:>10} {n/2:>6}")

print("\npentagon thresholds along the path family:")
r_classical, r_theta = pl.path_thresholds(5)
print(f"  classical at r = {r_classical} = {float(r_classical)}")
print(f"  theta     at r = sqrt(5) - 2 = {r_theta:.12f}")

# sweep r over (0,1) and watch the two flags flip
pentagon = pl.cycle_logic(5)
bounds = pl.cycle_bounds(5)
points = 1000
last = None
for i in range(1, points + 1):
    r = Fraction(i, points + 1)
    s = pl.cyclic_sum(pentagon, pl.path_weight(pentagon, r))
    flags = (s > bounds.classical_bound, float(s) > bounds.theta)
    if flags != last:
        regime = ("classical", "exotic, within theta", "beyond theta")[sum(flags)]
        print(f"  from r = {r}: sum = {float(s):.6f}  ->  {regime}")
        last = flags

# the three named members of the family
for r, name in ((Fraction(10**6), "midpoint (large r proxy)"),
                (Fraction(1), "uniform"),
                (Fraction(0), "half-weight")):
    w = pl.path_weight(pentagon, r)
    rep = pl.classify_weight(pentagon, w)
    print(f"{name:<26} label = {rep.label}")

# even cycles never cross: the square's cyclic sum peaks at the bound
square = pl.cycle_logic(4)
s0 = pl.cyclic_sum(square, pl.path_weight(square, Fraction(0)))
print(f"\nsquare: sum at r=0 is {s0} = bound {pl.cycle_bounds(4).classical_bound}; "
      "no admissible weight exceeds it")
