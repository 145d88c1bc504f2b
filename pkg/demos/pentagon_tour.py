"""A tour of the pentagon cycle logic.

Five contexts C_i = {a_i, a_{i+1}, x_i} pasted along the shared cyclic
atoms a_i.  The half-weight (1/2 on every a_i, 0 on every x_i) is
admissible but lies outside the convex hull of the eleven two-valued
states, and the exact membership test produces a separating functional
one can check by hand.
"""

from fractions import Fraction

import pastedlogic as pl

pentagon = pl.cycle_logic(5)
print("atoms:   ", " ".join(pentagon.atoms))
for name, ctx in zip(pentagon.context_names, pentagon.contexts):
    print(f"context {name}: {{{', '.join(ctx)}}}")

# admissibility of the half-weight, checked exactly
half = pl.half_weight(pentagon)
report = pl.check_admissible(half)
print("\nhalf-weight admissible:", report.admissible)
print("context sums:", {k: str(v) for k, v in report.context_sums.items()})

s = pl.cyclic_sum(pentagon, half)
bounds = pl.cycle_bounds(5)
print(f"cyclic sum {s} vs classical bound {bounds.classical_bound} "
      f"and theta {bounds.theta:.6f}")

# all two-valued states: 11 for the pentagon (a Lucas number)
states = pl.enumerate_two_valued_states(pentagon)
print(f"\n{len(states)} two-valued states; 1-sets:")
for st in states:
    print("  ", sorted(st.ones))

# exact membership: the half-weight is not a mixture of these states
result = pl.classical_membership(pentagon, half)
print("\nhalf-weight classical:", result.classical)
print("witness c:", {a: str(c) for a, c in result.witness.items() if c})
print("max over states of c.v =", result.witness_bound)
print("c.p =", result.witness_value, "(strictly above, so p is exotic)")

# by contrast, the uniform path weight r=1 is classical
uniform = pl.path_weight(pentagon, Fraction(1))
result = pl.classical_membership(pentagon, uniform)
print("\nuniform weight classical:", result.classical)
print("decomposition:")
for i, coeff in sorted(result.coefficients.items()):
    print(f"  {str(coeff):>6}  *  {sorted(result.states[i].ones)}")

# the square is the even-cycle control: its half-weight is classical
square = pl.cycle_logic(4)
result = pl.classical_membership(square, pl.half_weight(square))
print("\nsquare half-weight classical:", result.classical)
for i, coeff in sorted(result.coefficients.items()):
    print(f"  {str(coeff):>6}  *  {sorted(result.states[i].ones)}")
