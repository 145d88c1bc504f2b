"""Per-context softmax families: when do they define one weight?

A link function g turns scores u into per-context distributions
P_C(a) = g(u_C(a)) / sum_C g.  The distributions glue into a single
admissible weight exactly when shared atoms receive equal probability
in all their contexts.  Global scores do not guarantee that (the
normalizers differ context to context), but every strictly positive
admissible weight arises from global scores via represent_weight, for
any link.
"""

import numpy as np

import pastedlogic as pl
from pastedlogic import ExponentialLink, IdentityLink, PerContextScores, PowerLink

pentagon = pl.cycle_logic(5)

# a family that does NOT glue: scores chosen per context
values = {
    "C1": {"a1": 0.0, "a2": 0.0, "x1": 0.0},
    "C2": {"a2": 1.0, "a3": 0.0, "x2": 0.0},
    "C3": {"a3": 0.0, "a4": 0.0, "x3": 1.0},
    "C4": {"a4": 0.0, "a5": 0.0, "x4": 1.0},
    "C5": {"a5": 0.0, "a1": 0.0, "x5": 1.0},
}
family = pl.context_softmax(pentagon, PerContextScores(values), ExponentialLink(1.0))
report = pl.gluing_check(family)
print("patterned family glued:", report.glued)
for atom, gap in report.atom_discrepancies.items():
    if gap:
        print(f"  {atom}: contexts disagree by {float(gap):.10f}")
print("  (a2 gets e/(e+2) in C2 but 1/3 in C1)")

# representation: start from a weight, recover global scores, go back
rng = np.random.default_rng(2)
states = pl.enumerate_two_valued_states(pentagon)
weight = pl.path_weight(pentagon, 0.35)
for link in (ExponentialLink(1.0), IdentityLink(), PowerLink(2.0)):
    scores = pl.represent_weight(pentagon, weight, link)
    back = pl.glue_to_weight(pl.context_softmax(pentagon, scores, link))
    err = max(abs(float(back[a]) - float(weight[a])) for a in pentagon.atoms)
    print(f"round trip through {link.to_json_dict()['kind']:<11} max error {err:.2e}")

# gauge freedom: a constant score shift leaves every probability alone
scores = pl.GlobalScores(
    {a: float(v) for a, v in zip(pentagon.atoms, rng.normal(size=10))}
)
link = ExponentialLink(1.0)
before = pl.context_softmax(pentagon, scores, link)
shifted = pl.gauge_shift(pentagon, scores, 3.7, frozenset(pentagon.atoms), link)
after = pl.context_softmax(pentagon, shifted, link)
drift = max(
    abs(after.probabilities[n][a] - before.probabilities[n][a])
    for n in pentagon.context_names
    for a in pentagon.context_atoms(n)
)
print(f"\ngauge shift by +3.7: max probability drift {drift:.2e}")

# the exponential link is the multiplicative one
pairs = [tuple(rng.normal(size=2)) for _ in range(100)]
print("exponential multiplicative:",
      pl.check_multiplicative_link(ExponentialLink(0.9), pairs).multiplicative)
print("identity multiplicative:   ",
      pl.check_multiplicative_link(IdentityLink(), [(1.0, 1.0)]).multiplicative)

# maximum entropy: scores {0, 1} with mean 2/3 forces beta = ln 2
beta, dist = pl.maxent_softmax({"lo": 0.0, "hi": 1.0}, 2.0 / 3.0)
print(f"\nmaxent beta = {beta:.12f}  (ln 2 = {np.log(2):.12f})")
print("distribution:", {k: round(v, 6) for k, v in dist.items()})
