"""From raw counts to a gated classification.

Each context is sampled separately, so the pipeline first checks that
shared atoms show statistically compatible frequencies (pooled
two-proportion z); only then does it pool, project onto the
context-sum-one subspace, and classify.  Three runs: a weight beyond
the theta bound, a classical two-state mixture, and deliberately
inconsistent counts that the gate must withhold.
"""

from fractions import Fraction

import pastedlogic as pl

pentagon = pl.cycle_logic(5)


def show(title, report):
    print(f"\n--- {title}")
    sv = report.single_valuedness
    print(f"gate: max |z| = {sv.max_abs_z:.4f} vs {sv.threshold}  ->  "
          f"{'pass' if sv.passed else 'FAIL'}")
    if report.classification is None:
        print("classification withheld:", report.withheld_reason)
    else:
        rep = report.classification
        print(f"projected cyclic sum {float(rep.cyclic_sum):.6f}; "
              f"label = {rep.label}")


# 1) deep in the beyond-theta region: path weight r = 1/10
w = pl.path_weight(pentagon, Fraction(1, 10))
data = pl.sample_counts(pentagon, w, 100000, seed=20240817)
show("path weight r = 1/10, N = 100000 per context", pl.analyze(data, z_threshold=4.0))

# 2) an even mixture of two two-valued states: classical
mix = pl.make_weight(pentagon, {
    "a1": Fraction(1, 2), "a2": 0, "a3": Fraction(1, 2), "a4": Fraction(1, 2),
    "a5": 0, "x1": Fraction(1, 2), "x2": Fraction(1, 2), "x3": 0,
    "x4": Fraction(1, 2), "x5": Fraction(1, 2),
})
sizes = {"C1": 10000, "C2": 200000, "C3": 100000, "C4": 10000, "C5": 200000}
data = pl.sample_counts(pentagon, mix, sizes, seed=15)
show("two-state mixture, unequal context sizes", pl.analyze(data, z_threshold=4.0))

# 3) counts that no single weight explains: the gate withholds
fork = pl.build_event_structure(
    ["a", "b", "c"], [["a", "b"], ["a", "c"]], context_names=["L", "R"]
)
data = pl.ingest_counts({
    "structure": fork.to_json_dict(),
    "counts": {"L": {"a": 60, "b": 40}, "R": {"a": 40, "c": 60}},
})
show("fork with 60/100 vs 40/100 on the shared atom", pl.analyze(data))

est = pl.estimate_frequencies(data)
print("\nshared-atom frequencies behind that failure:",
      {n: str(est.frequencies[n]["a"]) for n in ("L", "R")})
print("note:", pl.analyze(data).note)
