"""From per-context counts to a certified classification.

The pipeline has three stages, each with its own report:

1. estimate: per-context relative frequencies, exact rationals since
   counts are integers;
2. test single-valuedness: every shared atom should show compatible
   frequencies across the contexts containing it, measured by pooled
   two-proportion z-statistics -- if this gate fails, the data do not
   support any single weight and classification is withheld;
3. reconstruct and classify: pool shared-atom frequencies by counts,
   project onto the context-sum-one affine subspace by exact constrained
   least squares, and classify the projected weight (again withheld if
   the projection leaves the [0, 1] box).

Counts from different contexts are typically different samples, so
cross-context disagreement can have many sources; the analysis report
carries that caveat as text rather than pretending to adjudicate it.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Sequence

import numpy as np

from ._linalg import independent_rows, solve_exact
from .bounds import RegionReport, classify_weight
from .errors import (
    EmptyContextSampleError,
    NegativeCountError,
    SchemaError,
    UnknownAtomError,
)
from .numeric import DEFAULT_TOL, numeric_to_json
from .structures import EventStructure, incidence, structure_from_json_dict
from .weights import Weight, make_weight

__all__ = [
    "CountData",
    "FrequencyEstimates",
    "SingleValuednessReport",
    "ReconstructedWeight",
    "AnalysisReport",
    "ingest_counts",
    "estimate_frequencies",
    "single_valuedness_test",
    "reconstruct_weight",
    "analyze",
    "sample_counts",
]

DEFAULT_Z_THRESHOLD = 1.96

BETWEEN_SAMPLES_NOTE = (
    "Counts for different contexts come from separate samples; agreement "
    "on shared atoms is a statistical check, not a within-trial identity."
)


# ------------------------------------------------------------------ ingest


@dataclass(frozen=True)
class CountData:
    """Validated per-context outcome counts over one structure."""

    structure: EventStructure
    counts: Mapping[str, Mapping[str, int]]
    totals: Mapping[str, int]

    def to_json_dict(self) -> dict:
        return {
            "structure": self.structure.to_json_dict(),
            "counts": {
                name: {a: self.counts[name].get(a, 0) for a in ctx}
                for name, ctx in zip(
                    self.structure.context_names, self.structure.contexts
                )
            },
        }


def _validate_counts(
    structure: EventStructure, raw: Mapping[str, Mapping[str, Any]]
) -> CountData:
    known = set(structure.context_names)
    unknown = set(raw) - known
    if unknown:
        raise SchemaError("counts for unknown contexts: " + ", ".join(sorted(unknown)))
    missing = [n for n in structure.context_names if n not in raw]
    if missing:
        raise SchemaError(
            "every context needs a count table; missing: " + ", ".join(missing)
        )
    counts: dict[str, dict[str, int]] = {}
    totals: dict[str, int] = {}
    for name, ctx in zip(structure.context_names, structure.contexts):
        table = raw[name]
        if not isinstance(table, Mapping):
            raise SchemaError(f"counts for context {name!r} must be an object")
        extra = set(table) - set(ctx)
        if extra:
            raise UnknownAtomError(
                f"context {name!r} has counts for foreign atoms: "
                + ", ".join(sorted(extra))
            )
        clean: dict[str, int] = {}
        for a in ctx:
            v = table.get(a, 0)
            if isinstance(v, bool) or not isinstance(v, int):
                raise SchemaError(f"count for {a!r} in {name!r} must be an integer")
            if v < 0:
                raise NegativeCountError(f"negative count for {a!r} in {name!r}")
            clean[a] = v
        total = sum(clean.values())
        if total < 1:
            raise EmptyContextSampleError(f"context {name!r} has no observations")
        counts[name] = clean
        totals[name] = total
    return CountData(structure, counts, totals)


def ingest_counts(
    source: Mapping | str | Path,
    structure: EventStructure | None = None,
) -> CountData:
    """Load counts from a JSON document/file or a CSV file.

    JSON: ``{"structure": {...} | "path.json", "counts": {ctx: {atom:
    n}}}``; a string structure field is a file reference resolved
    relative to the document's own location.  CSV: ``context,atom,count``
    rows (optional header), with the structure passed separately.
    """
    base = Path(".")
    doc: Mapping | None = None
    if isinstance(source, (str, Path)):
        path = Path(source)
        base = path.parent
        try:
            text = path.read_text()
        except OSError as exc:
            raise SchemaError(f"no such file: {path}") from exc
        if path.suffix.lower() == ".csv":
            return _ingest_csv(text, structure)
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON in {path}: {exc}") from exc
    elif isinstance(source, Mapping):
        doc = source
    else:
        raise SchemaError("counts source must be a mapping or a path")

    if not isinstance(doc, Mapping):
        raise SchemaError("count document must be a JSON object")
    unknown = set(doc) - {"structure", "counts"}
    if unknown:
        raise SchemaError(
            "count document has unknown fields: " + ", ".join(sorted(unknown))
        )
    if "counts" not in doc:
        raise SchemaError("count document is missing 'counts'")
    if "structure" in doc:
        ref = doc["structure"]
        if isinstance(ref, str):
            try:
                text = (base / ref).read_text()
            except OSError as exc:
                raise SchemaError(f"no such file: {base / ref}") from exc
            structure = structure_from_json_dict(json.loads(text))
        else:
            structure = structure_from_json_dict(ref)
    if structure is None:
        raise SchemaError("no structure: embed one or pass it explicitly")
    return _validate_counts(structure, doc["counts"])


def _ingest_csv(text: str, structure: EventStructure | None) -> CountData:
    if structure is None:
        raise SchemaError("CSV counts need the structure passed separately")
    raw: dict[str, dict[str, int]] = {}
    reader = csv.reader(io.StringIO(text))
    for k, row in enumerate(reader):
        if not row or (k == 0 and [c.strip().lower() for c in row] == ["context", "atom", "count"]):
            continue
        if len(row) != 3:
            raise SchemaError(f"CSV row {k + 1} must be context,atom,count")
        name, atom, count = (c.strip() for c in row)
        try:
            n = int(count)
        except ValueError as exc:
            raise SchemaError(f"CSV row {k + 1}: count {count!r} is not an integer") from exc
        table = raw.setdefault(name, {})
        if atom in table:
            raise SchemaError(f"CSV row {k + 1}: duplicate cell {name}/{atom}")
        table[atom] = n
    return _validate_counts(structure, raw)


# ---------------------------------------------------------------- estimate


@dataclass(frozen=True)
class FrequencyEstimates:
    """Exact per-context relative frequencies; shaped like a context
    distribution family but allowing zero cells."""

    structure: EventStructure
    frequencies: Mapping[str, Mapping[str, Fraction]]
    totals: Mapping[str, int]

    def to_json_dict(self) -> dict:
        return {
            "frequencies": {
                n: {a: numeric_to_json(f) for a, f in t.items()}
                for n, t in self.frequencies.items()
            },
            "totals": dict(self.totals),
        }


def estimate_frequencies(data: CountData) -> FrequencyEstimates:
    freqs = {
        name: {
            a: Fraction(data.counts[name][a], data.totals[name]) for a in ctx
        }
        for name, ctx in zip(data.structure.context_names, data.structure.contexts)
    }
    return FrequencyEstimates(data.structure, freqs, dict(data.totals))


# ------------------------------------------------------- single-valuedness


@dataclass(frozen=True)
class PairStatistic:
    """One shared atom compared across one pair of contexts."""

    atom: str
    context_a: str
    context_b: str
    freq_a: Fraction
    freq_b: Fraction
    gap: Fraction
    z: float | None
    degenerate: bool  # pooled frequency 0 or 1 with a nonzero gap

    def to_json_dict(self) -> dict:
        return {
            "atom": self.atom,
            "contexts": [self.context_a, self.context_b],
            "freq_a": numeric_to_json(self.freq_a),
            "freq_b": numeric_to_json(self.freq_b),
            "gap": numeric_to_json(self.gap),
            "z": None if self.z is None else numeric_to_json(self.z),
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class SingleValuednessReport:
    """Pooled two-proportion z statistics for every shared atom and
    every pair of contexts containing it."""

    threshold: float
    entries: tuple[PairStatistic, ...]
    max_abs_z: float
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "threshold": numeric_to_json(self.threshold),
            "entries": [e.to_json_dict() for e in self.entries],
            "max_abs_z": numeric_to_json(self.max_abs_z),
            "passed": self.passed,
        }


def single_valuedness_test(
    data: CountData, z_threshold: float = DEFAULT_Z_THRESHOLD
) -> SingleValuednessReport:
    """Compare each shared atom's frequency across context pairs.

    For contexts C and C' with totals N and N' and successes k and k',
    the statistic is (f - f') / sqrt(pbar (1 - pbar) (1/N + 1/N')) with
    pbar = (k + k')/(N + N').  A pooled frequency of exactly 0 or 1
    makes the denominator vanish: a zero gap then counts as agreement,
    a nonzero gap is flagged degenerate and fails the gate.
    """
    est = estimate_frequencies(data)
    inc = incidence(data.structure)
    entries: list[PairStatistic] = []
    max_abs = 0.0
    passed = True
    for atom in data.structure.atoms:
        holders = inc.contexts_of[atom]
        if len(holders) < 2:
            continue
        for i in range(len(holders)):
            for j in range(i + 1, len(holders)):
                ca, cb = holders[i], holders[j]
                na, nb = data.totals[ca], data.totals[cb]
                ka, kb = data.counts[ca][atom], data.counts[cb][atom]
                fa, fb = est.frequencies[ca][atom], est.frequencies[cb][atom]
                gap = abs(fa - fb)
                pooled = Fraction(ka + kb, na + nb)
                if pooled in (0, 1):
                    degenerate = gap != 0
                    z = None if degenerate else 0.0
                else:
                    denom = math.sqrt(
                        float(pooled) * (1.0 - float(pooled)) * (1.0 / na + 1.0 / nb)
                    )
                    z = float(fa - fb) / denom
                    degenerate = False
                entries.append(
                    PairStatistic(atom, ca, cb, fa, fb, gap, z, degenerate)
                )
                if degenerate:
                    passed = False
                    max_abs = math.inf
                elif z is not None:
                    max_abs = max(max_abs, abs(z))
    passed = passed and max_abs <= z_threshold
    return SingleValuednessReport(float(z_threshold), tuple(entries), max_abs, passed)


# ------------------------------------------------------------- reconstruct


@dataclass(frozen=True)
class ReconstructedWeight:
    """Count-pooled estimate and its projection onto the context-sum-one
    subspace, all exact.

    ``p_hat`` pools each atom's counts over the contexts containing it;
    its context sums generally miss 1, recorded in ``residuals``.
    ``p_star`` is the Euclidean projection, computed from the symmetric
    indefinite KKT system of the equality-constrained least-squares
    problem; redundant context constraints are dropped by exact rank
    reduction first.  ``box_violations`` lists atoms where the
    projection leaves [0, 1], in which case classification downstream is
    withheld.
    """

    p_hat: Weight
    p_star: Weight
    residuals: Mapping[str, Fraction]
    multipliers: Mapping[str, Fraction]
    box_violations: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "p_hat": self.p_hat.to_json_dict(),
            "p_star": self.p_star.to_json_dict(),
            "residuals": {n: numeric_to_json(r) for n, r in self.residuals.items()},
            "multipliers": {n: numeric_to_json(m) for n, m in self.multipliers.items()},
            "box_violations": list(self.box_violations),
        }


def reconstruct_weight(data: CountData) -> ReconstructedWeight:
    structure = data.structure
    atoms = structure.atoms
    index = structure.atom_index

    pooled: dict[str, Fraction] = {}
    for a in atoms:
        num = 0
        den = 0
        for name in incidence(structure).contexts_of[a]:
            num += data.counts[name][a]
            den += data.totals[name]
        pooled[a] = Fraction(num, den)

    rows = []
    rhs = []
    for ctx in structure.contexts:
        row = [Fraction(0)] * len(atoms)
        for a in ctx:
            row[index[a]] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))
    residuals = {
        name: Fraction(1) - sum(pooled[a] for a in ctx)
        for name, ctx in zip(structure.context_names, structure.contexts)
    }

    kept = independent_rows(rows, rhs)
    m = len(kept)
    n = len(atoms)
    size = n + m
    kkt = [[Fraction(0)] * size for _ in range(size)]
    vec = [Fraction(0)] * size
    for i in range(n):
        kkt[i][i] = Fraction(1)
        vec[i] = pooled[atoms[i]]
    for r, row_idx in enumerate(kept):
        row = rows[row_idx]
        for i in range(n):
            kkt[i][n + r] = row[i]
            kkt[n + r][i] = row[i]
        vec[n + r] = rhs[row_idx]
    solution = solve_exact(kkt, vec)

    star = {a: solution[i] for i, a in enumerate(atoms)}
    multipliers = {
        structure.context_names[row_idx]: solution[n + r]
        for r, row_idx in enumerate(kept)
    }
    violations = tuple(a for a in atoms if not 0 <= star[a] <= 1)
    return ReconstructedWeight(
        make_weight(structure, pooled),
        make_weight(structure, star),
        residuals,
        multipliers,
        violations,
    )


# ----------------------------------------------------------------- analyze


@dataclass(frozen=True)
class AnalysisReport:
    """The full pipeline output: estimates, gate, reconstruction, and
    (when the gates pass) the classification with its certificates."""

    frequencies: FrequencyEstimates
    single_valuedness: SingleValuednessReport
    reconstruction: ReconstructedWeight
    classification: RegionReport | None
    withheld_reason: str | None
    note: str = BETWEEN_SAMPLES_NOTE

    def to_json_dict(self) -> dict:
        return {
            "frequencies": self.frequencies.to_json_dict(),
            "single_valuedness": self.single_valuedness.to_json_dict(),
            "reconstruction": self.reconstruction.to_json_dict(),
            "classification": (
                None if self.classification is None else self.classification.to_json_dict()
            ),
            "withheld_reason": self.withheld_reason,
            "note": self.note,
        }


def analyze(
    data: CountData,
    z_threshold: float = DEFAULT_Z_THRESHOLD,
    tol: float = DEFAULT_TOL,
) -> AnalysisReport:
    """Run estimate -> single-valuedness gate -> reconstruct -> classify.

    Classification is withheld (with the reason recorded) when the
    single-valuedness gate fails or when the projected weight leaves the
    [0, 1] box; both conditions mean the counts do not determine an
    admissible weight to classify.
    """
    freqs = estimate_frequencies(data)
    sv = single_valuedness_test(data, z_threshold)
    recon = reconstruct_weight(data)

    classification: RegionReport | None = None
    reason: str | None = None
    if not sv.passed:
        reason = (
            "single-valuedness gate failed: max |z| = "
            f"{'inf' if math.isinf(sv.max_abs_z) else f'{sv.max_abs_z:.6g}'}"
            f" exceeds {z_threshold:g}"
        )
    elif recon.box_violations:
        reason = "projected weight leaves [0, 1] on: " + ", ".join(
            recon.box_violations
        )
    else:
        classification = classify_weight(data.structure, recon.p_star, tol)
    return AnalysisReport(freqs, sv, recon, classification, reason)


# ---------------------------------------------------------------- sampling


def sample_counts(
    structure: EventStructure,
    weight: Weight,
    n_per_context: int | Mapping[str, int],
    seed: int,
) -> CountData:
    """Draw multinomial counts per context from a weight, seeded.

    A convenience for demos and tests; contexts are sampled in structure
    order from one seeded generator, so the result is a pure function of
    (structure, weight, sizes, seed).
    """
    rng = np.random.default_rng(seed)
    raw: dict[str, dict[str, int]] = {}
    for name, ctx in zip(structure.context_names, structure.contexts):
        n = n_per_context if isinstance(n_per_context, int) else n_per_context[name]
        probs = np.array([float(weight[a]) for a in ctx], dtype=float)
        probs = probs / probs.sum()
        draw = rng.multinomial(n, probs)
        raw[name] = {a: int(k) for a, k in zip(ctx, draw)}
    return _validate_counts(structure, raw)
