"""Weights on event structures and the admissibility check.

A weight assigns one number to every atom.  It is admissible when every
value lies in [0, 1] and every context sums to exactly 1: the same
number serves as the probability of an atom in every context containing
it.  Admissible weights form a polytope; the distinguished points used
throughout are the half weight on a cycle (1/2 on cyclic atoms, 0 on the
rest) and the one-parameter path family p(ai) = 1/(2+r),
p(xi) = r/(2+r) that joins the midpoint limit (r -> infinity), the
uniform weight (r = 1) and the half weight (r -> 0).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from .errors import (
    MissingAtomValueError,
    NegativePathParameterError,
    SchemaError,
    UnknownAtomError,
    ValidationError,
)
from .numeric import (
    DEFAULT_TOL,
    FLOAT,
    RATIONAL,
    as_fraction,
    coerce_values,
    numeric_from_json,
    numeric_to_json,
)
from .structures import EventStructure, cycle_form

__all__ = [
    "Weight",
    "AdmissibilityReport",
    "make_weight",
    "weight_from_json_dict",
    "weight_from_json",
    "to_rational",
    "to_float",
    "check_admissible",
    "half_weight",
    "path_weight",
    "cyclic_sum",
    "support",
]

Numeric = Fraction | float


@dataclass(frozen=True)
class Weight:
    """An atom -> value map over one structure, homogeneous in mode."""

    structure: EventStructure
    values: Mapping[str, Numeric]
    mode: str

    def __getitem__(self, atom: str) -> Numeric:
        try:
            return self.values[atom]
        except KeyError:
            raise UnknownAtomError(f"unknown atom {atom!r}") from None

    def items(self):
        """(atom, value) pairs in structure atom order."""
        return tuple((a, self.values[a]) for a in self.structure.atoms)

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "values": {a: numeric_to_json(v) for a, v in self.items()},
        }


def make_weight(
    structure: EventStructure,
    values: Mapping[str, Any],
    mode: str | None = None,
) -> Weight:
    """Build a Weight, checking coverage and mode homogeneity.

    Every atom of the structure must get a value and no extra names are
    allowed.  Exact values (ints, Fractions) yield rational mode, floats
    yield float mode; mixtures need an explicit ``mode``.
    """
    extra = set(values) - set(structure.atoms)
    if extra:
        raise UnknownAtomError("values given for unknown atoms: " + ", ".join(sorted(extra)))
    missing = [a for a in structure.atoms if a not in values]
    if missing:
        raise MissingAtomValueError("no value for atoms: " + ", ".join(missing))
    coerced, actual_mode = coerce_values(values, mode)
    ordered = {a: coerced[a] for a in structure.atoms}
    return Weight(structure, ordered, actual_mode)


def weight_from_json_dict(doc: Mapping, structure: EventStructure) -> Weight:
    """Parse ``{"mode": "rational"|"float", "values": {...}}``."""
    if not isinstance(doc, Mapping):
        raise SchemaError("weight must be a JSON object")
    unknown = set(doc) - {"mode", "values"}
    if unknown:
        raise SchemaError("weight has unknown fields: " + ", ".join(sorted(unknown)))
    if "values" not in doc:
        raise SchemaError("weight is missing 'values'")
    mode = doc.get("mode")
    if mode not in (None, RATIONAL, FLOAT):
        raise SchemaError(f"unknown weight mode {mode!r}")
    values = {str(a): numeric_from_json(v) for a, v in doc["values"].items()}
    if mode == FLOAT:
        values = {a: float(v) for a, v in values.items()}
    return make_weight(structure, values, mode)


def weight_from_json(text: str, structure: EventStructure) -> Weight:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return weight_from_json_dict(doc, structure)


def to_rational(weight: Weight) -> Weight:
    """Exact conversion: every finite float is a dyadic rational."""
    if weight.mode == RATIONAL:
        return weight
    return make_weight(
        weight.structure, {a: as_fraction(v) for a, v in weight.values.items()}
    )


def to_float(weight: Weight) -> Weight:
    if weight.mode == FLOAT:
        return weight
    return make_weight(
        weight.structure, {a: float(v) for a, v in weight.values.items()}, mode=FLOAT
    )


@dataclass(frozen=True)
class AdmissibilityReport:
    """Context sums and the verdict of the admissibility check.

    ``admissible`` holds exactly when ``max_deviation <= tolerance`` and
    every value sits in ``[-tolerance, 1 + tolerance]``; in rational mode
    the tolerance is 0 and all comparisons are exact.
    """

    mode: str
    tolerance: Numeric
    context_sums: Mapping[str, Numeric]
    max_deviation: Numeric
    values_in_box: bool
    admissible: bool

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "tolerance": numeric_to_json(self.tolerance),
            "context_sums": {n: numeric_to_json(s) for n, s in self.context_sums.items()},
            "max_deviation": numeric_to_json(self.max_deviation),
            "values_in_box": self.values_in_box,
            "admissible": self.admissible,
        }


def check_admissible(weight: Weight, tol: float = DEFAULT_TOL) -> AdmissibilityReport:
    """Check box constraints and per-context normalisation.

    Float mode compares against ``tol``; rational mode ignores ``tol``
    and demands exact equality.
    """
    structure = weight.structure
    exact = weight.mode == RATIONAL
    tolerance: Numeric = Fraction(0) if exact else float(tol)
    sums: dict[str, Numeric] = {}
    zero: Numeric = Fraction(0) if exact else 0.0
    max_dev: Numeric = zero
    for name, ctx in zip(structure.context_names, structure.contexts):
        s = sum((weight[a] for a in ctx), zero)
        sums[name] = s
        dev = abs(s - 1)
        if dev > max_dev:
            max_dev = dev
    in_box = all(
        -tolerance <= v <= 1 + tolerance for v in weight.values.values()
    )
    verdict = bool(in_box and max_dev <= tolerance)
    return AdmissibilityReport(weight.mode, tolerance, sums, max_dev, in_box, verdict)


def half_weight(structure: EventStructure) -> Weight:
    """1/2 on the cyclic atoms, 0 elsewhere; admissible on every cycle
    since each context holds two cyclic atoms and one extra atom."""
    form = cycle_form(structure)
    values: dict[str, Fraction] = {a: Fraction(1, 2) for a in form.cyclic_atoms}
    values.update({x: Fraction(0) for x in form.extra_atoms})
    return make_weight(structure, values)


def path_weight(structure: EventStructure, r: Any) -> Weight:
    """The path family p(ai) = 1/(2+r), p(xi) = r/(2+r), r >= 0.

    Exact input (int or Fraction) gives a rational-mode weight; float
    input gives float mode.  r = 0 is the half weight, r = 1 the uniform
    weight, and r -> infinity approaches the midpoint weight (0 on cyclic
    atoms, 1 on the extras).
    """
    form = cycle_form(structure)
    if isinstance(r, bool) or not isinstance(r, (int, float, Fraction)):
        raise ValidationError(f"path parameter must be a number, got {r!r}")
    if r < 0:
        raise NegativePathParameterError(f"path parameter must be >= 0, got {r!r}")
    if isinstance(r, float):
        a_val: Numeric = 1.0 / (2.0 + r)
        x_val: Numeric = r / (2.0 + r)
    else:
        rq = Fraction(r)
        a_val = Fraction(1) / (2 + rq)
        x_val = rq / (2 + rq)
    values = {a: a_val for a in form.cyclic_atoms}
    values.update({x: x_val for x in form.extra_atoms})
    return make_weight(structure, values)


def cyclic_sum(structure: EventStructure, weight: Weight) -> Numeric:
    """Sum of the weight over the cyclic atoms a1..an."""
    form = cycle_form(structure)
    zero: Numeric = Fraction(0) if weight.mode == RATIONAL else 0.0
    return sum((weight[a] for a in form.cyclic_atoms), zero)


def support(weight: Weight, tol: float = 0.0) -> frozenset[str]:
    """Atoms carrying strictly positive value (above ``tol`` in float
    mode)."""
    threshold: Numeric = Fraction(0) if weight.mode == RATIONAL else float(tol)
    return frozenset(a for a, v in weight.values.items() if v > threshold)
