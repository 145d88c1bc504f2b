"""Dual-mode numerics: exact rationals next to floats, plus JSON rendering.

Values live in one of two modes.  ``"rational"`` values are
:class:`fractions.Fraction` (integers are accepted and normalised on
input); all comparisons in that mode are exact.  ``"float"`` values are
binary doubles compared against a tolerance.  JSON output renders
rationals as ``"num/den"`` strings and floats as numbers rounded to 12
significant digits, which keeps every report byte-deterministic.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, Iterable, Mapping

from .errors import ValidationError

RATIONAL = "rational"
FLOAT = "float"

DEFAULT_TOL = 1e-9


def is_exact(value: Any) -> bool:
    """True for values that belong to rational mode."""
    return isinstance(value, (Fraction, int)) and not isinstance(value, bool)


def as_fraction(value: Any) -> Fraction:
    """Exact conversion to Fraction.

    Floats are decomposed exactly (every finite double is a dyadic
    rational); no rounding or continued-fraction guessing happens here.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"cannot convert {value!r} to an exact rational")
    if isinstance(value, float) and not math.isfinite(value):
        raise ValidationError(f"cannot convert non-finite {value!r} to a rational")
    return Fraction(value)


def coerce_values(values: Mapping[str, Any], mode: str | None = None) -> tuple[dict, str]:
    """Normalise a name -> number mapping to one homogeneous mode.

    Without an explicit ``mode`` the mode is inferred: all-exact input
    becomes rational, all-float input stays float, and a mixture is
    rejected rather than silently rounded.
    """
    if mode not in (None, RATIONAL, FLOAT):
        raise ValidationError(f"unknown mode {mode!r}")
    exact = {k: is_exact(v) for k, v in values.items()}
    for k, v in values.items():
        if not isinstance(v, (int, float, Fraction)) or isinstance(v, bool):
            raise ValidationError(f"value for {k!r} is not numeric: {v!r}")
    if mode is None:
        if all(exact.values()):
            mode = RATIONAL
        elif not any(exact.values()):
            mode = FLOAT
        else:
            raise ValidationError(
                "mixed exact and float values; pass an explicit mode"
            )
    if mode == RATIONAL:
        bad = [k for k, ok in exact.items() if not ok]
        if bad:
            raise ValidationError(
                "rational mode requires exact values; got floats for "
                + ", ".join(sorted(bad))
            )
        return {k: Fraction(v) for k, v in values.items()}, RATIONAL
    return {k: float(v) for k, v in values.items()}, FLOAT


def numeric_to_json(value: Any) -> Any:
    """Exact rationals become ``"num/den"`` strings, floats are rounded
    to 12 significant digits, and plain ints (counts, cardinalities)
    stay JSON integers."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        return round12(value)
    return value


def numeric_from_json(value: Any) -> Fraction | float:
    """Parse a JSON scalar: ``"num/den"`` strings and ints are exact,
    JSON floats stay float."""
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"not a rational literal: {value!r}") from exc
    if isinstance(value, bool):
        raise ValidationError(f"expected a number, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return value
    raise ValidationError(f"expected a number, got {value!r}")


def round12(x: float) -> float | str:
    """Round a float to 12 significant digits for stable reports."""
    if math.isnan(x) or math.isinf(x):
        return repr(x)
    return float(f"{x:.12g}")


def render(obj: Any) -> Any:
    """Recursively convert a report tree into JSON-safe primitives."""
    if isinstance(obj, Mapping):
        return {str(k): render(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [render(v) for v in obj]
    if isinstance(obj, frozenset):
        return sorted(obj)
    return numeric_to_json(obj)


def dumps(obj: Any) -> str:
    """Deterministic JSON text (insertion order preserved, one trailing
    newline)."""
    return json.dumps(render(obj), indent=2) + "\n"
