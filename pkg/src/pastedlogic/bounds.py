"""Odd-cycle bounds and the three-region classification of weights.

On the n-cycle logic the cyclic sum  S(p) = p(a1) + ... + p(an)  obeys
a classical ceiling of (n-1)/2 for odd n (the independence number of the
cycle graph; n/2 for even n), while every admissible weight can reach
n/2.  In between sits the Lovasz theta value of the cycle graph,

    theta(n) = n cos(pi/n) / (1 + cos(pi/n)),

which is sqrt(5) for the pentagon and strictly between the classical
bound and n/2 for every odd n >= 5 (1 + cos(pi/n) > 2 cos(pi/n)).  Along
the path family  S(p_r) = n/(2+r), so each bound converts to an r
threshold: the path leaves the classical region at r = n/bound - 2 and
the theta region at r = n/theta - 2.

The triangle is degenerate: its exclusivity graph is complete, the
classical bound is 1, and theta carries no extra information, so the
theta comparison is suppressed there.  The same suppression applies to
even cycles, where the closed form above is not the relevant value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InvalidCycleLengthError, NotACycleStructureError
from .numeric import DEFAULT_TOL, numeric_to_json
from .states import MembershipResult, TwoValuedState, classical_membership
from .structures import EventStructure, cycle_form
from .weights import (
    AdmissibilityReport,
    Numeric,
    Weight,
    check_admissible,
    cyclic_sum,
)

__all__ = [
    "CycleBounds",
    "RegionReport",
    "cycle_bounds",
    "path_thresholds",
    "classify_weight",
    "LABEL_NOT_ADMISSIBLE",
    "LABEL_CLASSICAL",
    "LABEL_NONCLASSICAL",
    "LABEL_BEYOND_THETA",
]

LABEL_NOT_ADMISSIBLE = "not-admissible"
LABEL_CLASSICAL = "classical"
LABEL_NONCLASSICAL = "admissible-nonclassical"
LABEL_BEYOND_THETA = "beyond-theta"


@dataclass(frozen=True)
class CycleBounds:
    """The three landmark values of the cyclic sum on an n-cycle."""

    n: int
    classical_bound: Fraction
    theta: float
    half_weight_value: Fraction
    odd: bool
    theta_applicable: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "classical_bound": numeric_to_json(self.classical_bound),
            "theta": numeric_to_json(self.theta),
            "half_weight_value": numeric_to_json(self.half_weight_value),
            "odd": self.odd,
            "theta_applicable": self.theta_applicable,
        }


def cycle_bounds(n: int) -> CycleBounds:
    """Classical bound, theta, and the admissible maximum n/2.

    ``theta_applicable`` is False for n = 3 (complete exclusivity graph,
    nothing between the classical bound and n/2 worth comparing to) and
    for even n (no gap: the classical bound already equals n/2).
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 3:
        raise InvalidCycleLengthError(f"cycle length must be an integer >= 3, got {n!r}")
    odd = n % 2 == 1
    classical = Fraction(n - 1, 2) if odd else Fraction(n, 2)
    theta = n * math.cos(math.pi / n) / (1.0 + math.cos(math.pi / n))
    return CycleBounds(
        n=n,
        classical_bound=classical,
        theta=theta,
        half_weight_value=Fraction(n, 2),
        odd=odd,
        theta_applicable=odd and n >= 5,
    )


def path_thresholds(n: int) -> tuple[Fraction, float | None]:
    """r values where the path family crosses each bound.

    Solving n/(2+r) = bound gives r = n/bound - 2.  The classical
    threshold is exact; the theta threshold exists for odd n >= 5 only
    (pentagon: sqrt(5) - 2).
    """
    b = cycle_bounds(n)
    r_classical = Fraction(n) / b.classical_bound - 2
    r_theta = n / b.theta - 2.0 if b.theta_applicable else None
    return r_classical, r_theta


@dataclass(frozen=True)
class RegionReport:
    """Where one weight sits: outside, classical, in between, or past
    theta.  Certificates from the underlying checks ride along."""

    label: str
    admissibility: AdmissibilityReport
    membership: MembershipResult | None
    cyclic_sum: Numeric | None
    bounds: CycleBounds | None
    beyond_theta: bool | None

    def to_json_dict(self) -> dict:
        doc: dict = {
            "label": self.label,
            "admissibility": self.admissibility.to_json_dict(),
        }
        if self.membership is not None:
            doc["membership"] = self.membership.to_json_dict()
        if self.cyclic_sum is not None:
            doc["cyclic_sum"] = numeric_to_json(self.cyclic_sum)
        if self.bounds is not None:
            doc["bounds"] = self.bounds.to_json_dict()
        if self.beyond_theta is not None:
            doc["beyond_theta"] = self.beyond_theta
        return doc


def classify_weight(
    structure: EventStructure,
    weight: Weight,
    tol: float = DEFAULT_TOL,
    states: Sequence[TwoValuedState] | None = None,
) -> RegionReport:
    """Admissibility, then exact membership, then the theta comparison.

    The theta comparison runs only on odd cycles of length >= 5; on the
    triangle and on even cycles ``beyond_theta`` stays None.
    """
    adm = check_admissible(weight, tol)
    if not adm.admissible:
        return RegionReport(LABEL_NOT_ADMISSIBLE, adm, None, None, None, None)

    membership = classical_membership(structure, weight, states, tol)

    s: Numeric | None = None
    b: CycleBounds | None = None
    beyond: bool | None = None
    try:
        form = cycle_form(structure)
    except NotACycleStructureError:
        form = None
    if form is not None:
        s = cyclic_sum(structure, weight)
        b = cycle_bounds(form.n)
        if b.theta_applicable:
            beyond = float(s) > b.theta

    if membership.classical:
        label = LABEL_CLASSICAL
        beyond = False if beyond is not None else beyond
    elif beyond:
        label = LABEL_BEYOND_THETA
    else:
        label = LABEL_NONCLASSICAL
    return RegionReport(label, adm, membership, s, b, beyond)
