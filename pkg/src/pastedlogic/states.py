"""Two-valued states and exact classical-polytope membership.

A two-valued state is a 0/1 weight: exactly one atom of every context
gets the value 1.  On intertwined structures the shared atoms make these
assignments globally rigid, so enumeration is a backtracking search over
contexts.  The convex hull of the two-valued states is the classical
polytope; membership of a weight is decided exactly over the rationals,
and both answers carry certificates -- an explicit convex decomposition,
or a separating functional c with  c . p > beta = max over states of
c . v.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from ._simplex import feasible_nonnegative
from .errors import (
    EnumerationLimitError,
    NoTwoValuedStatesError,
    NotAdmissibleError,
)
from .numeric import RATIONAL, as_fraction, numeric_to_json
from .structures import EventStructure, cycle_form
from .weights import Weight, check_admissible, make_weight

__all__ = [
    "TwoValuedState",
    "MembershipResult",
    "enumerate_two_valued_states",
    "classical_membership",
    "max_cyclic_value",
]

DEFAULT_ENUMERATION_LIMIT = 10**6


@dataclass(frozen=True)
class TwoValuedState:
    """A dispersion-free weight, stored by its set of 1-atoms."""

    structure: EventStructure
    ones: frozenset[str]

    def __getitem__(self, atom: str) -> int:
        if atom not in self.structure.atom_index:
            from .errors import UnknownAtomError

            raise UnknownAtomError(f"unknown atom {atom!r}")
        return 1 if atom in self.ones else 0

    def as_weight(self) -> Weight:
        return make_weight(
            self.structure, {a: Fraction(self[a]) for a in self.structure.atoms}
        )

    def to_json_dict(self) -> dict:
        return {a: self[a] for a in self.structure.atoms}


def enumerate_two_valued_states(
    structure: EventStructure, limit: int | None = DEFAULT_ENUMERATION_LIMIT
) -> tuple[TwoValuedState, ...]:
    """All two-valued states, by backtracking over contexts.

    Contexts are processed in index order and candidate 1-atoms tried in
    atom order, so the output order is deterministic.  If more than
    ``limit`` states exist an ``EnumerationLimitError`` is raised rather
    than returning a truncated list.
    """
    contexts = structure.contexts
    value: dict[str, int] = {}
    found: list[TwoValuedState] = []

    def set_value(atom: str, v: int, trail: list[str]) -> bool:
        cur = value.get(atom)
        if cur is None:
            value[atom] = v
            trail.append(atom)
            return True
        return cur == v

    def descend(level: int) -> None:
        if level == len(contexts):
            if limit is not None and len(found) >= limit:
                raise EnumerationLimitError(
                    f"more than {limit} two-valued states"
                )
            ones = frozenset(a for a, v in value.items() if v == 1)
            found.append(TwoValuedState(structure, ones))
            return
        ctx = contexts[level]
        fixed_ones = [a for a in ctx if value.get(a) == 1]
        if len(fixed_ones) > 1:
            return
        candidates = fixed_ones if fixed_ones else [a for a in ctx if value.get(a) != 0]
        for chosen in candidates:
            trail: list[str] = []
            ok = set_value(chosen, 1, trail)
            if ok:
                for other in ctx:
                    if other != chosen and not set_value(other, 0, trail):
                        ok = False
                        break
            if ok:
                descend(level + 1)
            for atom in trail:
                del value[atom]

    descend(0)
    return tuple(found)


@dataclass(frozen=True)
class MembershipResult:
    """Verdict plus certificate for one membership query.

    Classical: ``coefficients`` maps state indices (into ``states``) to
    rational mixture weights, nonzero entries only.  Not classical:
    ``witness`` is an integer-scaled functional with
    ``witness_value = c . p`` strictly above
    ``witness_bound = max over states of c . v``.
    """

    classical: bool
    states: tuple[TwoValuedState, ...]
    coefficients: Mapping[int, Fraction] | None
    witness: Mapping[str, Fraction] | None
    witness_bound: Fraction | None
    witness_value: Fraction | None

    def to_json_dict(self) -> dict:
        doc: dict = {"classical": self.classical}
        if self.classical:
            doc["coefficients"] = {
                str(i): numeric_to_json(c) for i, c in sorted(self.coefficients.items())
            }
            doc["states"] = [
                sorted(self.states[i].ones) for i in sorted(self.coefficients)
            ]
        else:
            doc["witness"] = {
                a: numeric_to_json(c) for a, c in self.witness.items()
            }
            doc["witness_bound"] = numeric_to_json(self.witness_bound)
            doc["witness_value"] = numeric_to_json(self.witness_value)
        return doc


def classical_membership(
    structure: EventStructure,
    weight: Weight,
    states: Sequence[TwoValuedState] | None = None,
    tol: float = 1e-9,
) -> MembershipResult:
    """Decide whether a weight is a convex mixture of two-valued states.

    The weight must be admissible (checked first, at ``tol`` in float
    mode).  Float weights are converted to exact rationals by binary
    decomposition and the decision is made for that exact point, so the
    caller always knows which point was tested.  The answer is exact and
    self-certifying either way.
    """
    report = check_admissible(weight, tol)
    if not report.admissible:
        raise NotAdmissibleError(report)
    if states is None:
        states = enumerate_two_valued_states(structure)
    states = tuple(states)
    if not states:
        raise NoTwoValuedStatesError(
            "no two-valued states: the classical polytope is empty"
        )

    atoms = structure.atoms
    target = [as_fraction(weight[a]) for a in atoms] + [Fraction(1)]
    columns = [
        [Fraction(state[a]) for a in atoms] + [Fraction(1)] for state in states
    ]
    solution, farkas = feasible_nonnegative(columns, target)
    if solution is not None:
        return MembershipResult(True, states, dict(solution), None, None, None)

    # Separating functional: drop the normalisation row into the bound.
    c = {a: farkas[i] for i, a in enumerate(atoms)}
    scale = _common_denominator(list(c.values()))
    c = {a: v * scale for a, v in c.items()}
    bound = max(
        sum(c[a] for a in state.ones) if state.ones else Fraction(0)
        for state in states
    )
    value = sum(c[a] * as_fraction(weight[a]) for a in atoms)
    if value <= bound:
        raise RuntimeError("separating witness failed verification")
    return MembershipResult(False, states, None, c, bound, value)


def _common_denominator(values: Sequence[Fraction]) -> Fraction:
    lcm = 1
    for v in values:
        d = v.denominator
        g = _gcd(lcm, d)
        lcm = lcm // g * d
    return Fraction(lcm)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def max_cyclic_value(
    structure: EventStructure, states: Sequence[TwoValuedState] | None = None
) -> Fraction:
    """Largest cyclic sum any two-valued state attains: the independence
    number of the n-cycle, (n-1)/2 rounded down."""
    form = cycle_form(structure)
    if states is None:
        states = enumerate_two_valued_states(structure)
    if not states:
        raise NoTwoValuedStatesError("no two-valued states to maximise over")
    return Fraction(
        max(sum(1 for a in form.cyclic_atoms if state[a]) for state in states)
    )
