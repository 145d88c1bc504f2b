"""Generalized softmax distributions over contexts and their gluing.

A link function g is continuous and strictly increasing with range
containing an interval (0, r).  Scores u on the atoms of a context C
induce the distribution

    P(a) = g(u(a)) / Z_C,   Z_C = sum over b in C of g(u(b)),

ordinary softmax being the exponential link g(u) = exp(beta * u).  The
central question is when per-context distributions agree on shared
atoms, i.e. glue into one admissible weight.  Writing q = g(u) for the
positive coordinates, agreement on a shared atom a of contexts C and C'
pins the normaliser ratio:  P_C(a) = P_C'(a)  iff  Z_C / Z_C' =
q_C(a) / q_C'(a).  Consequently all shared atoms of a pair must give the
same q-ratio, and around any closed chain of overlapping contexts the
ratios must telescope to 1.  Conversely every strictly positive
admissible weight is a global-score softmax: u(a) = g^{-1}(alpha * p(a))
for small alpha > 0 makes every normaliser equal alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from .errors import (
    AlphaOutOfRangeError,
    DegenerateScoresError,
    MissingAtomValueError,
    NegativePathParameterError,
    NotAComponentError,
    NotAdmissibleError,
    NotGluedError,
    NotStrictlyPositiveError,
    ScoreOutOfDomainError,
    SchemaError,
    TargetOutOfRangeError,
    UnknownAtomError,
    ValidationError,
)
from .numeric import DEFAULT_TOL, FLOAT, RATIONAL, numeric_from_json, numeric_to_json
from .structures import EventStructure, connected_components, cycle_form, incidence
from .weights import Numeric, Weight, check_admissible, half_weight, make_weight, path_weight

__all__ = [
    "LinkFunction",
    "ExponentialLink",
    "IdentityLink",
    "PowerLink",
    "link_from_json_dict",
    "GlobalScores",
    "PerContextScores",
    "scores_from_json_dict",
    "ContextDistributionFamily",
    "GluingReport",
    "MultiplicativeLinkReport",
    "context_softmax",
    "gluing_check",
    "glue_to_weight",
    "represent_weight",
    "gauge_shift",
    "boundary_path",
    "maxent_softmax",
    "check_multiplicative_link",
]


# ------------------------------------------------------------------ links


@dataclass(frozen=True)
class LinkFunction:
    """Base for the link catalogue; subclasses fix domain and formula.

    ``guaranteed_range_radius`` is an r with (0, r) inside the range,
    used when auto-selecting the representation scale.
    """

    kind = "abstract"
    guaranteed_range_radius = 1.0

    def evaluate(self, x: Numeric) -> Numeric:
        raise NotImplementedError

    def inverse(self, y: Numeric) -> Numeric:
        raise NotImplementedError

    def in_domain(self, x: Any) -> bool:
        raise NotImplementedError

    def in_range(self, y: Any) -> bool:
        raise NotImplementedError

    def to_json_dict(self) -> dict:
        return {"kind": self.kind}


@dataclass(frozen=True)
class ExponentialLink(LinkFunction):
    """g(u) = exp(beta * u) on all of R; the ordinary softmax link."""

    beta: float = 1.0
    kind = "exponential"

    def __post_init__(self):
        if not (isinstance(self.beta, (int, float)) and float(self.beta) > 0):
            raise ValidationError("exponential link needs beta > 0")

    def evaluate(self, x: Numeric) -> float:
        return math.exp(self.beta * float(x))

    def inverse(self, y: Numeric) -> float:
        if not self.in_range(y):
            raise ScoreOutOfDomainError(f"{y!r} is not in the range (0, inf)")
        return math.log(float(y)) / self.beta

    def in_domain(self, x: Any) -> bool:
        return isinstance(x, (int, float, Fraction)) and math.isfinite(float(x))

    def in_range(self, y: Any) -> bool:
        return isinstance(y, (int, float, Fraction)) and float(y) > 0

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "beta": self.beta}


@dataclass(frozen=True)
class IdentityLink(LinkFunction):
    """g(u) = u on (0, inf); scores are the positive coordinates
    themselves, so rational scores stay rational all the way through."""

    kind = "identity"

    def evaluate(self, x: Numeric) -> Numeric:
        return x

    def inverse(self, y: Numeric) -> Numeric:
        if not self.in_range(y):
            raise ScoreOutOfDomainError(f"{y!r} is not in the range (0, inf)")
        return y

    def in_domain(self, x: Any) -> bool:
        return isinstance(x, (int, float, Fraction)) and x > 0

    in_range = in_domain


@dataclass(frozen=True)
class PowerLink(LinkFunction):
    """g(u) = u**k on (0, inf), k > 0."""

    k: float = 2.0
    kind = "power"

    def __post_init__(self):
        if not (isinstance(self.k, (int, float)) and float(self.k) > 0):
            raise ValidationError("power link needs k > 0")

    def evaluate(self, x: Numeric) -> float:
        return float(x) ** float(self.k)

    def inverse(self, y: Numeric) -> float:
        if not self.in_range(y):
            raise ScoreOutOfDomainError(f"{y!r} is not in the range (0, inf)")
        return float(y) ** (1.0 / float(self.k))

    def in_domain(self, x: Any) -> bool:
        return isinstance(x, (int, float, Fraction)) and x > 0

    in_range = in_domain

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "k": self.k}


def link_from_json_dict(doc: Mapping) -> LinkFunction:
    if not isinstance(doc, Mapping) or "kind" not in doc:
        raise SchemaError("link must be an object with a 'kind' field")
    kind = doc["kind"]
    extra = set(doc) - {"kind", "beta", "k"}
    if extra:
        raise SchemaError("link has unknown fields: " + ", ".join(sorted(extra)))
    if kind == "exponential":
        return ExponentialLink(float(doc.get("beta", 1.0)))
    if kind == "identity":
        if set(doc) - {"kind"}:
            raise SchemaError("identity link takes no parameters")
        return IdentityLink()
    if kind == "power":
        return PowerLink(float(doc.get("k", 2.0)))
    raise SchemaError(f"unknown link kind {kind!r}")


# ------------------------------------------------------------------ scores


@dataclass(frozen=True)
class GlobalScores:
    """One score per atom, shared by every context containing it."""

    values: Mapping[str, Numeric]

    def context_scores(self, ctx: Sequence[str], name: str) -> dict[str, Numeric]:
        missing = [a for a in ctx if a not in self.values]
        if missing:
            raise MissingAtomValueError(
                f"global scores missing atoms: {', '.join(missing)}"
            )
        return {a: self.values[a] for a in ctx}

    def to_json_dict(self) -> dict:
        return {
            "scope": "global",
            "values": {a: numeric_to_json(v) for a, v in self.values.items()},
        }


@dataclass(frozen=True)
class PerContextScores:
    """Independent scores for the atoms of each context; a shared atom
    may receive different scores in different contexts."""

    values: Mapping[str, Mapping[str, Numeric]]

    def context_scores(self, ctx: Sequence[str], name: str) -> dict[str, Numeric]:
        if name not in self.values:
            raise MissingAtomValueError(f"no scores for context {name!r}")
        table = self.values[name]
        extra = set(table) - set(ctx)
        if extra:
            raise UnknownAtomError(
                f"scores for context {name!r} name foreign atoms: "
                + ", ".join(sorted(extra))
            )
        missing = [a for a in ctx if a not in table]
        if missing:
            raise MissingAtomValueError(
                f"context {name!r} misses scores for: {', '.join(missing)}"
            )
        return {a: table[a] for a in ctx}

    def to_json_dict(self) -> dict:
        return {
            "scope": "per-context",
            "values": {
                name: {a: numeric_to_json(v) for a, v in table.items()}
                for name, table in self.values.items()
            },
        }


ScoreAssignment = GlobalScores | PerContextScores


def scores_from_json_dict(doc: Mapping) -> ScoreAssignment:
    if not isinstance(doc, Mapping) or "scope" not in doc or "values" not in doc:
        raise SchemaError("scores must be an object with 'scope' and 'values'")
    extra = set(doc) - {"scope", "values"}
    if extra:
        raise SchemaError("scores have unknown fields: " + ", ".join(sorted(extra)))
    scope = doc["scope"]
    if scope == "global":
        return GlobalScores(
            {str(a): numeric_from_json(v) for a, v in doc["values"].items()}
        )
    if scope == "per-context":
        return PerContextScores(
            {
                str(name): {str(a): numeric_from_json(v) for a, v in table.items()}
                for name, table in doc["values"].items()
            }
        )
    raise SchemaError(f"unknown score scope {scope!r}")


# ------------------------------------------------------ context softmax


@dataclass(frozen=True)
class ContextDistributionFamily:
    """Per-context distributions with their positive coordinates.

    ``coordinates[C][a] = g(u_C(a)) > 0`` and ``normalizers[C]`` is their
    sum; ``probabilities[C][a]`` is the quotient, summing to 1 per
    context.
    """

    structure: EventStructure
    link: LinkFunction
    probabilities: Mapping[str, Mapping[str, Numeric]]
    coordinates: Mapping[str, Mapping[str, Numeric]]
    normalizers: Mapping[str, Numeric]

    def is_exact(self) -> bool:
        return all(
            isinstance(p, Fraction)
            for table in self.probabilities.values()
            for p in table.values()
        )

    def to_json_dict(self) -> dict:
        return {
            "link": self.link.to_json_dict(),
            "probabilities": {
                n: {a: numeric_to_json(p) for a, p in t.items()}
                for n, t in self.probabilities.items()
            },
            "coordinates": {
                n: {a: numeric_to_json(q) for a, q in t.items()}
                for n, t in self.coordinates.items()
            },
            "normalizers": {
                n: numeric_to_json(z) for n, z in self.normalizers.items()
            },
        }


def context_softmax(
    structure: EventStructure,
    scores: ScoreAssignment,
    link: LinkFunction,
) -> ContextDistributionFamily:
    """Evaluate the generalized softmax in every context.

    Global scores give one score per atom everywhere; per-context scores
    may disagree on shared atoms (that disagreement is exactly what
    ``gluing_check`` measures).
    """
    probabilities: dict[str, dict[str, Numeric]] = {}
    coordinates: dict[str, dict[str, Numeric]] = {}
    normalizers: dict[str, Numeric] = {}
    for name, ctx in zip(structure.context_names, structure.contexts):
        table = scores.context_scores(ctx, name)
        q: dict[str, Numeric] = {}
        for a, u in table.items():
            if not link.in_domain(u):
                raise ScoreOutOfDomainError(
                    f"score {u!r} for atom {a!r} is outside the {link.kind} domain"
                )
            value = link.evaluate(u)
            if not (value > 0) or (isinstance(value, float) and not math.isfinite(value)):
                raise ScoreOutOfDomainError(
                    f"link value for atom {a!r} is not a positive finite number"
                )
            q[a] = value
        z = sum(q.values())
        probabilities[name] = {a: q[a] / z for a in ctx}
        coordinates[name] = q
        normalizers[name] = z
    return ContextDistributionFamily(
        structure, link, probabilities, coordinates, normalizers
    )


# ------------------------------------------------------------------ gluing


@dataclass(frozen=True)
class GluingReport:
    """Three views of the same agreement question.

    ``atom_discrepancies``: per shared atom, the largest probability gap
    across containing contexts (the defining condition).
    ``pair_ratio_spreads``: per overlapping context pair, how far the
    q-ratios of its shared atoms are from each other (a pair glues only
    if all its shared atoms give one common normaliser ratio).
    ``cycle_deviations``: per fundamental cycle of the context-overlap
    graph, |product of edge ratios - 1| (ratios must telescope around
    closed chains).  In exact mode every comparison is exact.
    """

    glued: bool
    exact: bool
    tolerance: Numeric
    atom_discrepancies: Mapping[str, Numeric]
    pair_ratio_spreads: Mapping[tuple[str, str], Numeric]
    cycle_deviations: tuple[tuple[tuple[str, ...], Numeric], ...]

    def max_discrepancy(self) -> Numeric:
        return max(self.atom_discrepancies.values(), default=0)

    def to_json_dict(self) -> dict:
        return {
            "glued": self.glued,
            "exact": self.exact,
            "tolerance": numeric_to_json(self.tolerance),
            "atom_discrepancies": {
                a: numeric_to_json(v) for a, v in self.atom_discrepancies.items()
            },
            "pair_ratio_spreads": {
                f"{p[0]}|{p[1]}": numeric_to_json(v)
                for p, v in self.pair_ratio_spreads.items()
            },
            "cycle_deviations": [
                {"cycle": list(cycle), "deviation": numeric_to_json(v)}
                for cycle, v in self.cycle_deviations
            ],
        }


def gluing_check(
    family: ContextDistributionFamily, tol: float = DEFAULT_TOL
) -> GluingReport:
    """Do the context distributions agree wherever they overlap?"""
    structure = family.structure
    inc = incidence(structure)
    exact = family.is_exact()
    zero: Numeric = Fraction(0) if exact else 0.0
    tolerance: Numeric = Fraction(0) if exact else float(tol)

    atom_disc: dict[str, Numeric] = {}
    for atom, holders in inc.contexts_of.items():
        if len(holders) < 2:
            continue
        values = [family.probabilities[name][atom] for name in holders]
        atom_disc[atom] = max(
            (abs(u - v) for u in values for v in values), default=zero
        )

    pair_spread: dict[tuple[str, str], Numeric] = {}
    for pair, shared in inc.shared_atoms.items():
        ca, cb = pair
        ratios = [
            family.coordinates[ca][a] / family.coordinates[cb][a] for a in shared
        ]
        pair_spread[pair] = max((abs(r - ratios[0]) for r in ratios), default=zero)

    cycles = _fundamental_cycles(structure, inc)
    cycle_dev: list[tuple[tuple[str, ...], Numeric]] = []
    for cycle in cycles:
        product: Numeric = Fraction(1) if exact else 1.0
        for u, v in zip(cycle, cycle[1:]):
            shared = inc.shared(u, v)
            a = shared[0]
            product = product * (
                family.coordinates[u][a] / family.coordinates[v][a]
            )
        cycle_dev.append((cycle, abs(product - 1)))

    ok = (
        all(v <= tolerance for v in atom_disc.values())
        and all(v <= tolerance for v in pair_spread.values())
        and all(v <= tolerance for _, v in cycle_dev)
    )
    return GluingReport(
        bool(ok), exact, tolerance, atom_disc, pair_spread, tuple(cycle_dev)
    )


def _fundamental_cycles(
    structure: EventStructure, inc
) -> tuple[tuple[str, ...], ...]:
    """One closed chain of context names per independent cycle of the
    context-overlap graph (non-tree edge closing a spanning-forest path)."""
    names = structure.context_names
    pos = {n: i for i, n in enumerate(names)}
    neighbours: dict[str, list[str]] = {n: [] for n in names}
    for (a, b) in inc.shared_atoms:
        neighbours[a].append(b)
        neighbours[b].append(a)
    for n in neighbours:
        neighbours[n].sort(key=pos.__getitem__)

    parent: dict[str, str | None] = {}
    depth: dict[str, int] = {}
    tree_edges: set[frozenset[str]] = set()
    order: list[str] = []
    for root in names:
        if root in parent:
            continue
        parent[root] = None
        depth[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for v in neighbours[u]:
                if v not in parent:
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    tree_edges.add(frozenset((u, v)))
                    queue.append(v)

    cycles: list[tuple[str, ...]] = []
    seen: set[frozenset[str]] = set()
    for u in names:
        for v in neighbours[u]:
            edge = frozenset((u, v))
            if edge in tree_edges or edge in seen or pos[u] > pos[v]:
                continue
            seen.add(edge)
            up_u, up_v = [u], [v]
            a, b = u, v
            while depth[a] > depth[b]:
                a = parent[a]
                up_u.append(a)
            while depth[b] > depth[a]:
                b = parent[b]
                up_v.append(b)
            while a != b:
                a = parent[a]
                b = parent[b]
                up_u.append(a)
                up_v.append(b)
            # u ... lca followed by the reversed v-side, then close at u.
            path = up_u + up_v[-2::-1]
            cycles.append(tuple(path + [u]))
    return tuple(cycles)


def glue_to_weight(
    family: ContextDistributionFamily, tol: float = DEFAULT_TOL
) -> Weight:
    """Collapse a glued family into the single weight it defines.

    Raises ``NotGluedError`` (with the report attached) when the family
    does not glue at the given tolerance.  Each atom takes its value
    from the earliest context containing it.
    """
    report = gluing_check(family, tol)
    if not report.glued:
        raise NotGluedError(report)
    structure = family.structure
    values: dict[str, Numeric] = {}
    for name, ctx in zip(structure.context_names, structure.contexts):
        for a in ctx:
            values.setdefault(a, family.probabilities[name][a])
    mode = RATIONAL if family.is_exact() else FLOAT
    return make_weight(structure, values, mode)


# ---------------------------------------------------------- representation


def represent_weight(
    structure: EventStructure,
    weight: Weight,
    link: LinkFunction,
    alpha: Numeric | None = None,
) -> GlobalScores:
    """Global scores whose softmax reproduces a strictly positive weight.

    With u(a) = g^{-1}(alpha * p(a)) every context normaliser equals
    alpha, so P_C(a) = alpha * p(a) / alpha = p(a) in every context.  The
    default scale alpha = r/2 * min(1, 1/max p) keeps alpha * p inside
    the guaranteed range interval (0, r) of the link.
    """
    report = check_admissible(weight)
    if not report.admissible:
        raise NotAdmissibleError(report)
    zeros = [a for a, v in weight.items() if not v > 0]
    if zeros:
        raise NotStrictlyPositiveError(zeros)

    values = dict(weight.items())
    peak = max(values.values())
    if alpha is None:
        if weight.mode == RATIONAL:
            cap = Fraction(link.guaranteed_range_radius)
            alpha = Fraction(1, 2) * cap * min(Fraction(1), Fraction(1) / peak)
        else:
            alpha = 0.5 * link.guaranteed_range_radius * min(1.0, 1.0 / peak)
    if not (isinstance(alpha, (int, float, Fraction)) and alpha > 0):
        raise AlphaOutOfRangeError(f"alpha must be positive, got {alpha!r}")
    scaled = {a: alpha * v for a, v in values.items()}
    bad = [a for a, s in scaled.items() if not link.in_range(s)]
    if bad:
        raise AlphaOutOfRangeError(
            "alpha * p falls outside the link range for: " + ", ".join(bad)
        )
    return GlobalScores({a: link.inverse(s) for a, s in scaled.items()})


def gauge_shift(
    structure: EventStructure,
    scores: GlobalScores,
    shift: float,
    component: Iterable[str],
    link: LinkFunction,
) -> GlobalScores:
    """Shift all scores of one connected component by a constant.

    For the exponential link this multiplies the positive coordinates of
    the component by exp(beta * shift) uniformly, which cancels in every
    quotient: the softmax probabilities are unchanged.  Other links have
    no additive gauge (their multiplicative freedom lives in q-space, not
    score space), so they are rejected.
    """
    if not isinstance(link, ExponentialLink):
        raise ValidationError(
            "additive gauge shifts exist only for the exponential link; "
            "for other links rescale the positive coordinates instead"
        )
    target = frozenset(component)
    if target not in set(connected_components(structure)):
        raise NotAComponentError(
            "the given atom set is not a connected component of the structure"
        )
    shifted = {
        a: (v + shift if a in target else v) for a, v in scores.values.items()
    }
    return GlobalScores(shifted)


def boundary_path(
    structure: EventStructure,
    link: LinkFunction,
    r_values: Sequence[Any],
    target: Weight | None = None,
) -> list[tuple[Weight, float]]:
    """Strictly positive representable weights approaching a boundary
    weight along the path family.

    ``r_values`` must be positive and strictly decreasing; the default
    target is the half weight, which the family reaches as r -> 0.  Each
    returned pair is (path weight at r, largest cyclic-atom gap
    |1/(2+r) - target(a)|); each weight is passed through
    ``represent_weight`` to certify that it really is representable.
    """
    form = cycle_form(structure)
    rs = list(r_values)
    if not rs:
        raise ValidationError("need at least one r value")
    if any(not (isinstance(r, (int, float, Fraction)) and r > 0) for r in rs):
        raise NegativePathParameterError(f"r values must all be positive, got {rs!r}")
    for earlier, later in zip(rs, rs[1:]):
        if not later < earlier:
            raise ValidationError("r values must be strictly decreasing")
    if target is None:
        target = half_weight(structure)

    out: list[tuple[Weight, float]] = []
    for r in rs:
        w = path_weight(structure, r)
        represent_weight(structure, w, link)
        gap = max(abs(float(w[a]) - float(target[a])) for a in form.cyclic_atoms)
        out.append((w, gap))
    return out


# ------------------------------------------------------------------ maxent


def maxent_softmax(
    scores: Mapping[str, float],
    target_mean: float,
    tol: float = DEFAULT_TOL,
) -> tuple[float, dict[str, float]]:
    """Exponential softmax matching a mean score constraint.

    Among distributions over the given outcomes with expected score
    equal to ``target_mean``, entropy is maximised by a softmax
    exp(beta * u) / Z; the mean is strictly increasing in beta, so beta
    is found by bracketing (doubling from [-1, 1], up to 2**40) and
    bisection until the mean is within ``tol``.
    """
    names = list(scores)
    u = [float(scores[n]) for n in names]
    if len(u) < 2 or max(u) == min(u):
        raise DegenerateScoresError("scores must not all be equal")
    if not (min(u) < target_mean < max(u)):
        raise TargetOutOfRangeError(
            f"target mean {target_mean!r} is not strictly between "
            f"{min(u)} and {max(u)}"
        )

    def mean(beta: float) -> float:
        shift = max(beta * v for v in u)
        w = [math.exp(beta * v - shift) for v in u]
        z = sum(w)
        return sum(v * wi for v, wi in zip(u, w)) / z

    lo, hi = -1.0, 1.0
    while mean(lo) > target_mean:
        lo *= 2.0
        if lo < -(2.0**40):
            raise TargetOutOfRangeError("no bracket below 2**40 for the target mean")
    while mean(hi) < target_mean:
        hi *= 2.0
        if hi > 2.0**40:
            raise TargetOutOfRangeError("no bracket below 2**40 for the target mean")

    beta = 0.5 * (lo + hi)
    for _ in range(400):
        beta = 0.5 * (lo + hi)
        m = mean(beta)
        if abs(m - target_mean) <= tol and hi - lo <= 1e-12 * max(1.0, abs(beta)):
            break
        if m < target_mean:
            lo = beta
        else:
            hi = beta

    shift = max(beta * v for v in u)
    w = [math.exp(beta * v - shift) for v in u]
    z = sum(w)
    distribution = {n: wi / z for n, wi in zip(names, w)}
    return beta, distribution


# ------------------------------------------------- multiplicative property


@dataclass(frozen=True)
class MultiplicativeLinkReport:
    """Residuals of g(u+v) = g(u) * g(v) over sample pairs."""

    link: LinkFunction
    tolerance: float
    residuals: tuple[tuple[float, float, float], ...]
    multiplicative: bool

    def max_residual(self) -> float:
        return max((r for _, _, r in self.residuals), default=0.0)

    def to_json_dict(self) -> dict:
        return {
            "link": self.link.to_json_dict(),
            "tolerance": numeric_to_json(self.tolerance),
            "residuals": [
                {"u": numeric_to_json(u), "v": numeric_to_json(v), "residual": numeric_to_json(r)}
                for u, v, r in self.residuals
            ],
            "multiplicative": self.multiplicative,
        }


def check_multiplicative_link(
    link: LinkFunction,
    pairs: Sequence[tuple[float, float]],
    tol: float = 1e-12,
) -> MultiplicativeLinkReport:
    """Test whether the link turns score addition into coordinate
    multiplication.

    The relative residual |g(u+v) - g(u)g(v)| / |g(u)g(v)| vanishes for
    the exponential link and for no other strictly increasing link; this
    is what singles out ordinary softmax among the generalized ones.
    """
    residuals: list[tuple[float, float, float]] = []
    for u, v in pairs:
        for point in (u, v, u + v):
            if not link.in_domain(point):
                raise ScoreOutOfDomainError(
                    f"{point!r} is outside the {link.kind} domain"
                )
        lhs = float(link.evaluate(u + v))
        rhs = float(link.evaluate(u)) * float(link.evaluate(v))
        residuals.append((float(u), float(v), abs(lhs - rhs) / abs(rhs)))
    verdict = all(r <= tol for _, _, r in residuals)
    return MultiplicativeLinkReport(link, float(tol), tuple(residuals), verdict)
