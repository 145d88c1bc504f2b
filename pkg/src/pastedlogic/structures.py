"""Finite pasted event structures.

An event structure is a finite, ordered set of atoms together with a
family of contexts.  Each context is a set of mutually exclusive and
jointly exhaustive outcomes; an atom may belong to several contexts, and
those shared (intertwining) atoms are what couples the contexts to each
other.  Everything downstream -- admissible weights, two-valued states,
softmax gluing -- is defined relative to one of these structures.

The canonical worked family is the n-cycle logic: atoms
``a1..an, x1..xn`` with contexts ``Ci = {ai, a(i+1 mod n), xi}``.  The
pentagon (n = 5) is the smallest odd cycle whose admissible region
strictly exceeds the classical polytope at an interesting weight.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateAtomError,
    DuplicateContextError,
    EmptyContextError,
    InvalidCycleLengthError,
    NotACycleStructureError,
    SchemaError,
    UnknownAtomError,
    ValidationError,
)

__all__ = [
    "EventStructure",
    "IncidenceIndex",
    "CycleForm",
    "build_event_structure",
    "cycle_logic",
    "cycle_form",
    "incidence",
    "connected_components",
    "structure_from_json_dict",
    "structure_from_json",
]


@dataclass(frozen=True)
class EventStructure:
    """Atoms plus named contexts, with a fixed deterministic atom order.

    Contexts are conceptually sets; they are stored as tuples sorted by
    atom position so that every iteration in the package is reproducible.
    """

    atoms: tuple[str, ...]
    contexts: tuple[tuple[str, ...], ...]
    context_names: tuple[str, ...]

    @cached_property
    def atom_index(self) -> Mapping[str, int]:
        return {a: i for i, a in enumerate(self.atoms)}

    @cached_property
    def context_sets(self) -> tuple[frozenset[str], ...]:
        return tuple(frozenset(c) for c in self.contexts)

    @cached_property
    def _context_by_name(self) -> Mapping[str, int]:
        return {name: i for i, name in enumerate(self.context_names)}

    def context_position(self, name: str) -> int:
        try:
            return self._context_by_name[name]
        except KeyError:
            raise UnknownAtomError(f"no context named {name!r}") from None

    def context_atoms(self, name: str) -> tuple[str, ...]:
        return self.contexts[self.context_position(name)]

    def to_json_dict(self) -> dict:
        return {
            "atoms": list(self.atoms),
            "contexts": [
                {"name": name, "atoms": list(ctx)}
                for name, ctx in zip(self.context_names, self.contexts)
            ],
        }

    def dumps(self) -> str:
        from .numeric import dumps

        return dumps(self.to_json_dict())


def build_event_structure(
    atoms: Sequence[str],
    contexts: Sequence[Iterable[str]],
    context_names: Sequence[str] | None = None,
) -> EventStructure:
    """Validate raw atom and context listings into an EventStructure.

    Checks, in order: atoms are non-empty unique strings; every context
    is non-empty, mentions only declared atoms, and repeats none of them;
    no two contexts have the same atom set or the same name; every atom
    occurs in at least one context.
    """
    atom_list: list[str] = []
    seen: set[str] = set()
    for a in atoms:
        if not isinstance(a, str) or not a:
            raise ValidationError(f"atom names must be non-empty strings, got {a!r}")
        if a in seen:
            raise DuplicateAtomError(f"atom {a!r} declared twice")
        seen.add(a)
        atom_list.append(a)
    if not atom_list:
        raise ValidationError("an event structure needs at least one atom")

    index = {a: i for i, a in enumerate(atom_list)}
    if context_names is None:
        names = [f"C{i + 1}" for i in range(len(contexts))]
    else:
        names = [str(n) for n in context_names]
        if len(names) != len(contexts):
            raise ValidationError("one name per context is required")

    canon: list[tuple[str, ...]] = []
    for name, raw in zip(names, contexts):
        members = list(raw)
        if not members:
            raise EmptyContextError(f"context {name!r} is empty")
        ctx_seen: set[str] = set()
        for a in members:
            if a not in index:
                raise UnknownAtomError(f"context {name!r} uses undeclared atom {a!r}")
            if a in ctx_seen:
                raise DuplicateAtomError(f"context {name!r} repeats atom {a!r}")
            ctx_seen.add(a)
        canon.append(tuple(sorted(members, key=index.__getitem__)))

    if len(set(names)) != len(names):
        raise DuplicateContextError("context names must be unique")
    sets = [frozenset(c) for c in canon]
    if len(set(sets)) != len(sets):
        raise DuplicateContextError("two contexts have the same atom set")

    covered = set().union(*sets) if sets else set()
    missing = [a for a in atom_list if a not in covered]
    if missing:
        raise ValidationError(
            "every atom must occur in some context; missing: " + ", ".join(missing)
        )

    return EventStructure(tuple(atom_list), tuple(canon), tuple(names))


def cycle_logic(n: int) -> EventStructure:
    """The n-cycle logic: contexts ``Ci = {ai, a(i+1 mod n), xi}``.

    Adjacent contexts share one cyclic atom, so the contexts themselves
    form a single closed ring.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 3:
        raise InvalidCycleLengthError(f"cycle length must be an integer >= 3, got {n!r}")
    atoms = [f"a{i}" for i in range(1, n + 1)] + [f"x{i}" for i in range(1, n + 1)]
    contexts = [
        (f"a{i}", f"a{i % n + 1}", f"x{i}") for i in range(1, n + 1)
    ]
    names = [f"C{i}" for i in range(1, n + 1)]
    return build_event_structure(atoms, contexts, names)


@dataclass(frozen=True)
class CycleForm:
    """Recognised cycle shape: length plus the two atom families."""

    n: int
    cyclic_atoms: tuple[str, ...]
    extra_atoms: tuple[str, ...]


def cycle_form(structure: EventStructure) -> CycleForm:
    """Match a structure against the n-cycle logic, or raise.

    Recognition is structural on atom names and context sets, so a
    JSON round trip or a reordered construction still counts.
    """
    n = len(structure.contexts)
    if n >= 3:
        reference = cycle_logic(n)
        if set(structure.atoms) == set(reference.atoms) and set(
            structure.context_sets
        ) == set(reference.context_sets):
            return CycleForm(n, tuple(reference.atoms[:n]), tuple(reference.atoms[n:]))
    raise NotACycleStructureError(
        "structure is not an n-cycle of three-atom contexts"
    )


@dataclass(frozen=True)
class IncidenceIndex:
    """Which contexts contain each atom, and what context pairs share.

    ``shared_atoms`` holds one entry per unordered context pair with a
    non-empty overlap, keyed by names in context order.
    """

    structure: EventStructure
    contexts_of: Mapping[str, tuple[str, ...]]
    shared_atoms: Mapping[tuple[str, str], tuple[str, ...]]

    def contexts_containing(self, atom: str) -> tuple[str, ...]:
        try:
            return self.contexts_of[atom]
        except KeyError:
            raise UnknownAtomError(f"unknown atom {atom!r}") from None

    def shared(self, name_a: str, name_b: str) -> tuple[str, ...]:
        i = self.structure.context_position(name_a)
        j = self.structure.context_position(name_b)
        if i == j:
            raise ValidationError("a context does not overlap itself here")
        if i > j:
            name_a, name_b = name_b, name_a
        return self.shared_atoms.get((name_a, name_b), ())


def incidence(structure: EventStructure) -> IncidenceIndex:
    contexts_of: dict[str, list[str]] = {a: [] for a in structure.atoms}
    for name, ctx in zip(structure.context_names, structure.contexts):
        for a in ctx:
            contexts_of[a].append(name)
    shared: dict[tuple[str, str], tuple[str, ...]] = {}
    names = structure.context_names
    sets = structure.context_sets
    order = structure.atom_index
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            common = sets[i] & sets[j]
            if common:
                shared[(names[i], names[j])] = tuple(
                    sorted(common, key=order.__getitem__)
                )
    return IncidenceIndex(
        structure,
        {a: tuple(cs) for a, cs in contexts_of.items()},
        shared,
    )


def connected_components(structure: EventStructure) -> tuple[frozenset[str], ...]:
    """Partition atoms by context-sharing connectivity.

    Two atoms are connected when some chain of contexts links them; the
    components come back ordered by their earliest atom.
    """
    parent = {a: a for a in structure.atoms}

    def find(a: str) -> str:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for ctx in structure.contexts:
        root = find(ctx[0])
        for a in ctx[1:]:
            parent[find(a)] = root

    groups: dict[str, list[str]] = {}
    for a in structure.atoms:
        groups.setdefault(find(a), []).append(a)
    ordered = sorted(groups.values(), key=lambda g: structure.atom_index[g[0]])
    return tuple(frozenset(g) for g in ordered)


def _require_keys(doc: Mapping, allowed: set[str], required: set[str], what: str) -> None:
    if not isinstance(doc, Mapping):
        raise SchemaError(f"{what} must be a JSON object")
    unknown = set(doc) - allowed
    if unknown:
        raise SchemaError(f"{what} has unknown fields: {', '.join(sorted(unknown))}")
    missing = required - set(doc)
    if missing:
        raise SchemaError(f"{what} is missing fields: {', '.join(sorted(missing))}")


def structure_from_json_dict(doc: Mapping) -> EventStructure:
    """Parse ``{"atoms": [...], "contexts": [{"name":..., "atoms": [...]}]}``.

    Field order is irrelevant; unknown fields are rejected.
    """
    _require_keys(doc, {"atoms", "contexts"}, {"atoms", "contexts"}, "structure")
    atoms = doc["atoms"]
    if not isinstance(atoms, list):
        raise SchemaError("'atoms' must be a list of names")
    raw = doc["contexts"]
    if not isinstance(raw, list):
        raise SchemaError("'contexts' must be a list of objects")
    contexts = []
    names = []
    for k, entry in enumerate(raw):
        _require_keys(entry, {"name", "atoms"}, {"atoms"}, f"context #{k + 1}")
        if not isinstance(entry["atoms"], list):
            raise SchemaError(f"context #{k + 1}: 'atoms' must be a list")
        contexts.append(entry["atoms"])
        names.append(entry.get("name", f"C{k + 1}"))
    return build_event_structure(atoms, contexts, names)


def structure_from_json(text: str) -> EventStructure:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return structure_from_json_dict(doc)
