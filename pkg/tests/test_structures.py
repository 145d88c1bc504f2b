import json

import pytest

import pastedlogic as pl
from pastedlogic import (
    DuplicateAtomError,
    DuplicateContextError,
    EmptyContextError,
    InvalidCycleLengthError,
    NotACycleStructureError,
    SchemaError,
    UnknownAtomError,
    ValidationError,
)


class TestCycleLogic:
    def test_pentagon_shape(self, pentagon):
        assert pentagon.atoms == (
            "a1", "a2", "a3", "a4", "a5", "x1", "x2", "x3", "x4", "x5",
        )
        assert pentagon.context_names == ("C1", "C2", "C3", "C4", "C5")
        assert pentagon.context_atoms("C1") == ("a1", "a2", "x1")
        assert pentagon.context_atoms("C5") == ("a1", "a5", "x5")

    @pytest.mark.parametrize("n", [3, 4, 5, 7, 12])
    def test_every_context_has_three_atoms(self, n):
        structure = pl.cycle_logic(n)
        assert len(structure.atoms) == 2 * n
        assert all(len(ctx) == 3 for ctx in structure.contexts)
        inc = pl.incidence(structure)
        for i in range(1, n + 1):
            assert len(inc.contexts_of[f"a{i}"]) == 2
            assert inc.contexts_of[f"x{i}"] == (f"C{i}",)

    @pytest.mark.parametrize("n", [1, 2, 0, -3, 2.5, True])
    def test_bad_lengths_rejected(self, n):
        with pytest.raises(InvalidCycleLengthError):
            pl.cycle_logic(n)

    def test_adjacent_contexts_share_one_atom(self, pentagon):
        inc = pl.incidence(pentagon)
        assert inc.shared("C1", "C2") == ("a2",)
        assert inc.shared("C2", "C1") == ("a2",)
        assert inc.shared("C5", "C1") == ("a1",)
        assert inc.shared("C1", "C3") == ()


class TestBuildValidation:
    def test_duplicate_atom(self):
        with pytest.raises(DuplicateAtomError):
            pl.build_event_structure(["a", "a"], [["a"]])

    def test_empty_context(self):
        with pytest.raises(EmptyContextError):
            pl.build_event_structure(["a"], [["a"], []])

    def test_undeclared_atom(self):
        with pytest.raises(UnknownAtomError):
            pl.build_event_structure(["a"], [["a", "b"]])

    def test_atom_repeated_inside_context(self):
        with pytest.raises(DuplicateAtomError):
            pl.build_event_structure(["a", "b"], [["a", "b", "a"]])

    def test_duplicate_context_set(self):
        with pytest.raises(DuplicateContextError):
            pl.build_event_structure(["a", "b"], [["a", "b"], ["b", "a"]])

    def test_duplicate_context_name(self):
        with pytest.raises(DuplicateContextError):
            pl.build_event_structure(
                ["a", "b", "c"], [["a", "b"], ["b", "c"]], ["C", "C"]
            )

    def test_uncovered_atom(self):
        with pytest.raises(ValidationError, match="every atom must occur"):
            pl.build_event_structure(["a", "b", "c"], [["a", "b"]])

    def test_contexts_sorted_by_atom_order(self):
        structure = pl.build_event_structure(
            ["p", "q", "r"], [["r", "p"], ["q", "r"]]
        )
        assert structure.contexts == (("p", "r"), ("q", "r"))
        assert structure.context_names == ("C1", "C2")


class TestCycleForm:
    def test_recognizes_generated_cycles(self):
        for n in (3, 5, 8):
            form = pl.cycle_form(pl.cycle_logic(n))
            assert form.n == n
            assert form.cyclic_atoms == tuple(f"a{i}" for i in range(1, n + 1))
            assert form.extra_atoms == tuple(f"x{i}" for i in range(1, n + 1))

    def test_recognizes_reordered_construction(self):
        ref = pl.cycle_logic(4)
        shuffled = pl.build_event_structure(
            list(reversed(ref.atoms)),
            [list(reversed(ctx)) for ctx in reversed(ref.contexts)],
        )
        assert pl.cycle_form(shuffled).n == 4

    def test_rejects_non_cycles(self, pentagon):
        chain = pl.build_event_structure(
            ["a", "b", "c"], [["a", "b"], ["b", "c"]]
        )
        with pytest.raises(NotACycleStructureError):
            pl.cycle_form(chain)
        rename = lambda a: "y1" if a == "a1" else a
        renamed = pl.build_event_structure(
            [rename(a) for a in pentagon.atoms],
            [[rename(a) for a in c] for c in pentagon.contexts],
        )
        with pytest.raises(NotACycleStructureError):
            pl.cycle_form(renamed)


class TestConnectivity:
    def test_single_cycle_is_one_component(self, pentagon):
        components = pl.connected_components(pentagon)
        assert components == (frozenset(pentagon.atoms),)

    def test_disjoint_union_splits(self):
        a = pl.cycle_logic(3)
        atoms = list(a.atoms) + [f"{name}b" for name in a.atoms]
        contexts = [list(c) for c in a.contexts] + [
            [f"{name}b" for name in c] for c in a.contexts
        ]
        both = pl.build_event_structure(atoms, contexts)
        components = pl.connected_components(both)
        assert len(components) == 2
        assert components[0] == frozenset(a.atoms)

    def test_incidence_unknown_atom(self, pentagon):
        inc = pl.incidence(pentagon)
        with pytest.raises(UnknownAtomError):
            inc.contexts_containing("z9")


class TestJsonRoundTrip:
    def test_round_trip(self, pentagon):
        doc = pentagon.to_json_dict()
        again = pl.structure_from_json_dict(json.loads(json.dumps(doc)))
        assert again == pentagon

    def test_unknown_field_rejected(self, pentagon):
        doc = pentagon.to_json_dict()
        doc["extra"] = 1
        with pytest.raises(SchemaError, match="unknown fields"):
            pl.structure_from_json_dict(doc)

    def test_missing_field_rejected(self):
        with pytest.raises(SchemaError, match="missing fields"):
            pl.structure_from_json_dict({"atoms": ["a"]})

    def test_invalid_json_text(self):
        with pytest.raises(SchemaError, match="invalid JSON"):
            pl.structure_from_json("{not json")

    def test_names_optional_in_context_entries(self):
        structure = pl.structure_from_json_dict(
            {"atoms": ["a", "b"], "contexts": [{"atoms": ["a", "b"]}]}
        )
        assert structure.context_names == ("C1",)
