import pytest
from hypothesis import given
from hypothesis import strategies as st

from choicectx import (
    Assignment,
    PossibilisticModel,
    Scenario,
    UnboundVariable,
    UnknownContext,
    VariableNotInContext,
    canonical_context,
    format_event,
    restrict,
    support,
    validate_model,
)
from choicectx.core import shortlex

names = st.text(alphabet="abcxyz_'", min_size=1, max_size=4).filter(
    lambda s: not s[0].isdigit() and s[0] != "'"
)


class TestScenario:
    def test_variables_sorted(self):
        s = Scenario.make(["c", "a", "b"], [["b", "c"], ["a"]])
        assert s.variables == ("a", "b", "c")

    def test_cover_shortlex(self):
        # shorter contexts first, lexicographic within a length
        s = Scenario.make(
            ["a", "b", "c"], [["a", "b", "c"], ["b", "c"], ["a", "b"], ["c"]]
        )
        assert s.cover == (("c",), ("a", "b"), ("b", "c"), ("a", "b", "c"))

    def test_cover_dedupes(self):
        s = Scenario.make(["a", "b"], [["a", "b"], ["b", "a"]])
        assert s.cover == (("a", "b"),)

    def test_contexts_containing(self):
        s = Scenario.make(["a", "b", "c"], [["a", "b"], ["b", "c"], ["a", "b", "c"]])
        assert s.contexts_containing(["b"]) == [
            ("a", "b"),
            ("b", "c"),
            ("a", "b", "c"),
        ]
        assert s.contexts_containing(["a", "c"]) == [("a", "b", "c")]

    def test_has_context_is_order_insensitive(self):
        s = Scenario.make(["a", "b"], [["a", "b"]])
        assert s.has_context(["b", "a"])
        assert not s.has_context(["a"])

    @given(st.lists(names, min_size=1, max_size=6, unique=True))
    def test_make_invariant_under_input_order(self, variables):
        forward = Scenario.make(variables, [variables])
        backward = Scenario.make(list(reversed(variables)), [list(reversed(variables))])
        assert forward == backward


class TestShortlex:
    def test_size_dominates(self):
        assert shortlex(["z"]) < shortlex(["a", "b"])

    def test_lex_within_size(self):
        assert shortlex(["a", "z"]) < shortlex(["b", "c"])

    def test_canonical_context_sorts(self):
        assert canonical_context(["b", "a", "c"]) == ("a", "b", "c")


class TestAssignment:
    def test_make_sorts_bindings(self):
        a = Assignment.make({"b": 1, "a": 0})
        assert a.bindings == (("a", 0), ("b", 1))
        assert a.as_dict() == {"a": 0, "b": 1}

    def test_getitem(self):
        a = Assignment.make({"a": 1})
        assert a["a"] == 1
        with pytest.raises(UnboundVariable):
            a["b"]

    def test_restrict(self):
        a = Assignment.make({"a": 1, "b": 0, "c": 1})
        assert restrict(a, ["a", "c"]) == Assignment.make({"a": 1, "c": 1})
        with pytest.raises(UnboundVariable):
            restrict(a, ["d"])

    def test_support(self):
        a = Assignment.make({"a": 1, "b": 0, "c": 1})
        assert support(a) == {"a", "c"}

    def test_total_order_is_lexicographic(self):
        low = Assignment.make({"a": 0, "b": 1})
        high = Assignment.make({"a": 1, "b": 0})
        assert low < high

    @given(st.dictionaries(names, st.integers(0, 1), min_size=1, max_size=5))
    def test_roundtrip_dict(self, mapping):
        assert Assignment.make(mapping).as_dict() == mapping


class TestPossibilisticModel:
    @pytest.fixture
    def model(self):
        s = Scenario.make(["a", "b", "c"], [["a", "b"], ["b", "c"]])
        return PossibilisticModel.make(
            s,
            {
                ("a", "b"): [frozenset(), frozenset({"a"})],
                ("b", "c"): [frozenset({"b", "c"})],
            },
        )

    def test_events_keyed_canonically(self, model):
        assert model.events(["b", "a"]) == {frozenset(), frozenset({"a"})}
        with pytest.raises(UnknownContext):
            model.events(["a", "c"])

    def test_events_sorted(self, model):
        assert model.events_sorted(["a", "b"]) == [frozenset(), frozenset({"a"})]

    def test_chosen(self, model):
        assert model.chosen("a", ["a", "b"]) == 1
        assert model.chosen("b", ["a", "b"]) == 0
        assert model.chosen_set(["b", "c"]) == {"b", "c"}
        with pytest.raises(VariableNotInContext):
            model.chosen("c", ["a", "b"])
        with pytest.raises(UnknownContext):
            model.chosen("a", ["a", "c"])

    def test_equality_ignores_input_order(self):
        s = Scenario.make(["a", "b"], [["a", "b"]])
        one = PossibilisticModel.make(s, {("a", "b"): [frozenset({"a"})]})
        two = PossibilisticModel.make(s, {("b", "a"): [frozenset({"a"})]})
        assert one == two

    def test_format_event(self):
        assert format_event(frozenset({"b", "a"})) == "{a,b}"
        assert format_event(frozenset()) == "{}"


class TestValidateModel:
    def good(self):
        s = Scenario.make(["a", "b"], [["a", "b"], ["a"]])
        return PossibilisticModel.make(
            s, {("a", "b"): [frozenset({"a"})], ("a",): [frozenset({"a"})]}
        )

    def test_valid(self):
        verdict = validate_model(self.good())
        assert verdict.holds
        assert verdict.warnings == ()

    def test_empty_support_warns_but_holds(self):
        s = Scenario.make(["a"], [["a"]])
        m = PossibilisticModel.make(s, {("a",): []})
        verdict = validate_model(m)
        assert verdict.holds
        assert len(verdict.warnings) == 1
        assert "empty support" in verdict.warnings[0]

    @pytest.mark.parametrize(
        "scenario, supports, reason",
        [
            (Scenario(variables=(), cover=()), {}, "empty-variables"),
            (
                Scenario(variables=("a", "9bad"), cover=(("9bad", "a"),)),
                {("9bad", "a"): frozenset()},
                "bad-variable-name",
            ),
            (
                Scenario(variables=("a",), cover=((),)),
                {(): frozenset()},
                "empty-context",
            ),
            (
                Scenario(variables=("a",), cover=(("a", "ghost"),)),
                {("a", "ghost"): frozenset()},
                "unknown-variable",
            ),
            (
                Scenario(variables=("a", "b"), cover=(("a",), ("a",), ("b",))),
                {("a",): frozenset(), ("b",): frozenset()},
                "duplicate-context",
            ),
            (
                Scenario(variables=("a", "b"), cover=(("a",),)),
                {("a",): frozenset()},
                "uncovered-variable",
            ),
            (
                Scenario(variables=("a", "b"), cover=(("a",), ("b",))),
                {("a",): frozenset()},
                "missing-support",
            ),
            (
                Scenario(variables=("a",), cover=(("a",),)),
                {("a",): frozenset(), ("a", "b"): frozenset()},
                "unknown-context",
            ),
            (
                Scenario(variables=("a", "b"), cover=(("a",), ("b",))),
                {
                    ("a",): frozenset({frozenset({"b"})}),
                    ("b",): frozenset(),
                },
                "event-outside-context",
            ),
        ],
    )
    def test_invariant_violations(self, scenario, supports, reason):
        # bypass the canonicalizing constructor to hit each defect
        m = PossibilisticModel(scenario=scenario, supports=supports)
        verdict = validate_model(m)
        assert not verdict.holds
        assert verdict.witness["reason"] == reason

    def test_verdict_to_doc(self):
        verdict = validate_model(self.good())
        doc = verdict.to_doc()
        assert doc == {
            "status": "Holds",
            "witness": None,
            "narrative": verdict.narrative,
            "warnings": [],
        }
