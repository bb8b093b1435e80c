import math

import pytest

from choicectx import (
    Assignment,
    Const,
    NotContradictory,
    NotMeasurable,
    PossibilisticModel,
    ProbabilisticModel,
    Scenario,
    TooLarge,
    UnknownContext,
    Var,
    bell_scenario,
    bell_violation,
    classify,
    double_headed_coin,
    eval_probability,
    hardy_distribution,
    hardy_table,
    jointly_contradictory,
    parse_formula,
    pr_box,
    pr_box_distribution,
    strong_contextuality_via_bell,
    support_propositions,
    support_reduction,
    uniform_over_support,
    validate_probabilistic,
    warp_contextual,
    warp_noncontextual,
    warp_signalling,
)
from choicectx.contextuality import Kind


def two_var_model(p00, p01, p10, p11):
    s = Scenario.make(["a", "b"], [["a", "b"]])
    return ProbabilisticModel.make(
        s,
        {
            ("a", "b"): [
                ({"a": 0, "b": 0}, p00),
                ({"a": 0, "b": 1}, p01),
                ({"a": 1, "b": 0}, p10),
                ({"a": 1, "b": 1}, p11),
            ]
        },
    )


class TestValidation:
    def test_valid(self):
        assert validate_probabilistic(pr_box_distribution()).holds
        assert validate_probabilistic(two_var_model(0.25, 0.25, 0.25, 0.25)).holds

    def test_sum_tolerance(self):
        off = two_var_model(0.25, 0.25, 0.25, 0.25 + 5e-10)
        assert validate_probabilistic(off).holds
        way_off = two_var_model(0.3, 0.25, 0.25, 0.25)
        verdict = validate_probabilistic(way_off)
        assert not verdict.holds
        assert verdict.witness["reason"] == "bad-total"

    def test_negative_probability(self):
        verdict = validate_probabilistic(two_var_model(0.5, 0.5, 0.5, -0.5))
        assert verdict.witness["reason"] == "negative-probability"

    def test_partial_assignment(self):
        s = Scenario.make(["a", "b"], [["a", "b"]])
        m = ProbabilisticModel.make(s, {("a", "b"): [({"a": 1}, 1.0)]})
        verdict = validate_probabilistic(m)
        assert verdict.witness["reason"] == "partial-assignment"

    def test_duplicate_assignment(self):
        s = Scenario.make(["a"], [["a"]])
        m = ProbabilisticModel.make(
            s, {("a",): [({"a": 1}, 0.5), ({"a": 1}, 0.5)]}
        )
        verdict = validate_probabilistic(m)
        assert verdict.witness["reason"] == "duplicate-assignment"

    def test_missing_context(self):
        s = Scenario.make(["a", "b"], [["a"], ["b"]])
        m = ProbabilisticModel.make(s, {("a",): [({"a": 1}, 1.0)]})
        verdict = validate_probabilistic(m)
        assert not verdict.holds
        assert verdict.witness["reason"] == "missing-support"

    def test_unknown_context_lookup(self):
        with pytest.raises(UnknownContext):
            pr_box_distribution().distribution(["a", "c"])


class TestSupportReduction:
    def test_pr_box_roundtrip(self):
        assert support_reduction(pr_box_distribution()) == pr_box()

    def test_threshold_drops_dust(self):
        tiny = 1e-12
        m = two_var_model(0.5 - tiny, tiny, 0.0, 0.5)
        reduced = support_reduction(m)
        assert reduced.events(["a", "b"]) == {
            frozenset(),
            frozenset({"a", "b"}),
        }

    def test_threshold_is_configurable(self):
        m = two_var_model(0.4, 0.1, 0.0, 0.5)
        reduced = support_reduction(m, threshold=0.2)
        assert reduced.events(["a", "b"]) == {
            frozenset(),
            frozenset({"a", "b"}),
        }

    def test_uniform_inverts_reduction(self):
        m = hardy_table()
        assert support_reduction(uniform_over_support(m)) == m

    def test_uniform_rejects_empty_support(self):
        s = Scenario.make(["a"], [["a"]])
        empty = PossibilisticModel.make(s, {("a",): []})
        with pytest.raises(ValueError):
            uniform_over_support(empty)


class TestEvalProbability:
    def test_pr_box_marginals(self):
        d = pr_box_distribution()
        assert eval_probability(parse_formula("a"), d) == 0.5
        assert eval_probability(parse_formula("a & b"), d) == 0.5
        assert eval_probability(parse_formula("a | b"), d) == 0.5
        assert eval_probability(parse_formula("(a & b) | (!a & !b)"), d) == 1.0
        assert eval_probability(parse_formula("(a & !b') | (!a & b')"), d) == 0.0

    def test_uses_first_containing_context(self):
        # P(a) is read from context (a, b), the canonically first with a
        d = pr_box_distribution()
        assert eval_probability(Var("a"), d) == 0.5

    def test_not_measurable(self):
        with pytest.raises(NotMeasurable):
            eval_probability(parse_formula("a & a'"), pr_box_distribution())

    def test_constant(self):
        assert eval_probability(Const(True), pr_box_distribution()) == 1.0


class TestJointlyContradictory:
    def test_empty_family_is_satisfiable(self):
        assert not jointly_contradictory([], bell_scenario())

    def test_single_contradiction(self):
        phi = parse_formula("a & !a")
        assert jointly_contradictory([phi], bell_scenario())

    def test_pairwise_satisfiable_jointly_not(self):
        s = Scenario.make(["a", "b"], [["a", "b"]])
        family = [
            parse_formula("a | b"),
            parse_formula("!a | b"),
            parse_formula("a | !b"),
            parse_formula("!a | !b"),
        ]
        assert jointly_contradictory(family, s)
        assert not jointly_contradictory(family[:3], s)

    def test_bound(self):
        s = Scenario.make([f"v{i}" for i in range(6)], [[f"v{i}" for i in range(6)]])
        with pytest.raises(TooLarge):
            jointly_contradictory([Var("v0")], s, bound=5)

    def test_checks_measurability(self):
        with pytest.raises(NotMeasurable):
            jointly_contradictory([parse_formula("a & a'")], bell_scenario())


class TestBellViolation:
    def test_pr_box_saturates(self):
        props = support_propositions(pr_box())
        violation = bell_violation(props, pr_box_distribution())
        assert abs(violation - 1.0) <= 1e-12

    def test_satisfiable_family_rejected(self):
        props = support_propositions(hardy_table())
        with pytest.raises(NotContradictory):
            bell_violation(props, hardy_distribution())

    def test_nontrivial_intermediate_value(self):
        # 7/8 agreement per context: each support formula has probability
        # 7/8, so the sum is 3.5 against the bound of 3
        def pair(u, v, same, diff):
            return [
                ({u: 0, v: 0}, same),
                ({u: 0, v: 1}, diff),
                ({u: 1, v: 0}, diff),
                ({u: 1, v: 1}, same),
            ]

        d = ProbabilisticModel.make(
            bell_scenario(),
            {
                ("a", "b"): pair("a", "b", 0.4375, 0.0625),
                ("a", "b'"): pair("a", "b'", 0.4375, 0.0625),
                ("a'", "b"): pair("a'", "b", 0.4375, 0.0625),
                ("a'", "b'"): pair("a'", "b'", 0.0625, 0.4375),
            },
        )
        assert validate_probabilistic(d).holds
        props = support_propositions(pr_box())
        violation = bell_violation(props, d)
        assert abs(violation - 0.5) <= 1e-12


class TestSupportPropositions:
    def test_one_formula_per_context(self):
        props = support_propositions(pr_box())
        assert len(props) == 4

    def test_formula_matches_membership(self):
        m = hardy_table()
        props = support_propositions(m)
        for context, phi in zip(m.scenario.cover, props):
            for code in range(1 << len(context)):
                binding = {
                    v: (code >> i) & 1 for i, v in enumerate(context)
                }
                inside = frozenset(v for v in context if binding[v]) in m.events(
                    context
                )
                assert phi.evaluate(binding) is inside

    def test_empty_support_becomes_false(self):
        s = Scenario.make(["a"], [["a"]])
        empty = PossibilisticModel.make(s, {("a",): []})
        assert support_propositions(empty) == [Const(False)]


class TestBellRoute:
    @pytest.mark.parametrize(
        "build, strong",
        [
            (double_headed_coin, False),
            (hardy_table, False),
            (pr_box, True),
            (warp_noncontextual, False),
            (warp_contextual, True),
            (warp_signalling, True),
        ],
        ids=lambda v: v.__name__ if callable(v) else str(v),
    )
    def test_agrees_with_classify(self, build, strong):
        m = build()
        assert strong_contextuality_via_bell(m) is strong
        assert (classify(m).kind is Kind.STRONGLY_CONTEXTUAL) is strong


class TestFsumDiscipline:
    def test_many_small_terms(self):
        # 2^10 equal slivers must sum to exactly 1.0 through math.fsum
        k = 10
        s = Scenario.make([f"v{i}" for i in range(k)], [[f"v{i}" for i in range(k)]])
        context = s.cover[0]
        p = 1.0 / (1 << k)
        d = ProbabilisticModel.make(
            s,
            {
                context: [
                    (
                        {v: (code >> i) & 1 for i, v in enumerate(context)},
                        p,
                    )
                    for code in range(1 << k)
                ]
            },
        )
        assert validate_probabilistic(d).holds
        assert eval_probability(Const(True), d) == 1.0
        total = math.fsum(
            eval_probability(Var(v), d) for v in s.variables
        )
        assert abs(total - k / 2) <= 1e-12
