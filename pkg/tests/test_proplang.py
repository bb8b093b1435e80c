import pytest
from hypothesis import given
from hypothesis import strategies as st

from choicectx import (
    And,
    Const,
    Not,
    NotMeasurable,
    Or,
    PropositionSyntaxError,
    UnknownVariable,
    Var,
    bell_scenario,
    measurement_context,
    parse_formula,
    parse_proposition,
    parse_propositions,
)


class TestParsing:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("a", Var("a")),
            ("a'", Var("a'")),
            ("1", Const(True)),
            ("0", Const(False)),
            ("!a", Not(Var("a"))),
            ("!!a", Not(Not(Var("a")))),
            ("a & b", And(Var("a"), Var("b"))),
            ("a | b", Or(Var("a"), Var("b"))),
            # precedence: ! binds tighter than &, & tighter than |
            ("!a & b", And(Not(Var("a")), Var("b"))),
            ("a | b & c", Or(Var("a"), And(Var("b"), Var("c")))),
            ("(a | b) & c", And(Or(Var("a"), Var("b")), Var("c"))),
            ("!(a | b)", Not(Or(Var("a"), Var("b")))),
            # left associativity
            ("a & b & c", And(And(Var("a"), Var("b")), Var("c"))),
            ("a | b | c", Or(Or(Var("a"), Var("b")), Var("c"))),
        ],
    )
    def test_grammar(self, text, expected):
        assert parse_formula(text) == expected

    def test_whitespace_is_free(self):
        assert parse_formula("  a&b ") == parse_formula("a & b")

    @pytest.mark.parametrize(
        "text, position",
        [
            ("a $ b", 2),
            ("", 0),
            ("a &", 3),
            ("(a", 2),
            ("a b", 2),
            ("& a", 0),
        ],
    )
    def test_syntax_errors_carry_position(self, text, position):
        with pytest.raises(PropositionSyntaxError) as err:
            parse_formula(text)
        assert err.value.position == position

    def test_error_carries_line(self):
        with pytest.raises(PropositionSyntaxError) as err:
            parse_formula("a &", line=7)
        assert err.value.line == 7


class TestEvaluation:
    def test_truth_table(self):
        phi = parse_formula("(a & b) | (!a & !b)")
        cases = {
            (0, 0): True,
            (0, 1): False,
            (1, 0): False,
            (1, 1): True,
        }
        for (a, b), expected in cases.items():
            assert phi.evaluate({"a": a, "b": b}) is expected

    def test_constants(self):
        assert Const(True).evaluate({})
        assert not Const(False).evaluate({})

    def test_variables(self):
        phi = parse_formula("a & (b | !a')")
        assert phi.variables() == {"a", "b", "a'"}

    def test_operator_builders(self):
        phi = (Var("a") & Var("b")) | ~Var("c")
        assert phi == Or(And(Var("a"), Var("b")), Not(Var("c")))


formulas = st.recursive(
    st.sampled_from([Var("a"), Var("b"), Var("a'"), Const(True), Const(False)]),
    lambda sub: st.one_of(
        sub.map(Not),
        st.tuples(sub, sub).map(lambda pair: And(*pair)),
        st.tuples(sub, sub).map(lambda pair: Or(*pair)),
    ),
    max_leaves=12,
)


class TestRendering:
    @given(formulas)
    def test_to_text_roundtrips_semantically(self, phi):
        again = parse_formula(phi.to_text())
        for code in range(8):
            binding = {
                "a": code & 1,
                "b": (code >> 1) & 1,
                "a'": (code >> 2) & 1,
            }
            assert phi.evaluate(binding) == again.evaluate(binding)

    def test_minimal_parens(self):
        assert parse_formula("a & (b | c)").to_text() == "a & (b | c)"
        assert parse_formula("a & b | c").to_text() == "a & b | c"
        assert parse_formula("!(a & b)").to_text() == "!(a & b)"


class TestScenarioChecks:
    def test_measurement_context_picks_first(self):
        s = bell_scenario()
        assert measurement_context(parse_formula("a & b"), s) == ("a", "b")
        assert measurement_context(parse_formula("b'"), s) == ("a", "b'")
        # constants fit in every context, so the canonically first wins
        assert measurement_context(Const(True), s) == ("a", "b")

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            parse_proposition("a & ghost", bell_scenario())

    def test_not_measurable(self):
        with pytest.raises(NotMeasurable):
            parse_proposition("a & a'", bell_scenario())

    def test_parse_proposition_accepts_measurable(self):
        phi = parse_proposition("a & !b", bell_scenario())
        assert phi == And(Var("a"), Not(Var("b")))


class TestPropositionFiles:
    def test_lines_comments_blanks(self):
        text = "# correlations\n\na & b\n\n!a' | b\n"
        props = parse_propositions(text, bell_scenario())
        assert props == [
            And(Var("a"), Var("b")),
            Or(Not(Var("a'")), Var("b")),
        ]

    def test_errors_carry_line_numbers(self):
        with pytest.raises(PropositionSyntaxError) as err:
            parse_propositions("a & b\na &\n", bell_scenario())
        assert err.value.line == 2

    def test_semantic_errors_surface(self):
        with pytest.raises(NotMeasurable):
            parse_propositions("a & b\nb & b'\n", bell_scenario())
