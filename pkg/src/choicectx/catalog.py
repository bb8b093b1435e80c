"""Small ready-made models exercising every corner of the property space.

Each builder returns a fresh model; the docstrings record the ground truth
the test suite pins down.
"""

from __future__ import annotations

from .core import PossibilisticModel, Scenario
from .probabilistic import ProbabilisticModel, uniform_over_support


def bell_scenario() -> Scenario:
    """Two parties with two binary measurements each: variables a, a' on
    one side and b, b' on the other, one context per cross pairing."""
    return Scenario.make(
        ["a", "a'", "b", "b'"],
        [["a", "b"], ["a", "b'"], ["a'", "b"], ["a'", "b'"]],
    )


def _model(scenario: Scenario, supports: dict) -> PossibilisticModel:
    return PossibilisticModel.make(
        scenario,
        {
            context: {frozenset(event) for event in events}
            for context, events in supports.items()
        },
    )


def double_headed_coin() -> PossibilisticModel:
    """Non-contextual: one measurement is deterministically 1, the rest are
    free.  Eight global sections, every event realized."""
    return _model(
        bell_scenario(),
        {
            ("a", "b"): [{"a"}, {"a", "b"}],
            ("a", "b'"): [{"a"}, {"a", "b'"}],
            ("a'", "b"): [set(), {"a'"}, {"b"}, {"a'", "b"}],
            ("a'", "b'"): [set(), {"a'"}, {"b'"}, {"a'", "b'"}],
        },
    )


def hardy_table() -> PossibilisticModel:
    """Contextual but not strongly so: the all-zero event of the first
    context is realized by no global section, yet sections exist."""
    return _model(
        bell_scenario(),
        {
            ("a", "b"): [set(), {"a"}, {"b"}, {"a", "b"}],
            ("a", "b'"): [{"a"}, {"b'"}, {"a", "b'"}],
            ("a'", "b"): [{"a'"}, {"b"}, {"a'", "b"}],
            ("a'", "b'"): [set(), {"a'"}, {"b'"}],
        },
    )


def hardy_relabeled() -> PossibilisticModel:
    """The same shape with the forbidden corners moved: here the doubly
    occupied event of the first context is unrealizable."""
    return _model(
        bell_scenario(),
        {
            ("a", "b"): [set(), {"a"}, {"b"}, {"a", "b"}],
            ("a", "b'"): [set(), {"a"}, {"b'"}],
            ("a'", "b"): [set(), {"a'"}, {"b"}],
            ("a'", "b'"): [{"a'"}, {"b'"}, {"a'", "b'"}],
        },
    )


def pr_box() -> PossibilisticModel:
    """Strongly contextual: perfect correlation on three contexts and
    perfect anticorrelation on the fourth leave no global section."""
    return _model(
        bell_scenario(),
        {
            ("a", "b"): [set(), {"a", "b"}],
            ("a", "b'"): [set(), {"a", "b'"}],
            ("a'", "b"): [set(), {"a'", "b"}],
            ("a'", "b'"): [{"a'"}, {"b'"}],
        },
    )


def pr_box_distribution() -> ProbabilisticModel:
    """The fifty-fifty distribution over each context of :func:`pr_box`;
    saturates the inequality bound with excess exactly 1."""
    return uniform_over_support(pr_box())


def hardy_distribution() -> ProbabilisticModel:
    """Uniform distribution over each context's support of
    :func:`hardy_table`."""
    return uniform_over_support(hardy_table())


def luce_raiffa() -> PossibilisticModel:
    """The diner who takes salmon from the short menu but steak from the
    long one: a weak-axiom violation on an intersection-closed cover."""
    return _model(
        Scenario.make(
            ["FrogLegs", "Salmon", "Steak"],
            [["Salmon", "Steak"], ["FrogLegs", "Salmon", "Steak"]],
        ),
        {
            ("Salmon", "Steak"): [{"Salmon"}],
            ("FrogLegs", "Salmon", "Steak"): [{"Steak"}],
        },
    )


def warp_noncontextual() -> PossibilisticModel:
    """Weak axiom holds, no-signalling holds, non-contextual: the same
    variable is chosen from both overlapping menus."""
    return _model(
        Scenario.make(["a", "b", "c"], [["a", "b"], ["a", "c"]]),
        {
            ("a", "b"): [{"a"}],
            ("a", "c"): [{"a"}],
        },
    )


def warp_contextual() -> PossibilisticModel:
    """Weak axiom holds vacuously (the chosen elements never meet the
    overlap), yet no global section exists."""
    return _model(
        Scenario.make(["a", "b", "c"], [["a", "b"], ["b", "c"]]),
        {
            ("a", "b"): [{"a"}],
            ("b", "c"): [{"b"}],
        },
    )


def warp_signalling() -> PossibilisticModel:
    """Weak axiom holds vacuously while the contexts disagree about x:
    chosen from the short menu, rejected from the long one."""
    return _model(
        Scenario.make(["x", "y", "z"], [["x", "y"], ["x", "y", "z"]]),
        {
            ("x", "y"): [{"x"}],
            ("x", "y", "z"): [{"z"}],
        },
    )
