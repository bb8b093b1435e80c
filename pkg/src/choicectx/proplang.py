"""Boolean propositions over scenario variables.

Grammar (precedence ``!`` > ``&`` > ``|``, both binary connectives
left-associative)::

    formula := disj
    disj    := conj ("|" conj)*
    conj    := lit ("&" lit)*
    lit     := "!" lit | "(" formula ")" | IDENT | "1" | "0"

Identifiers follow variable syntax, so primed names like ``a'`` parse
directly.  ``parse_proposition`` additionally checks the formula against a
scenario: every variable must be declared and the variable set must fit
inside a single cover context, otherwise the formula has no measurement
context.  AST nodes support ``&``, ``|`` and ``~`` for programmatic
construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping

from .core import Context, Scenario
from .errors import NotMeasurable, PropositionSyntaxError, UnknownVariable


class Proposition:
    """Base class for formula nodes."""

    def evaluate(self, binding: Mapping[str, int]) -> bool:
        raise NotImplementedError

    def variables(self) -> frozenset[str]:
        raise NotImplementedError

    def to_text(self) -> str:
        raise NotImplementedError

    def __and__(self, other: "Proposition") -> "Proposition":
        return And(self, other)

    def __or__(self, other: "Proposition") -> "Proposition":
        return Or(self, other)

    def __invert__(self) -> "Proposition":
        return Not(self)


@dataclass(frozen=True)
class Var(Proposition):
    name: str

    def evaluate(self, binding: Mapping[str, int]) -> bool:
        return bool(binding[self.name])

    def variables(self) -> frozenset[str]:
        return frozenset((self.name,))

    def to_text(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const(Proposition):
    value: bool

    def evaluate(self, binding: Mapping[str, int]) -> bool:
        return self.value

    def variables(self) -> frozenset[str]:
        return frozenset()

    def to_text(self) -> str:
        return "1" if self.value else "0"


@dataclass(frozen=True)
class Not(Proposition):
    operand: Proposition

    def evaluate(self, binding: Mapping[str, int]) -> bool:
        return not self.operand.evaluate(binding)

    def variables(self) -> frozenset[str]:
        return self.operand.variables()

    def to_text(self) -> str:
        inner = self.operand.to_text()
        if isinstance(self.operand, (And, Or)):
            inner = f"({inner})"
        return f"!{inner}"


@dataclass(frozen=True)
class And(Proposition):
    left: Proposition
    right: Proposition

    def evaluate(self, binding: Mapping[str, int]) -> bool:
        return self.left.evaluate(binding) and self.right.evaluate(binding)

    def variables(self) -> frozenset[str]:
        return self.left.variables() | self.right.variables()

    def to_text(self) -> str:
        parts = []
        for child in (self.left, self.right):
            text = child.to_text()
            if isinstance(child, Or):
                text = f"({text})"
            parts.append(text)
        return " & ".join(parts)


@dataclass(frozen=True)
class Or(Proposition):
    left: Proposition
    right: Proposition

    def evaluate(self, binding: Mapping[str, int]) -> bool:
        return self.left.evaluate(binding) or self.right.evaluate(binding)

    def variables(self) -> frozenset[str]:
        return self.left.variables() | self.right.variables()

    def to_text(self) -> str:
        return f"{self.left.to_text()} | {self.right.to_text()}"


_TOKEN_RE = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<const>[01])
  | (?P<punct>[!&|()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str, line: int | None) -> Iterator[tuple[str, str, int]]:
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise PropositionSyntaxError(
                f"unexpected character {text[position]!r}", position, line
            )
        position = match.end()
        kind = match.lastgroup
        if kind != "space":
            yield kind, match.group(), match.start()
    yield "end", "", len(text)


class _Parser:
    def __init__(self, text: str, line: int | None):
        self.tokens = list(_tokenize(text, line))
        self.line = line
        self.at = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.at]

    def advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.at]
        self.at += 1
        return token

    def fail(self, message: str) -> PropositionSyntaxError:
        _, value, position = self.peek()
        what = f"{value!r}" if value else "end of input"
        return PropositionSyntaxError(f"{message}, found {what}", position, self.line)

    def formula(self) -> Proposition:
        node = self.conjunction()
        while self.peek()[:2] == ("punct", "|"):
            self.advance()
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Proposition:
        node = self.literal()
        while self.peek()[:2] == ("punct", "&"):
            self.advance()
            node = And(node, self.literal())
        return node

    def literal(self) -> Proposition:
        kind, value, _ = self.peek()
        if (kind, value) == ("punct", "!"):
            self.advance()
            return Not(self.literal())
        if (kind, value) == ("punct", "("):
            self.advance()
            node = self.formula()
            if self.peek()[:2] != ("punct", ")"):
                raise self.fail("expected ')'")
            self.advance()
            return node
        if kind == "ident":
            self.advance()
            return Var(value)
        if kind == "const":
            self.advance()
            return Const(value == "1")
        raise self.fail("expected a variable, constant, '!' or '('")


def parse_formula(text: str, line: int | None = None) -> Proposition:
    """Parse a formula with no scenario checks."""
    parser = _Parser(text, line)
    node = parser.formula()
    if parser.peek()[0] != "end":
        raise parser.fail("expected end of input")
    return node


def measurement_context(prop: Proposition, scenario: Scenario) -> Context:
    """The canonically first cover context containing all of the formula's
    variables; raises :class:`NotMeasurable` if no context does."""
    used = prop.variables()
    declared = set(scenario.variables)
    for name in sorted(used):
        if name not in declared:
            raise UnknownVariable(f"unknown variable {name!r}")
    contexts = scenario.contexts_containing(used)
    if not contexts:
        raise NotMeasurable(
            f"variables {sorted(used)} fit inside no cover context"
        )
    return contexts[0]


def parse_proposition(text: str, scenario: Scenario) -> Proposition:
    """Parse a formula and check it is measurable in the scenario."""
    node = parse_formula(text)
    measurement_context(node, scenario)
    return node


def parse_propositions(text: str, scenario: Scenario) -> list[Proposition]:
    """Parse a proposition file: one formula per line, blank lines and
    ``#`` comment lines ignored.  Syntax errors carry the line number."""
    props = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        node = parse_formula(raw, lineno)
        measurement_context(node, scenario)
        props.append(node)
    return props
