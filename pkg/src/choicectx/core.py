"""Core domain types for binary empirical/choice models.

A scenario is a finite set of binary variables (alternatives, measurements)
together with a cover of contexts (menus, experiments): the subsets of
variables that can be observed jointly.  A possibilistic model attaches to
each context the set of *events* that can occur there, where an event is
recorded as the subset of context variables that came out 1 (were chosen).

Everything here is immutable after construction and safe to share between
threads.  Canonical ordering is used throughout so that equal models have
equal representations: variables sort lexicographically, while contexts and
events sort shortlex (by size, then lexicographically as sorted tuples).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import UnboundVariable, UnknownContext, VariableNotInContext

VARIABLE_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")

Context = tuple[str, ...]
Event = frozenset[str]

# largest variable count the exhaustive 2^n strategies accept by default
EXHAUSTIVE_BOUND_DEFAULT = 24


def canonical_context(variables: Iterable[str]) -> Context:
    """Sorted tuple form of a context (or any variable collection)."""
    return tuple(sorted(set(variables)))


def shortlex(names: Iterable[str]) -> tuple[int, tuple[str, ...]]:
    """Sort key ordering variable sets by size, then lexicographically."""
    t = tuple(sorted(names))
    return (len(t), t)


def format_event(event: Iterable[str]) -> str:
    return "{" + ",".join(sorted(event)) + "}"


@dataclass(frozen=True)
class Scenario:
    """A variable set plus a cover of observable contexts.

    ``variables`` is lexicographically sorted; ``cover`` holds each context
    as a sorted tuple, with the cover itself in shortlex order.  Use
    :meth:`make` to build one from arbitrary iterables.
    """

    variables: tuple[str, ...]
    cover: tuple[Context, ...]

    @classmethod
    def make(cls, variables: Iterable[str], contexts: Iterable[Iterable[str]]) -> "Scenario":
        vs = tuple(sorted(set(variables)))
        cs = sorted({canonical_context(c) for c in contexts}, key=shortlex)
        return cls(variables=vs, cover=tuple(cs))

    @cached_property
    def variable_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.variables)}

    def has_context(self, context: Iterable[str]) -> bool:
        return canonical_context(context) in set(self.cover)

    def contexts_containing(self, variables: Iterable[str]) -> list[Context]:
        """Cover contexts that contain every given variable, in cover order."""
        want = set(variables)
        return [c for c in self.cover if want <= set(c)]


@dataclass(frozen=True, order=True)
class Assignment:
    """A partial or total map from variables to outcome bits {0, 1}.

    Stored as a sorted tuple of (variable, bit) pairs, so assignments are
    hashable and compare lexicographically; a total assignment on all
    scenario variables is a candidate global section.
    """

    bindings: tuple[tuple[str, int], ...]

    @classmethod
    def make(cls, mapping: Mapping[str, int] | Iterable[tuple[str, int]]) -> "Assignment":
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        return cls(bindings=tuple(sorted((v, int(b)) for v, b in items)))

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.bindings)

    def as_dict(self) -> dict[str, int]:
        return dict(self.bindings)

    def __getitem__(self, variable: str) -> int:
        for v, b in self.bindings:
            if v == variable:
                return b
        raise UnboundVariable(f"variable {variable!r} is not bound")

    def restrict(self, variables: Iterable[str]) -> "Assignment":
        """Restriction to a subset of the domain.

        Raises :class:`UnboundVariable` if any requested variable is unbound.
        """
        want = set(variables)
        missing = want - self.domain
        if missing:
            raise UnboundVariable(
                f"cannot restrict to unbound variable(s) {sorted(missing)}"
            )
        return Assignment(bindings=tuple((v, b) for v, b in self.bindings if v in want))

    def support(self) -> frozenset[str]:
        """The variables this assignment maps to 1."""
        return frozenset(v for v, b in self.bindings if b == 1)


def restrict(assignment: Assignment, variables: Iterable[str]) -> Assignment:
    return assignment.restrict(variables)


def support(assignment: Assignment) -> frozenset[str]:
    return assignment.support()


@dataclass(frozen=True, eq=True)
class PossibilisticModel:
    """Per-context sets of possible events over a scenario.

    ``supports`` maps each cover context (sorted tuple) to a frozenset of
    events; an event is the frozenset of context variables with outcome 1,
    so the all-zero outcome is the empty event.  Construction does not
    check invariants; run :func:`validate_model` for a verdict.
    """

    scenario: Scenario
    supports: Mapping[Context, frozenset[Event]] = field(hash=False)

    @classmethod
    def make(
        cls,
        scenario: Scenario,
        supports: Mapping[Iterable[str], Iterable[Iterable[str]]],
    ) -> "PossibilisticModel":
        canon: dict[Context, frozenset[Event]] = {}
        for context, events in supports.items():
            canon[canonical_context(context)] = frozenset(
                frozenset(e) for e in events
            )
        ordered = {
            c: canon[c] for c in sorted(canon, key=shortlex)
        }
        return cls(scenario=scenario, supports=ordered)

    def events(self, context: Iterable[str]) -> frozenset[Event]:
        key = canonical_context(context)
        try:
            return self.supports[key]
        except KeyError:
            raise UnknownContext(f"context {format_event(key)} is not in the cover") from None

    def events_sorted(self, context: Iterable[str]) -> list[Event]:
        """Events of a context in canonical (shortlex) order."""
        return sorted(self.events(context), key=shortlex)

    @cached_property
    def _chosen_sets(self) -> dict[Context, frozenset[str]]:
        return {
            c: frozenset().union(*events) if events else frozenset()
            for c, events in self.supports.items()
        }

    def chosen_set(self, context: Iterable[str]) -> frozenset[str]:
        """All variables that belong to at least one event of the context."""
        key = canonical_context(context)
        if key not in self.supports:
            raise UnknownContext(f"context {format_event(key)} is not in the cover")
        return self._chosen_sets[key]

    def chosen(self, variable: str, context: Iterable[str]) -> int:
        """1 iff ``variable`` occurs in some event of ``context``.

        This is the choice function of the context, read off the support.
        """
        key = canonical_context(context)
        if key not in self.supports:
            raise UnknownContext(f"context {format_event(key)} is not in the cover")
        if variable not in key:
            raise VariableNotInContext(
                f"variable {variable!r} is not in context {format_event(key)}"
            )
        return 1 if variable in self._chosen_sets[key] else 0


@dataclass(frozen=True)
class Verdict:
    """Outcome of a yes/no property check.

    ``witness`` is a structured counterexample, present exactly when the
    property fails; ``warnings`` carries non-fatal diagnostics.
    """

    holds: bool
    witness: Mapping[str, object] | None = field(default=None, hash=False)
    narrative: str = ""
    warnings: tuple[str, ...] = ()

    @property
    def status(self) -> str:
        return "Holds" if self.holds else "Fails"

    def __bool__(self) -> bool:
        return self.holds

    def to_doc(self) -> dict:
        return {
            "status": self.status,
            "witness": dict(self.witness) if self.witness is not None else None,
            "narrative": self.narrative,
            "warnings": list(self.warnings),
        }


def _passing(narrative: str, warnings: tuple[str, ...] = ()) -> Verdict:
    return Verdict(holds=True, witness=None, narrative=narrative, warnings=warnings)


def _failing(narrative: str, witness: Mapping[str, object]) -> Verdict:
    return Verdict(holds=False, witness=witness, narrative=narrative)


def validate_model(model: PossibilisticModel) -> Verdict:
    """Check every structural invariant of a possibilistic model.

    Returns a failing verdict for the first violated invariant, with the
    offending context/event as witness.  An empty support set C(U) is legal
    but reported as a warning: it rules out every global section.
    """
    scenario = model.scenario
    variables = set(scenario.variables)

    if not scenario.variables:
        return _failing("scenario declares no variables", {"reason": "empty-variables"})
    for v in scenario.variables:
        if not VARIABLE_RE.match(v):
            return _failing(
                f"variable name {v!r} is not a valid identifier",
                {"reason": "bad-variable-name", "variable": v},
            )

    seen: set[Context] = set()
    for context in scenario.cover:
        if not context:
            return _failing("cover contains an empty context", {"reason": "empty-context"})
        extra = set(context) - variables
        if extra:
            return _failing(
                f"context {format_event(context)} uses undeclared variable(s) {sorted(extra)}",
                {"reason": "unknown-variable", "context": list(context)},
            )
        if context in seen:
            return _failing(
                f"duplicate context {format_event(context)}",
                {"reason": "duplicate-context", "context": list(context)},
            )
        seen.add(context)

    covered = set().union(*map(set, scenario.cover)) if scenario.cover else set()
    uncovered = variables - covered
    if uncovered:
        return _failing(
            f"variable(s) {sorted(uncovered)} occur in no context",
            {"reason": "uncovered-variable", "variables": sorted(uncovered)},
        )

    cover_set = set(scenario.cover)
    for context in scenario.cover:
        if context not in model.supports:
            return _failing(
                f"no support entry for context {format_event(context)}",
                {"reason": "missing-support", "context": list(context)},
            )
    for context in model.supports:
        if context not in cover_set:
            return _failing(
                f"support entry for unknown context {format_event(context)}",
                {"reason": "unknown-context", "context": list(context)},
            )

    warnings: list[str] = []
    for context in scenario.cover:
        for event in model.events_sorted(context):
            if not event <= set(context):
                return _failing(
                    f"event {format_event(event)} is not a subset of context "
                    f"{format_event(context)}",
                    {
                        "reason": "event-outside-context",
                        "context": list(context),
                        "event": sorted(event),
                    },
                )
        if not model.supports[context]:
            warnings.append(
                f"context {format_event(context)} has an empty support set; "
                "no global section can exist"
            )

    return _passing("model is well-formed", warnings=tuple(warnings))
