"""Global sections and the contextuality hierarchy.

A global section is a total 0/1 assignment whose restriction to every cover
context is one of that context's events.  Classification then splits three
ways: every event is realized by some section (NonContextual), some event is
realized by no section (Contextual), or no section exists at all
(StronglyContextual).

Assignments are packed into bitmasks internally: variable ``j`` (in scenario
order) occupies bit ``n - 1 - j``, so ascending integers enumerate
assignments in lexicographic order and both search strategies emit sections
in the same order.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Iterator

from .core import (
    EXHAUSTIVE_BOUND_DEFAULT,
    Assignment,
    Context,
    Event,
    PossibilisticModel,
)
from .errors import DomainMismatch, TimeBudgetExceeded, TooLarge

_DEADLINE_STRIDE = 1024


class Kind(enum.Enum):
    NONCONTEXTUAL = "NonContextual"
    CONTEXTUAL = "Contextual"
    STRONGLY_CONTEXTUAL = "StronglyContextual"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Classification:
    """Outcome of ``classify``: the kind, one unrealizable event if any
    exists (the canonically first one), and the total section count."""

    kind: Kind
    witness_event: tuple[Context, Event] | None
    section_count: int

    @property
    def is_contextual(self) -> bool:
        return self.kind is not Kind.NONCONTEXTUAL

    def to_doc(self) -> dict:
        witness = None
        if self.witness_event is not None:
            context, event = self.witness_event
            witness = {"context": list(context), "event": sorted(event)}
        return {
            "kind": self.kind.value,
            "witness_event": witness,
            "section_count": self.section_count,
        }


def is_global_section(assignment: Assignment, model: PossibilisticModel) -> bool:
    """Whether a total assignment restricts into the support of every context."""
    scenario = model.scenario
    if assignment.domain != frozenset(scenario.variables):
        missing = sorted(frozenset(scenario.variables) - assignment.domain)
        extra = sorted(assignment.domain - frozenset(scenario.variables))
        parts = []
        if missing:
            parts.append(f"unbound variables {missing}")
        if extra:
            parts.append(f"extraneous variables {extra}")
        raise DomainMismatch("assignment is not total on the scenario: " + "; ".join(parts))
    ones = assignment.support()
    for context in scenario.cover:
        if frozenset(ones & set(context)) not in model.events(context):
            return False
    return True


class _Compiled:
    """Bitmask view of a model, shared by every search strategy."""

    def __init__(self, model: PossibilisticModel):
        scenario = model.scenario
        self.variables = scenario.variables
        self.n = len(scenario.variables)
        index = scenario.variable_index
        self.bit = {v: 1 << (self.n - 1 - index[v]) for v in scenario.variables}
        self.contexts: list[tuple[int, frozenset[int]]] = []
        for context in scenario.cover:
            cmask = self._mask(context)
            masks = frozenset(self._mask(event) for event in model.events(context))
            self.contexts.append((cmask, masks))
        # contexts become checkable once their highest-index variable is set
        self.completed_at: list[list[tuple[int, frozenset[int]]]] = [
            [] for _ in range(self.n)
        ]
        for context, compiled in zip(scenario.cover, self.contexts):
            last = max(index[v] for v in context)
            self.completed_at[last].append(compiled)

    def _mask(self, variables) -> int:
        mask = 0
        for v in variables:
            mask |= self.bit[v]
        return mask

    def decode(self, mask: int) -> Assignment:
        return Assignment.make(
            {v: 1 if mask & self.bit[v] else 0 for v in self.variables}
        )


def _scan_masks(compiled: _Compiled) -> Iterator[int]:
    for code in range(1 << compiled.n):
        if all(code & cmask in masks for cmask, masks in compiled.contexts):
            yield code


def _search_masks(compiled: _Compiled, deadline: float | None) -> list[int]:
    found: list[int] = []
    nodes = 0

    def extend(depth: int, acc: int) -> None:
        nonlocal nodes
        if deadline is not None:
            nodes += 1
            if nodes % _DEADLINE_STRIDE == 0 and time.monotonic() > deadline:
                raise TimeBudgetExceeded(
                    partial_sections=tuple(compiled.decode(m) for m in found)
                )
        if depth == compiled.n:
            found.append(acc)
            return
        for bit in (0, compiled.bit[compiled.variables[depth]]):
            candidate = acc | bit
            if all(
                candidate & cmask in masks
                for cmask, masks in compiled.completed_at[depth]
            ):
                extend(depth + 1, candidate)

    extend(0, 0)
    return found


def global_sections_bruteforce(
    model: PossibilisticModel, bound: int = EXHAUSTIVE_BOUND_DEFAULT
) -> list[Assignment]:
    """Enumerate all global sections by scanning every total assignment.

    Refuses scenarios with more than ``bound`` variables; kept deliberately
    naive so it can referee the backtracking search.
    """
    compiled = _Compiled(model)
    if compiled.n > bound:
        raise TooLarge(
            f"{compiled.n} variables exceed the exhaustive bound of {bound}"
        )
    return [compiled.decode(mask) for mask in _scan_masks(compiled)]


def global_sections_backtracking(
    model: PossibilisticModel, deadline: float | None = None
) -> list[Assignment]:
    """Enumerate all global sections by depth-first search.

    Variables are assigned in scenario order and a branch is pruned as soon
    as a fully assigned context falls outside its support.  Emits sections
    in the same lexicographic order as the brute-force scan.  ``deadline``
    is a ``time.monotonic`` value; exceeding it raises
    :class:`TimeBudgetExceeded` carrying the sections found so far.
    """
    compiled = _Compiled(model)
    return [compiled.decode(mask) for mask in _search_masks(compiled, deadline)]


def classify(
    model: PossibilisticModel, deadline: float | None = None
) -> Classification:
    """Place a model in the hierarchy, with a witness for contextuality.

    The witness is the canonically first unrealized event: contexts are
    taken in cover order and events in shortlex order.
    """
    compiled = _Compiled(model)
    sections = _search_masks(compiled, deadline)
    if not sections:
        return Classification(Kind.STRONGLY_CONTEXTUAL, None, 0)
    for context, (cmask, _) in zip(model.scenario.cover, compiled.contexts):
        realized = {mask & cmask for mask in sections}
        for event in model.events_sorted(context):
            if compiled._mask(event) not in realized:
                return Classification(
                    Kind.CONTEXTUAL, (context, event), len(sections)
                )
    return Classification(Kind.NONCONTEXTUAL, None, len(sections))
