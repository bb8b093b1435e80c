"""Choice axioms, cover-shape properties, and the combined audit.

Throughout, the choice function of a context is read off its support:
``chosen(x, U) = 1`` iff ``x`` belongs to at least one event of ``C(U)``.
Each check returns a :class:`Verdict` whose witness, when the property
fails, is the canonically first counterexample under cover order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import PossibilisticModel, Scenario, Verdict, _failing, _passing
from .contextuality import Classification, Kind, classify

_REGION_KIND = {
    Kind.NONCONTEXTUAL: "non-contextual",
    Kind.CONTEXTUAL: "contextual",
    Kind.STRONGLY_CONTEXTUAL: "strongly contextual",
}


def check_weak_axiom(model: PossibilisticModel) -> Verdict:
    """Weak axiom of revealed preference.

    For contexts A, B and variables x, y in both: if x is chosen in A and
    y is chosen in B, then x must be chosen in B.  A violation witness is
    the canonically first (A, B, x, y): context pairs in cover order, then
    x and y each minimal.
    """
    cover = model.scenario.cover
    for a in cover:
        chosen_a = model.chosen_set(a)
        for b in cover:
            if a == b:
                continue
            shared = sorted(set(a) & set(b))
            if not shared:
                continue
            chosen_b = model.chosen_set(b)
            ys = [y for y in shared if y in chosen_b]
            if not ys:
                continue
            for x in shared:
                if x in chosen_a and x not in chosen_b:
                    return _failing(
                        f"{x!r} is chosen from {list(a)} and rejected from "
                        f"{list(b)} even though {ys[0]!r} is chosen there",
                        {
                            "context_a": list(a),
                            "context_b": list(b),
                            "x": x,
                            "y": ys[0],
                        },
                    )
    return _passing("no pair of contexts reveals a preference reversal")


def check_no_signalling(model: PossibilisticModel) -> Verdict:
    """Whether overlapping contexts agree on their shared choice functions.

    A violation witness is the canonically first (A, B, z) with z in both
    contexts but chosen in exactly one of them.
    """
    cover = model.scenario.cover
    for a, b in combinations(cover, 2):
        shared = sorted(set(a) & set(b))
        if not shared:
            continue
        chosen_a = model.chosen_set(a)
        chosen_b = model.chosen_set(b)
        for z in shared:
            if (z in chosen_a) != (z in chosen_b):
                in_a, not_in = (a, b) if z in chosen_a else (b, a)
                return _failing(
                    f"{z!r} is chosen from {list(in_a)} but not from "
                    f"{list(not_in)}",
                    {
                        "context_a": list(a),
                        "context_b": list(b),
                        "variable": z,
                    },
                )
    return _passing("overlapping contexts agree on every shared variable")


def intersection_closed(scenario: Scenario) -> Verdict:
    """Whether every nonempty intersection of two distinct cover contexts
    is itself a cover context."""
    cover = scenario.cover
    present = set(cover)
    for a, b in combinations(cover, 2):
        meet = set(a) & set(b)
        if meet and tuple(sorted(meet)) not in present:
            return _failing(
                f"{sorted(meet)} is the intersection of {list(a)} and "
                f"{list(b)} but is not a context",
                {
                    "context_a": list(a),
                    "context_b": list(b),
                    "intersection": sorted(meet),
                },
            )
    return _passing("the cover is closed under nonempty intersections")


def overlap_property(model: PossibilisticModel) -> Verdict:
    """Whether every overlapping pair of distinct contexts has a chosen
    variable inside the overlap, on both sides.

    Disjoint pairs are skipped; the quantifier runs over distinct contexts
    with nonempty intersection.
    """
    cover = model.scenario.cover
    for a, b in combinations(cover, 2):
        shared = set(a) & set(b)
        if not shared:
            continue
        for side, other in ((a, b), (b, a)):
            if not (shared & model.chosen_set(side)):
                return _failing(
                    f"nothing in the overlap {sorted(shared)} is chosen "
                    f"from {list(side)}",
                    {
                        "context_a": list(a),
                        "context_b": list(b),
                        "overlap": sorted(shared),
                        "empty_side": list(side),
                    },
                )
    return _passing("every overlapping context pair chooses inside the overlap")


def is_choice_structure(model: PossibilisticModel) -> Verdict:
    """Whether every context has exactly one event, i.e. the model is a
    single-valued choice structure rather than a multi-valued one."""
    for context in model.scenario.cover:
        count = len(model.events(context))
        if count != 1:
            return _failing(
                f"context {list(context)} has {count} events instead of 1",
                {"context": list(context), "event_count": count},
            )
    return _passing("every context has exactly one event")


@dataclass(frozen=True)
class TheoremCheck:
    """One structural implication, instantiated on a concrete model.

    ``applicable`` is whether the hypothesis holds here; ``consistent`` is
    whether the conclusion then holds too (vacuously true when not
    applicable).  An inconsistent check would falsify the implication.
    """

    id: str
    applicable: bool
    consistent: bool
    detail: str

    def to_doc(self) -> dict:
        return {
            "id": self.id,
            "applicable": self.applicable,
            "consistent": self.consistent,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class AuditReport:
    """Every axiom verdict, the classification, and the implication checks
    for one model."""

    weak_axiom: Verdict
    no_signalling: Verdict
    intersection_closed: Verdict
    overlap_property: Verdict
    choice_structure: Verdict
    classification: Classification
    theorem_checks: tuple[TheoremCheck, ...]

    def region(self) -> str:
        """Human-readable cell of the axiom/contextuality landscape."""
        warp = "weak axiom holds" if self.weak_axiom.holds else "weak axiom fails"
        signal = "no-signalling" if self.no_signalling.holds else "signalling"
        return f"{warp}; {signal}; {_REGION_KIND[self.classification.kind]}"

    def to_doc(self) -> dict:
        return {
            "weak_axiom": self.weak_axiom.to_doc(),
            "no_signalling": self.no_signalling.to_doc(),
            "intersection_closed": self.intersection_closed.to_doc(),
            "overlap_property": self.overlap_property.to_doc(),
            "choice_structure": self.choice_structure.to_doc(),
            "classification": self.classification.to_doc(),
            "theorems": [check.to_doc() for check in self.theorem_checks],
        }


def _has_disjoint_pair(scenario: Scenario) -> bool:
    return any(
        not (set(a) & set(b)) for a, b in combinations(scenario.cover, 2)
    )


def audit(model: PossibilisticModel, deadline: float | None = None) -> AuditReport:
    """Run every axiom check, classify, and test each implication on the
    result."""
    warp = check_weak_axiom(model)
    signalling = check_no_signalling(model)
    closed = intersection_closed(model.scenario)
    overlap = overlap_property(model)
    single = is_choice_structure(model)
    classification = classify(model, deadline)

    kind = classification.kind
    checks = []

    applicable = closed.holds and not warp.holds
    if not closed.holds:
        detail = "not applicable: the cover is not intersection-closed"
    elif warp.holds:
        detail = "not applicable: the weak axiom holds"
    else:
        detail = (
            "weak axiom fails on an intersection-closed cover; "
            f"classified {kind}"
        )
    checks.append(
        TheoremCheck(
            id="warp-failure-implies-contextual",
            applicable=applicable,
            consistent=not applicable or kind is not Kind.NONCONTEXTUAL,
            detail=detail,
        )
    )

    applicable = signalling.holds
    detail = (
        f"no-signalling holds; weak axiom {warp.status}"
        if applicable
        else "not applicable: the model signals"
    )
    checks.append(
        TheoremCheck(
            id="no-signalling-implies-warp",
            applicable=applicable,
            consistent=not applicable or warp.holds,
            detail=detail,
        )
    )

    applicable = warp.holds and overlap.holds
    if not warp.holds:
        detail = "not applicable: the weak axiom fails"
    elif not overlap.holds:
        detail = "not applicable: the overlap property fails"
    else:
        detail = (
            "weak axiom and overlap property hold; "
            f"no-signalling {signalling.status}"
        )
    if _has_disjoint_pair(model.scenario):
        detail += " (cover has disjoint context pairs, skipped by the overlap quantifier)"
    checks.append(
        TheoremCheck(
            id="warp-and-overlap-imply-no-signalling",
            applicable=applicable,
            consistent=not applicable or signalling.holds,
            detail=detail,
        )
    )

    applicable = warp.holds and not signalling.holds
    detail = (
        "model realizes the weak-axiom-without-no-signalling region"
        if applicable
        else "this model does not separate the weak axiom from no-signalling"
    )
    checks.append(
        TheoremCheck(
            id="warp-strictly-weaker-than-no-signalling",
            applicable=applicable,
            consistent=True,
            detail=detail,
        )
    )

    return AuditReport(
        weak_axiom=warp,
        no_signalling=signalling,
        intersection_closed=closed,
        overlap_property=overlap,
        choice_structure=single,
        classification=classification,
        theorem_checks=tuple(checks),
    )
