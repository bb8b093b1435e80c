"""Canonical JSON document format for models.

A document declares the scenario and exactly one of a possibilistic support
table or a per-context probability distribution:

    {
      "variables": ["a", "a'", "b", "b'"],
      "contexts": [["a", "b"], ["a", "b'"], ["a'", "b"], ["a'", "b'"]],
      "possibilistic": [
        {"context": ["a", "b"], "events": [[], ["a"], ["b"], ["a", "b"]]},
        ...
      ]
    }

    "probabilistic": [
      {"context": ["a", "b"],
       "distribution": [{"assignment": {"a": 1, "b": 1}, "p": 0.25}, ...]},
      ...
    ]

Input is order-insensitive; output is canonically sorted and deterministic,
so ``parse_model(serialize_model(m))`` is the identity on valid models and
serialization is byte-stable.  Unknown keys are rejected.
"""

from __future__ import annotations

import json
from typing import Any

from .core import (
    VARIABLE_RE,
    Assignment,
    PossibilisticModel,
    Scenario,
    canonical_context,
)
from .errors import ModelSemanticError, ModelSyntaxError
from .probabilistic import ProbabilisticModel

Model = PossibilisticModel | ProbabilisticModel

_TOP_KEYS = {"variables", "contexts", "possibilistic", "probabilistic"}


def _require(condition: bool, message: str, path: str) -> None:
    if not condition:
        raise ModelSemanticError(message, path)


def _string_list(value: Any, path: str) -> list[str]:
    _require(isinstance(value, list), "expected an array", path)
    out = []
    for i, item in enumerate(value):
        _require(isinstance(item, str), "expected a string", f"{path}[{i}]")
        out.append(item)
    return out


def _variable_names(value: Any, path: str) -> list[str]:
    names = _string_list(value, path)
    for i, name in enumerate(names):
        _require(
            VARIABLE_RE.match(name) is not None,
            f"invalid variable name {name!r}",
            f"{path}[{i}]",
        )
    _require(len(set(names)) == len(names), "duplicate variable name", path)
    _require(len(names) > 0, "at least one variable is required", path)
    return names


def _context_of(value: Any, known: set[str], path: str) -> tuple[str, ...]:
    names = _string_list(value, path)
    _require(len(names) > 0, "context must be nonempty", path)
    for i, name in enumerate(names):
        _require(name in known, f"unknown variable {name!r}", f"{path}[{i}]")
    _require(len(set(names)) == len(names), "duplicate variable in context", path)
    return canonical_context(names)


def parse_model(text: str) -> Model:
    """Parse a model document.

    Raises :class:`ModelSyntaxError` for malformed JSON (with line/column)
    and :class:`ModelSemanticError` for format violations (with a path into
    the document).  The returned model always satisfies the structural
    invariants; distribution sums are left to ``validate_probabilistic``.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelSyntaxError(exc.msg, exc.lineno, exc.colno) from None

    _require(isinstance(doc, dict), "document must be a JSON object", "$")
    unknown = sorted(set(doc) - _TOP_KEYS)
    _require(not unknown, f"unknown key {unknown[0]!r}" if unknown else "", "$")
    _require("variables" in doc, "missing required key 'variables'", "$")
    _require("contexts" in doc, "missing required key 'contexts'", "$")
    has_poss = "possibilistic" in doc
    has_prob = "probabilistic" in doc
    _require(
        has_poss != has_prob,
        "exactly one of 'possibilistic' and 'probabilistic' is required",
        "$",
    )

    names = _variable_names(doc["variables"], "variables")
    known = set(names)

    _require(isinstance(doc["contexts"], list), "expected an array", "contexts")
    contexts: list[tuple[str, ...]] = []
    seen: set[tuple[str, ...]] = set()
    for i, raw in enumerate(doc["contexts"]):
        context = _context_of(raw, known, f"contexts[{i}]")
        _require(context not in seen, "duplicate context", f"contexts[{i}]")
        seen.add(context)
        contexts.append(context)

    covered = set().union(*map(set, contexts)) if contexts else set()
    uncovered = sorted(known - covered)
    _require(
        not uncovered,
        f"variable {uncovered[0]!r} occurs in no context" if uncovered else "",
        "contexts",
    )

    scenario = Scenario.make(names, contexts)
    if has_poss:
        return _parse_possibilistic(doc["possibilistic"], scenario, "possibilistic")
    return _parse_probabilistic(doc["probabilistic"], scenario, "probabilistic")


def _parse_possibilistic(
    value: Any, scenario: Scenario, path: str
) -> PossibilisticModel:
    _require(isinstance(value, list), "expected an array", path)
    cover = set(scenario.cover)
    supports: dict[tuple[str, ...], set[frozenset[str]]] = {}
    for i, entry in enumerate(value):
        epath = f"{path}[{i}]"
        _require(isinstance(entry, dict), "expected an object", epath)
        extra = sorted(set(entry) - {"context", "events"})
        _require(not extra, f"unknown key {extra[0]!r}" if extra else "", epath)
        _require("context" in entry, "missing key 'context'", epath)
        _require("events" in entry, "missing key 'events'", epath)
        context = _context_of(entry["context"], set(scenario.variables), f"{epath}.context")
        _require(context in cover, "context is not in the cover", f"{epath}.context")
        _require(context not in supports, "duplicate support entry", f"{epath}.context")
        _require(isinstance(entry["events"], list), "expected an array", f"{epath}.events")
        events: set[frozenset[str]] = set()
        for j, raw in enumerate(entry["events"]):
            vpath = f"{epath}.events[{j}]"
            members = _string_list(raw, vpath)
            _require(
                len(set(members)) == len(members), "duplicate variable in event", vpath
            )
            event = frozenset(members)
            _require(
                event <= set(context), "event is not a subset of its context", vpath
            )
            _require(event not in events, "duplicate event", vpath)
            events.add(event)
        supports[context] = events
    missing = [c for c in scenario.cover if c not in supports]
    _require(
        not missing,
        f"missing support entry for context {list(missing[0])}" if missing else "",
        path,
    )
    return PossibilisticModel.make(scenario, supports)


def _parse_probabilistic(
    value: Any, scenario: Scenario, path: str
) -> ProbabilisticModel:
    _require(isinstance(value, list), "expected an array", path)
    cover = set(scenario.cover)
    distributions: dict[tuple[str, ...], list[tuple[Assignment, float]]] = {}
    for i, entry in enumerate(value):
        epath = f"{path}[{i}]"
        _require(isinstance(entry, dict), "expected an object", epath)
        extra = sorted(set(entry) - {"context", "distribution"})
        _require(not extra, f"unknown key {extra[0]!r}" if extra else "", epath)
        _require("context" in entry, "missing key 'context'", epath)
        _require("distribution" in entry, "missing key 'distribution'", epath)
        context = _context_of(entry["context"], set(scenario.variables), f"{epath}.context")
        _require(context in cover, "context is not in the cover", f"{epath}.context")
        _require(context not in distributions, "duplicate distribution entry", f"{epath}.context")
        _require(
            isinstance(entry["distribution"], list),
            "expected an array",
            f"{epath}.distribution",
        )
        entries: list[tuple[Assignment, float]] = []
        seen: set[Assignment] = set()
        for j, raw in enumerate(entry["distribution"]):
            dpath = f"{epath}.distribution[{j}]"
            _require(isinstance(raw, dict), "expected an object", dpath)
            extra = sorted(set(raw) - {"assignment", "p"})
            _require(not extra, f"unknown key {extra[0]!r}" if extra else "", dpath)
            _require("assignment" in raw, "missing key 'assignment'", dpath)
            _require("p" in raw, "missing key 'p'", dpath)
            mapping = raw["assignment"]
            _require(isinstance(mapping, dict), "expected an object", f"{dpath}.assignment")
            for var, bit in mapping.items():
                _require(
                    var in set(context),
                    f"variable {var!r} is not in the context",
                    f"{dpath}.assignment",
                )
                _require(
                    not isinstance(bit, bool) and bit in (0, 1),
                    "outcome must be 0 or 1",
                    f"{dpath}.assignment.{var}",
                )
            _require(
                set(mapping) == set(context),
                "assignment must bind every context variable",
                f"{dpath}.assignment",
            )
            p = raw["p"]
            _require(
                not isinstance(p, bool) and isinstance(p, (int, float)),
                "probability must be a number",
                f"{dpath}.p",
            )
            assignment = Assignment.make(mapping)
            _require(assignment not in seen, "duplicate assignment", f"{dpath}.assignment")
            seen.add(assignment)
            entries.append((assignment, float(p)))
        distributions[context] = entries
    missing = [c for c in scenario.cover if c not in distributions]
    _require(
        not missing,
        f"missing distribution entry for context {list(missing[0])}" if missing else "",
        path,
    )
    return ProbabilisticModel.make(scenario, distributions)


def serialize_model(model: Model) -> str:
    """Render a model as its canonical document (deterministic bytes)."""
    scenario = model.scenario
    doc: dict[str, Any] = {
        "variables": list(scenario.variables),
        "contexts": [list(c) for c in scenario.cover],
    }
    if isinstance(model, PossibilisticModel):
        doc["possibilistic"] = [
            {
                "context": list(context),
                "events": [sorted(event) for event in model.events_sorted(context)],
            }
            for context in scenario.cover
        ]
    else:
        doc["probabilistic"] = [
            {
                "context": list(context),
                "distribution": [
                    {"assignment": assignment.as_dict(), "p": float(p)}
                    for assignment, p in model.distribution(context)
                ],
            }
            for context in scenario.cover
        ]
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
