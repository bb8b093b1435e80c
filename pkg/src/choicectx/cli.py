"""Command-line front end.

Subcommands: ``classify`` places a model in the contextuality hierarchy,
``axioms`` runs the choice-axiom checks, ``audit`` combines both with the
implication checks, ``bell`` evaluates the logical inequality for a formula
file against a probabilistic model, and ``gen`` emits a random model.

Exit codes: 0 on success; 1 under ``--strict`` when the model is contextual,
signals, violates the weak axiom, or violates the inequality; 2 on input
errors; 3 when the time budget expires (the partial report is marked
inconclusive).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .axioms import (
    AuditReport,
    audit,
    check_no_signalling,
    check_weak_axiom,
    intersection_closed,
    is_choice_structure,
    overlap_property,
)
from .contextuality import Classification, classify
from .core import (
    EXHAUSTIVE_BOUND_DEFAULT,
    PossibilisticModel,
    Scenario,
    Verdict,
    validate_model,
)
from .errors import (
    ModelSemanticError,
    ModelSyntaxError,
    NotContradictory,
    NotMeasurable,
    PropositionSyntaxError,
    TimeBudgetExceeded,
    TooLarge,
    UnknownVariable,
)
from .modelio import Model, parse_model, serialize_model
from .probabilistic import (
    ProbabilisticModel,
    bell_violation,
    support_reduction,
    validate_probabilistic,
)
from .proplang import parse_propositions

_INPUT_ERRORS = (
    ModelSyntaxError,
    ModelSemanticError,
    PropositionSyntaxError,
    UnknownVariable,
    NotMeasurable,
    NotContradictory,
    TooLarge,
    OSError,
)


@dataclass
class RunConfig:
    command: str
    model_path: str | None = None
    props_path: str | None = None
    machine: bool = False
    strict: bool = False
    bound: int = EXHAUSTIVE_BOUND_DEFAULT
    budget: float | None = None
    n_variables: int = 0
    n_contexts: int = 0
    density: float = 0.5
    seed: int = 0
    closed: bool = False


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--machine", action="store_true", help="emit JSON instead of text"
    )
    common.add_argument(
        "--strict",
        action="store_true",
        help="exit 1 on contextuality, signalling, axiom or inequality violations",
    )
    common.add_argument(
        "--bound",
        type=int,
        default=EXHAUSTIVE_BOUND_DEFAULT,
        metavar="N",
        help="refuse exhaustive scans above N variables (default %(default)s)",
    )
    common.add_argument(
        "--budget",
        type=float,
        default=None,
        metavar="SECONDS",
        help="wall-clock budget; expiry exits 3 with an inconclusive report",
    )

    parser = argparse.ArgumentParser(
        prog="choicectx",
        description="contextuality and choice-axiom checks for binary models",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "classify", parents=[common], help="place a model in the hierarchy"
    )
    p.add_argument("model", help="model file (JSON)")

    p = sub.add_parser(
        "axioms", parents=[common], help="run the choice-axiom checks"
    )
    p.add_argument("model", help="model file (JSON)")

    p = sub.add_parser(
        "audit", parents=[common], help="full report with implication checks"
    )
    p.add_argument("model", help="model file (JSON)")

    p = sub.add_parser(
        "bell", parents=[common], help="evaluate the logical inequality"
    )
    p.add_argument("model", help="probabilistic model file (JSON)")
    p.add_argument(
        "--props", required=True, metavar="FILE", help="formula file, one per line"
    )

    p = sub.add_parser("gen", parents=[common], help="emit a random model")
    p.add_argument("--vars", type=int, required=True, metavar="N")
    p.add_argument("--contexts", type=int, required=True, metavar="K")
    p.add_argument(
        "--density",
        type=float,
        required=True,
        metavar="D",
        help="per-event inclusion probability in [0, 1]",
    )
    p.add_argument("--seed", type=int, required=True, metavar="S")
    p.add_argument(
        "--closed",
        action="store_true",
        help="close the cover under nonempty intersections",
    )
    return parser


def parse_args(argv: list[str]) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command,
        model_path=getattr(ns, "model", None),
        props_path=getattr(ns, "props", None),
        machine=ns.machine,
        strict=ns.strict,
        bound=ns.bound,
        budget=ns.budget,
        n_variables=getattr(ns, "vars", 0),
        n_contexts=getattr(ns, "contexts", 0),
        density=getattr(ns, "density", 0.5),
        seed=getattr(ns, "seed", 0),
        closed=getattr(ns, "closed", False),
    )


def gen_random_model(
    n_variables: int,
    n_contexts: int,
    density: float,
    seed: int,
    intersection_closed: bool = False,
) -> PossibilisticModel:
    """Draw a random valid model, deterministically in the arguments.

    Contexts are random nonempty variable subsets (duplicates dropped, so
    ``n_contexts`` is an upper bound); a catch-all context covers any
    leftover variables.  Each subset of a context becomes an event with
    probability ``density``.
    """
    if n_variables < 1:
        raise ValueError("at least one variable is required")
    if n_contexts < 1:
        raise ValueError("at least one context is required")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    width = len(str(n_variables - 1))
    names = [f"x{i:0{width}d}" for i in range(n_variables)]

    contexts: list[frozenset[str]] = []
    seen: set[frozenset[str]] = set()
    for _ in range(n_contexts):
        for _attempt in range(64):
            mask = rng.random(n_variables) < 0.5
            candidate = frozenset(n for n, keep in zip(names, mask) if keep)
            if candidate and candidate not in seen:
                seen.add(candidate)
                contexts.append(candidate)
                break

    covered = set().union(*contexts) if contexts else set()
    uncovered = frozenset(set(names) - covered)
    if uncovered:
        seen.add(uncovered)
        contexts.append(uncovered)

    if intersection_closed:
        changed = True
        while changed:
            changed = False
            for a, b in combinations(list(contexts), 2):
                meet = a & b
                if meet and meet not in seen:
                    seen.add(meet)
                    contexts.append(meet)
                    changed = True

    scenario = Scenario.make(names, contexts)
    supports: dict[tuple[str, ...], set[frozenset[str]]] = {}
    for context in scenario.cover:
        k = len(context)
        if k > 24:
            raise TooLarge(f"context of {k} variables is too large to enumerate")
        draws = rng.random(1 << k) < density
        supports[context] = {
            frozenset(context[j] for j in range(k) if (code >> j) & 1)
            for code in np.flatnonzero(draws)
        }
    return PossibilisticModel.make(scenario, supports)


def _fmt_value(value: object) -> str:
    if isinstance(value, list):
        return "{" + ",".join(str(item) for item in value) + "}"
    return str(value)


def _verdict_lines(name: str, verdict: Verdict) -> list[str]:
    lines = [f"{name}: {verdict.status}"]
    if verdict.witness:
        detail = ", ".join(
            f"{key}={_fmt_value(value)}" for key, value in verdict.witness.items()
        )
        lines.append(f"  witness: {detail}")
    return lines


def _classification_lines(classification: Classification) -> list[str]:
    lines = [
        f"kind: {classification.kind}",
        f"sections: {classification.section_count}",
    ]
    if classification.witness_event is not None:
        context, event = classification.witness_event
        lines.append(
            "witness: context={%s}, event={%s}"
            % (",".join(context), ",".join(sorted(event)))
        )
    return lines


def _report_lines(report: AuditReport) -> list[str]:
    lines = []
    for name in (
        "weak_axiom",
        "no_signalling",
        "intersection_closed",
        "overlap_property",
        "choice_structure",
    ):
        lines.extend(_verdict_lines(name, getattr(report, name)))
    lines.append(
        f"classification: {report.classification.kind} "
        f"(sections={report.classification.section_count})"
    )
    lines.append(f"region: {report.region()}")
    lines.append("theorems:")
    for check in report.theorem_checks:
        flags = []
        flags.append("applicable" if check.applicable else "not applicable")
        flags.append("consistent" if check.consistent else "INCONSISTENT")
        lines.append(f"  {check.id}: {', '.join(flags)}")
        lines.append(f"    {check.detail}")
    return lines


def _load_model(config: RunConfig) -> Model:
    assert config.model_path is not None
    with open(config.model_path, "r", encoding="utf-8") as handle:
        model = parse_model(handle.read())
    if isinstance(model, PossibilisticModel):
        verdict = validate_model(model)
    else:
        verdict = validate_probabilistic(model)
    if not verdict.holds:
        raise ModelSemanticError(verdict.narrative, "$")
    for warning in verdict.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return model


def _as_possibilistic(model: Model) -> PossibilisticModel:
    if isinstance(model, ProbabilisticModel):
        return support_reduction(model)
    return model


def _emit(config: RunConfig, doc: dict, lines: list[str]) -> None:
    if config.machine:
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


def _deadline(config: RunConfig) -> float | None:
    if config.budget is None:
        return None
    return time.monotonic() + config.budget


def _dispatch(config: RunConfig) -> int:
    deadline = _deadline(config)

    if config.command == "gen":
        model = gen_random_model(
            config.n_variables,
            config.n_contexts,
            config.density,
            config.seed,
            intersection_closed=config.closed,
        )
        sys.stdout.write(serialize_model(model))
        return 0

    if config.command == "classify":
        model = _as_possibilistic(_load_model(config))
        classification = classify(model, deadline)
        _emit(config, classification.to_doc(), _classification_lines(classification))
        return 1 if config.strict and classification.is_contextual else 0

    if config.command == "axioms":
        model = _as_possibilistic(_load_model(config))
        verdicts = {
            "weak_axiom": check_weak_axiom(model),
            "no_signalling": check_no_signalling(model),
            "intersection_closed": intersection_closed(model.scenario),
            "overlap_property": overlap_property(model),
            "choice_structure": is_choice_structure(model),
        }
        lines = []
        for name, verdict in verdicts.items():
            lines.extend(_verdict_lines(name, verdict))
        doc = {name: verdict.to_doc() for name, verdict in verdicts.items()}
        _emit(config, doc, lines)
        bad = not verdicts["weak_axiom"].holds or not verdicts["no_signalling"].holds
        return 1 if config.strict and bad else 0

    if config.command == "audit":
        model = _as_possibilistic(_load_model(config))
        report = audit(model, deadline)
        _emit(config, report.to_doc(), _report_lines(report))
        bad = (
            report.classification.is_contextual
            or not report.weak_axiom.holds
            or not report.no_signalling.holds
        )
        return 1 if config.strict and bad else 0

    if config.command == "bell":
        model = _load_model(config)
        if not isinstance(model, ProbabilisticModel):
            raise ModelSemanticError(
                "the inequality needs a probabilistic model", "$"
            )
        assert config.props_path is not None
        with open(config.props_path, "r", encoding="utf-8") as handle:
            props = parse_propositions(handle.read(), model.scenario)
        violation = bell_violation(props, model, config.bound, deadline)
        _emit(
            config,
            {"formulas": len(props), "violation": violation},
            [f"formulas: {len(props)}", f"violation: {violation!r}"],
        )
        return 1 if config.strict and violation > 0 else 0

    raise AssertionError(f"unhandled command {config.command!r}")


def run(config: RunConfig) -> int:
    try:
        return _dispatch(config)
    except TimeBudgetExceeded as exc:
        partial = len(exc.partial_sections)
        if config.machine:
            doc = {
                "inconclusive": True,
                "reason": "time budget exceeded",
                "partial_section_count": partial,
            }
            print(json.dumps(doc, indent=2))
        else:
            print(
                "inconclusive: time budget exceeded "
                f"({partial} sections found before expiry)"
            )
        return 3
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    return run(parse_args(argv))
