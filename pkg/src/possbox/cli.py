"""Command-line interface.

Reads a JSON model document (``--input`` or stdin) holding any of:

* ``classes`` + ``lower`` + ``upper`` -- a probability box on a chain,
* ``pi`` -- a possibility distribution,
* ``marginals`` -- a list of possibility distributions.

All numbers are exact strings ("1/2", "0.8", "1").  Output is plain text, or
compact JSON with ``--json``; identical inputs produce byte-identical
output.  Exit codes: 0 success, 1 verification failure, 2 usage/input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from possbox.chain import Chain
from possbox.maxitive import is_maxitive
from possbox.multivariate import (
    MarginalFamily,
    joint_frechet,
    joint_independent,
    joint_rsi_outer,
)
from possbox.pbox import PBox
from possbox.possibility import (
    PossibilityDistribution,
    conjunction_bounds,
    conjunction_decompose,
    pbox_to_possibility,
    possibility_to_pbox,
)
from possbox.rationals import fmt
from possbox.verify import SUITES, run_suite


class CliError(Exception):
    """Input or usage problem; maps to exit code 2."""


def _load_document(args: argparse.Namespace) -> dict:
    if args.input and args.input != "-":
        try:
            with open(args.input, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.input}: {exc}") from exc
    else:
        text = sys.stdin.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise CliError("model document must be a JSON object")
    if not any(key in doc for key in ("classes", "pi", "marginals")):
        raise CliError("model document holds none of: classes/lower/upper, pi, marginals")
    return doc


def _document_chain(doc: dict) -> Chain:
    classes = doc.get("classes")
    if classes is None:
        raise CliError('document field "classes" is required for this command')
    if not isinstance(classes, list) or not all(isinstance(c, list) for c in classes):
        raise CliError('"classes" must be a list of lists of labels')
    try:
        return Chain(classes)
    except ValueError as exc:
        raise CliError(f'bad "classes": {exc}') from exc


def _document_pbox(doc: dict) -> PBox:
    chain = _document_chain(doc)
    for key in ("lower", "upper"):
        if not isinstance(doc.get(key), list):
            raise CliError(f'document field "{key}" must be a list of exact values')
    try:
        return PBox(chain, doc["lower"], doc["upper"])
    except ValueError as exc:
        raise CliError(f"bad probability box: {exc}") from exc


def _document_pi(doc: dict) -> PossibilityDistribution:
    pi = doc.get("pi")
    if not isinstance(pi, dict):
        raise CliError('document field "pi" must be an object of label -> exact value')
    try:
        return PossibilityDistribution(pi)
    except ValueError as exc:
        raise CliError(f'bad "pi": {exc}') from exc


def _document_marginals(doc: dict) -> MarginalFamily:
    marginals = doc.get("marginals")
    if not isinstance(marginals, list) or not marginals:
        raise CliError('document field "marginals" must be a non-empty list of objects')
    dists = []
    for k, entry in enumerate(marginals):
        if not isinstance(entry, dict):
            raise CliError(f"marginal {k} must be an object of label -> exact value")
        try:
            dists.append(PossibilityDistribution(entry))
        except ValueError as exc:
            raise CliError(f"bad marginal {k}: {exc}") from exc
    return MarginalFamily(dists)


def _event_from_args(args: argparse.Namespace, chain: Chain) -> frozenset[str]:
    raw = args.event
    if raw is None:
        raise CliError("--event is required for this command")
    labels = [part for part in (piece.strip() for piece in raw.split(",")) if part]
    try:
        event = chain.event(labels)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if getattr(args, "complement", False):
        event = chain.complement(event)
    return event


def _ordered_pi(pi: PossibilityDistribution, chain: Chain | None = None) -> dict[str, str]:
    if chain is not None:
        ordered = [label for cls in chain.classes for label in sorted(cls)]
    else:
        ordered = sorted(pi.labels, key=repr)
    return {label: fmt(pi[label]) for label in ordered}


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(text)


# ----------------------------------------------------------------- commands


def _cmd_validate(args: argparse.Namespace) -> int:
    doc = _load_document(args)
    present = []
    if "classes" in doc:
        if "lower" in doc or "upper" in doc:
            _document_pbox(doc)
            present.append("pbox")
        else:
            _document_chain(doc)
            present.append("chain")
    if "pi" in doc:
        _document_pi(doc)
        present.append("pi")
    if "marginals" in doc:
        _document_marginals(doc)
        present.append("marginals")
    _emit(args, {"valid": True, "models": present}, "valid: " + ", ".join(present))
    return 0


def _cmd_upper(args: argparse.Namespace) -> int:
    box = _document_pbox(_load_document(args))
    event = _event_from_args(args, box.chain)
    value = box.upper(event)
    _emit(args, {"upper": fmt(value)}, f"upper = {fmt(value)}")
    return 0


def _cmd_lower(args: argparse.Namespace) -> int:
    box = _document_pbox(_load_document(args))
    event = _event_from_args(args, box.chain)
    value = box.lower(event)
    _emit(args, {"lower": fmt(value)}, f"lower = {fmt(value)}")
    return 0


def _cmd_is_maxitive(args: argparse.Namespace) -> int:
    box = _document_pbox(_load_document(args))
    answer = is_maxitive(box)
    _emit(args, {"maxitive": answer}, f"maxitive: {'yes' if answer else 'no'}")
    return 0


def _cmd_to_possibility(args: argparse.Namespace) -> int:
    box = _document_pbox(_load_document(args))
    pi = pbox_to_possibility(box)
    if pi is None:
        _emit(args, {"pi": None}, "not a possibility measure")
        return 0
    ordered = _ordered_pi(pi, box.chain)
    text = "pi: " + ", ".join(f"{label}={value}" for label, value in ordered.items())
    _emit(args, {"pi": ordered}, text)
    return 0


def _cmd_from_possibility(args: argparse.Namespace) -> int:
    pi = _document_pi(_load_document(args))
    chain, box = possibility_to_pbox(pi)
    payload = {
        "classes": [sorted(cls) for cls in chain.classes],
        "lower": [fmt(v) for v in box.lower_cdf],
        "upper": [fmt(v) for v in box.upper_cdf],
    }
    lines = [
        "classes: " + " < ".join("{" + ", ".join(sorted(cls)) + "}" for cls in chain.classes),
        "lower:   " + " ".join(payload["lower"]),
        "upper:   " + " ".join(payload["upper"]),
    ]
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    box = _document_pbox(_load_document(args))
    pi_lower, pi_upper = conjunction_decompose(box)
    payload = {
        "pi1": _ordered_pi(pi_lower, box.chain),
        "pi2": _ordered_pi(pi_upper, box.chain),
    }
    text = "\n".join(
        name + ": " + ", ".join(f"{label}={value}" for label, value in part.items())
        for name, part in payload.items()
    )
    _emit(args, payload, text)
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    box = _document_pbox(_load_document(args))
    event = _event_from_args(args, box.chain)
    approx_lo, approx_up = conjunction_bounds(box, event)
    exact_lo, exact_up = box.lower(event), box.upper(event)
    payload = {
        "approx_lower": fmt(approx_lo),
        "lower": fmt(exact_lo),
        "upper": fmt(exact_up),
        "approx_upper": fmt(approx_up),
    }
    text = (
        f"approx_lower = {payload['approx_lower']}; lower = {payload['lower']}; "
        f"upper = {payload['upper']}; approx_upper = {payload['approx_upper']}"
    )
    _emit(args, payload, text)
    return 0


def _cmd_joint(args: argparse.Namespace) -> int:
    family = _document_marginals(_load_document(args))
    builder = {
        "frechet": joint_frechet,
        "independent": joint_independent,
        "rsi": joint_rsi_outer,
    }[args.rule]
    joint = builder(family)
    ordered = {"|".join(point): fmt(joint[point]) for point in family.points()}
    text = "\n".join(f"{key} = {value}" for key, value in ordered.items())
    _emit(args, {"rule": args.rule, "pi": ordered}, text)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, args.max_classes, args.grid)
    payload = {
        "suite": report.suite,
        "cases": report.cases,
        "checks": report.checks,
        "ok": report.ok,
    }
    if report.counterexample is not None:
        payload["counterexample"] = report.counterexample
        text = report.summary() + "\ncounterexample: " + json.dumps(
            report.counterexample, separators=(",", ":")
        )
    else:
        text = report.summary()
    _emit(args, payload, text)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="possbox",
        description="Exact event bounds from probability boxes and possibility measures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, *, event: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", default=None, help="model document path (default: stdin)")
        p.add_argument("--json", action="store_true", help="emit compact JSON")
        if event:
            p.add_argument("--event", default=None, help="comma-separated labels")
            p.add_argument("--complement", action="store_true", help="use the event's complement")
        p.set_defaults(func=func)
        return p

    add("validate", _cmd_validate, "check a model document")
    add("upper", _cmd_upper, "natural-extension upper probability of an event", event=True)
    add("lower", _cmd_lower, "natural-extension lower probability of an event", event=True)
    add("is-maxitive", _cmd_is_maxitive, "is the box's upper probability maxitive?")
    add("to-possibility", _cmd_to_possibility, "possibility distribution of a maxitive box")
    add("from-possibility", _cmd_from_possibility, "probability box encoding a distribution")
    add("decompose", _cmd_decompose, "split a box into two possibility distributions")
    add("bounds", _cmd_bounds, "exact and conjunction-approximate bounds", event=True)
    joint = add("joint", _cmd_joint, "joint distribution from marginals")
    joint.add_argument("--rule", required=True, choices=("frechet", "independent", "rsi"))
    verify = add("verify", _cmd_verify, "run a verification suite")
    verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    verify.add_argument("--max-classes", type=int, default=None, dest="max_classes")
    verify.add_argument("--grid", type=int, default=None)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:  # pragma: no cover - downstream closed the pipe
        return 0


if __name__ == "__main__":
    sys.exit(main())
