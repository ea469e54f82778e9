"""Command-line interface: verify, classify, orbit and module subcommands.

All commands emit a single JSON document (default) or a human-readable
text rendering, to stdout or to --output.  Exit status is 0 on success
and nonzero on any check failure, refusal or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import UqSL2
from .parser import FieldParseError, parse_scalar
from .qfield import Field, NumericField, SymbolicField
from .reps import (
    DEFAULT_WINDOW,
    KIND_FOR_TYPE,
    build_finite,
    build_weight_module,
    casimir_scalar_at_origin,
    check_irreducible,
    check_relations,
    matrix_rep_to_json,
    weight_module_to_json,
)
from .spectrum import (
    DEFAULT_SCAN_BOUND,
    PointParams,
    UnclassifiedPointError,
    classify,
    orbit_point,
)
from .verify import verify_identities


class CliError(Exception):
    """User-facing failure with an exit status."""

    def __init__(self, message: str, status: int = 2):
        super().__init__(message)
        self.status = status


def make_field(q_text: str) -> Field:
    if q_text == "symbolic":
        return SymbolicField()
    try:
        q0 = Fraction(q_text)
    except (ValueError, ZeroDivisionError):
        raise CliError(f"invalid q value {q_text!r}: expected 'symbolic' or a rational")
    try:
        return NumericField(q0)
    except ValueError as exc:
        raise CliError(str(exc))


def parse_point(args, field: Field) -> PointParams:
    try:
        alpha = parse_scalar(args.alpha, field)
    except FieldParseError as exc:
        raise CliError(f"--alpha: {exc}")
    try:
        beta = parse_scalar(args.beta, field)
    except FieldParseError as exc:
        raise CliError(f"--beta: {exc}")
    return PointParams(alpha, beta, field)


def emit(doc: dict, args) -> None:
    if args.format == "json":
        text = json.dumps(doc, indent=2, sort_keys=True)
    else:
        text = render_text(doc)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def render_text(doc: dict, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(render_text(item, indent + 1))
                lines.append(f"{pad}  -")
            lines.pop()
        elif isinstance(value, list) and len(value) > 12:
            head = ", ".join(str(v) for v in value[:12])
            lines.append(f"{pad}{key}: [{head}, ... ({len(value)} entries)]")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    field = make_field(args.q)
    report = verify_identities(UqSL2(field))
    emit(report.to_json_dict(), args)
    return 0 if report.all_ok else 1


def cmd_classify(args) -> int:
    field = make_field(args.q)
    point = parse_point(args, field)
    try:
        cls = classify(point, args.scan_bound)
    except UnclassifiedPointError as exc:
        emit({"error": str(exc), "vanishing_set": list(exc.vanishing)}, args)
        return 1
    emit(cls.to_json_dict(), args)
    return 0


def cmd_orbit(args) -> int:
    field = make_field(args.q)
    point = parse_point(args, field)
    points = []
    for i in range(args.steps):
        p_i = orbit_point(point, i)
        points.append({
            "i": i,
            "alpha": field.to_text(p_i.alpha),
            "beta": field.to_text(p_i.beta),
        })
    emit({"q": field.describe_q(), "points": points}, args)
    return 0


def cmd_module(args) -> int:
    field = make_field(args.q)
    point = parse_point(args, field)
    try:
        cls = classify(point, args.scan_bound)
    except UnclassifiedPointError as exc:
        emit({"error": str(exc), "vanishing_set": list(exc.vanishing)}, args)
        return 1

    if cls.kind == "FiniteOrbitSpecial":
        emit({
            "error": "no module is constructed for the finite-orbit point",
            "classification": cls.to_json_dict(),
        }, args)
        return 1

    if cls.kind in ("T11", "T1n"):
        rep = build_finite(point, args.scan_bound, classification=cls)
        doc = matrix_rep_to_json(rep)
    else:
        kind = KIND_FOR_TYPE[cls.kind]
        rep = build_weight_module(point, kind, args.window, args.scan_bound,
                                  classification=cls)
        doc = weight_module_to_json(rep)

    relations = check_relations(rep)
    irreducible = check_irreducible(rep)
    doc["point"] = {
        "alpha": field.to_text(point.alpha),
        "beta": field.to_text(point.beta),
        "q": field.describe_q(),
    }
    doc["classification"] = cls.to_json_dict()
    doc["checks"] = {
        "relations": relations.ok,
        "relation_residuals": relations.residuals,
        "irreducible": irreducible.irreducible,
        "irreducibility": irreducible.methods,
    }
    emit(doc, args)
    return 0 if relations.ok and irreducible.irreducible else 1


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uqsl2",
        description="Exact identity verification, spectrum point classification "
                    "and weight-module construction for a deformed U(sl2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, point: bool):
        p.add_argument("--q", default="symbolic",
                       help="'symbolic' (default) or an exact rational, e.g. 3/2")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", default="-", help="output path, '-' for stdout")
        if point:
            p.add_argument("--alpha", required=True, help="field element, e.g. '-1/(q-1)^2'")
            p.add_argument("--beta", required=True, help="field element, e.g. '2/(q-1)'")

    p = sub.add_parser("verify", help="run the identity suite in both engines")
    common(p, point=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="classify the point (xi-alpha, h-beta)")
    common(p, point=True)
    p.add_argument("--scan-bound", type=int, default=DEFAULT_SCAN_BOUND)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orbit", help="first k pullback points along theta")
    common(p, point=True)
    p.add_argument("--steps", type=int, default=8)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("module", help="build and certify the module at the point")
    common(p, point=True)
    p.add_argument("--scan-bound", type=int, default=DEFAULT_SCAN_BOUND)
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW,
                   help="index window radius for infinite-dimensional modules")
    p.set_defaults(func=cmd_module)

    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.status
    except FieldParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
