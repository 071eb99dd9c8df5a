"""Command-line front end.

Exit status: 0 success, 1 no solutions (output is still produced),
2 usage or parse error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .classify import classify
from .core import (
    Classification,
    Infeasible,
    LinearEquation,
    NatlinError,
    ResourceLimitError,
    normalize,
)
from .natsolve import (
    DEFAULT_CAP,
    enumerate_finite,
    infinite_family,
    parametric_natural_solution,
    solve_ax_minus_by,
    stream_natural_solutions,
)
from .oracle import brute_force_natural
from .parsing import ParseError, parse_equation, render_affine, render_equation

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

DOCUMENT_KEYS = (
    "command",
    "equation",
    "classification",
    "gcd",
    "solutions",
    "complete",
    "lattice",
    "constraints",
    "family",
    "bounds",
    "two_var",
)


def _canonical(solutions) -> list[list[int]]:
    return [list(x) for x in sorted(solutions, key=lambda x: (sum(x), x))]


def _fresh_names(prefix: str, count: int, taken: Sequence[str]) -> list[str]:
    """Parameter names that do not clash with the equation's variables."""
    taken = set(taken)
    while True:
        names = [prefix] if count == 1 else [f"{prefix}{i + 1}" for i in range(count)]
        if not taken.intersection(names):
            return names
        prefix += prefix[-1]


def _new_document(command: str, eq: LinearEquation | None) -> dict:
    doc = dict.fromkeys(DOCUMENT_KEYS)
    doc["command"] = command
    if eq is not None:
        doc["equation"] = {
            "text": render_equation(eq),
            "vars": list(eq.var_names),
            "coeffs": list(eq.coeffs),
            "rhs": eq.rhs,
        }
        doc["gcd"] = eq.gcd()
    return doc


def _solve_document(eq: LinearEquation, limit: int, cap: int) -> dict:
    doc = _new_document("solve", eq)
    regime = classify(eq)
    doc["classification"] = regime.value
    doc["complete"] = regime is not Classification.INFINITE
    if regime.is_empty:
        doc["solutions"] = []
        return doc
    neq = normalize(eq)
    if regime is Classification.INFINITE:
        param = parametric_natural_solution(neq)
        lat = param.lattice
        doc["lattice"] = {"particular": list(lat.particular), "basis": [list(v) for v in lat.basis]}
        doc["constraints"] = [
            {"coeffs": list(c), "constant": const} for c, const in param.constraints.inequalities
        ]
        fam = infinite_family(neq, lat.particular)
        doc["family"] = {"step": list(fam.step), "base": list(fam.base), "z_min": fam.z_min}
        doc["solutions"] = [list(x) for x in stream_natural_solutions(eq, limit)]
    else:
        fs = enumerate_finite(neq, cap=cap)
        doc["bounds"] = {"d": list(fs.per_var_bounds), "count_bound": fs.count_bound}
        doc["solutions"] = _canonical(fs.solutions)
    return doc


def _solve_text(doc: dict) -> list[str]:
    eq = doc["equation"]
    names = eq["vars"]
    lines = [
        f"equation: {eq['text']}",
        f"classification: {doc['classification']}",
        f"gcd: {doc['gcd']}",
    ]
    if doc["lattice"] is not None:
        lat = doc["lattice"]
        params = _fresh_names("k", len(lat["basis"]), names)
        lines.append(f"integer solutions ({', '.join(params)} any integers):")
        for i, name in enumerate(names):
            row = [vec[i] for vec in lat["basis"]]
            lines.append(f"  {name} = {render_affine(row, lat['particular'][i], params)}")
        lines.append("natural iff:")
        for c in doc["constraints"]:
            lines.append(f"  {render_affine(c['coeffs'], c['constant'], params)} >= 0")
        fam = doc["family"]
        (t,) = _fresh_names("t", 1, names)
        lines.append(f"infinite family ({t} >= {fam['z_min']}):")
        for name, s, b in zip(names, fam["step"], fam["base"]):
            lines.append(f"  {name} = {render_affine([s], b, [t])}")
        lines.append(f"first {len(doc['solutions'])} natural solutions:")
    elif doc["bounds"] is not None:
        b = doc["bounds"]
        lines.append(f"bounds: {' '.join(map(str, b['d']))} (count bound {b['count_bound']})")
        lines.append(f"natural solutions: {len(doc['solutions'])}")
    else:
        lines.append("natural solutions: 0")
    lines.extend("  " + " ".join(map(str, x)) for x in doc["solutions"])
    return lines


def _cmd_solve(args) -> tuple[dict, list[str], int]:
    eq = parse_equation(args.equation).equation
    doc = _solve_document(eq, args.limit, args.cap)
    return doc, _solve_text(doc), EXIT_OK if doc["solutions"] else EXIT_EMPTY


def _cmd_classify(args):
    eq = parse_equation(args.equation).equation
    doc = _new_document("classify", eq)
    regime = classify(eq)
    doc["classification"] = regime.value
    return doc, [regime.value], EXIT_EMPTY if regime.is_empty else EXIT_OK


def _cmd_enumerate(args):
    eq = parse_equation(args.equation).equation
    doc = _new_document("enumerate", eq)
    regime = classify(eq)
    doc["classification"] = regime.value
    sols = stream_natural_solutions(eq, args.limit)
    doc["solutions"] = [list(x) for x in sols]
    doc["complete"] = regime is not Classification.INFINITE and len(sols) < args.limit
    lines = [" ".join(map(str, x)) for x in sols]
    return doc, lines, EXIT_OK if sols else EXIT_EMPTY


def _cmd_oracle(args):
    eq = parse_equation(args.equation).equation
    doc = _new_document("oracle", eq)
    sols = _canonical(brute_force_natural(eq, args.box))
    doc["solutions"] = sols
    doc["complete"] = False
    lines = [" ".join(map(str, x)) for x in sols]
    return doc, lines, EXIT_OK if sols else EXIT_EMPTY


def _cmd_axby(args):
    doc = _new_document("axby", None)
    res = solve_ax_minus_by(args.a, args.b, args.c)
    if isinstance(res, Infeasible):
        doc["two_var"] = {"feasible": False, "gcd": res.gcd}
        return doc, [f"no integer solutions: {res.reason}"], EXIT_EMPTY
    doc["gcd"] = res.gcd
    doc["two_var"] = {
        "feasible": True,
        "gcd": res.gcd,
        "a": res.a,
        "b": res.b,
        "c": res.c,
        "x0": res.x0,
        "y0": res.y0,
        "k_min": res.k_min,
    }
    doc["solutions"] = [list(res.at(res.k_min))]
    doc["complete"] = False
    line = (
        f"x = {render_affine([res.b], res.x0, ['k'])}, "
        f"y = {render_affine([res.a], res.y0, ['k'])}, k >= {res.k_min}"
    )
    return doc, [line], EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="natlin",
        description="Natural-number solutions of linear equations a1*x1 + ... + an*xn = b.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify the natural solution set")
    p.add_argument("equation")
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("solve", parents=[common], help="full analysis of the natural solution set")
    p.add_argument("equation")
    p.add_argument("--limit", type=_positive, default=10,
                   help="solutions listed for infinite sets (default 10)")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP,
                   help=f"largest enumeration box for finite sets (default {DEFAULT_CAP})")
    p.set_defaults(run=_cmd_solve)

    p = sub.add_parser("enumerate", parents=[common],
                       help="natural solutions by increasing sum, then lexicographically")
    p.add_argument("equation")
    p.add_argument("--limit", type=_positive, default=10)
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("axby", parents=[common], help="natural solutions of a*x - b*y = c")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(run=_cmd_axby)

    p = sub.add_parser("oracle", parents=[common], help="brute-force natural solutions in [0, box]^n")
    p.add_argument("equation")
    p.add_argument("--box", type=_positive, default=10)
    p.set_defaults(run=_cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        doc, lines, status = args.run(args)
    except ParseError as exc:
        print(f"natlin: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"natlin: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except NatlinError as exc:
        print(f"natlin: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write("".join(line + "\n" for line in lines))
    return status


def run() -> None:
    sys.exit(main())
