"""Command-line front end.

Every subcommand prints one JSON document (schema 1) on stdout. Domain
errors print a machine-readable JSON object on stderr and exit 1; usage
errors (unknown flags, malformed ring specs) exit 2.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

from .errors import PermPolyError, RingSpecError
from .experiment import SamplingConfig, question_experiment
from .lifting import corollary_h, noebauer_is_permutation, residue_poly
from .permutations import PermutationTable, polynomial_permutation_group
from .polys import Polynomial, function_table, poly_from_json, poly_to_json, reduce_canonical
from .rings import parse_ring
from .transpositions import carlitz_poly, transposition_poly, verify_transposition

SCHEMA = 1


class _UsageError(Exception):
    pass


def _ring_arg(text: str):
    try:
        return parse_ring(text)
    except RingSpecError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _element(ring, text: str, flag: str):
    try:
        return ring.parse_element(json.loads(text))
    except (ValueError, json.JSONDecodeError) as e:
        raise _UsageError(f"bad {flag} value {text!r}: {e}") from None


def _poly(ring, text: str, flag: str) -> Polynomial:
    try:
        obj = json.loads(text)
        if isinstance(obj, list):
            obj = {"coeffs": obj}
        return poly_from_json(obj, ring)
    except (ValueError, json.JSONDecodeError) as e:
        raise _UsageError(f"bad {flag} value {text!r}: {e}") from None


def _cmd_field_table(args) -> dict:
    ring = args.ring
    doc = {
        "schema": SCHEMA,
        "ring": ring.spec(),
        "size": ring.size,
        "characteristic": ring.char,
        "elements": [ring.format_element(x) for x in ring.elements()],
        "units": [ring.format_element(x) for x in ring.units()],
        "maximal_ideal": [ring.format_element(x) for x in ring.maximal_ideal()],
    }
    if ring.is_local:
        doc["residue_field"] = ring.residue_field.spec()
    if args.poly is not None:
        f = _poly(ring, args.poly, "--poly")
        table = function_table(f)
        doc["polynomial"] = poly_to_json(f)
        doc["table"] = [ring.format_element(x) for x in table.outputs()]
        doc["bijective"] = table.is_bijective()
    return doc


def _cmd_transposition(args) -> dict:
    ring = args.ring
    a = _element(ring, args.a, "--a")
    b = _element(ring, args.b, "--b")
    f = transposition_poly(ring, a, b)
    report = verify_transposition(f, a, b)
    return {
        "schema": SCHEMA,
        "ring": ring.spec(),
        "a": ring.format_element(a),
        "b": ring.format_element(b),
        "polynomial": poly_to_json(f),
        "verification": report.to_json(),
    }


def _cmd_carlitz(args) -> dict:
    ring = args.ring
    a = _element(ring, args.a, "--a")
    f = carlitz_poly(ring, a)
    report = verify_transposition(f, ring.zero, a)
    return {
        "schema": SCHEMA,
        "ring": ring.spec(),
        "a": ring.format_element(a),
        "degree": f.degree,
        "polynomial": poly_to_json(f),
        "reduced": poly_to_json(reduce_canonical(f)),
        "verification": report.to_json(),
    }


def _cmd_verify(args) -> dict:
    ring = args.ring
    a = _element(ring, args.a, "--a")
    b = _element(ring, args.b, "--b")
    f = _poly(ring, args.poly, "--poly")
    report = verify_transposition(f, a, b)
    return {
        "schema": SCHEMA,
        "ring": ring.spec(),
        "a": ring.format_element(a),
        "b": ring.format_element(b),
        "polynomial": poly_to_json(f),
        **report.to_json(),
    }


def _cmd_criterion(args) -> dict:
    ring = args.ring
    f = _poly(ring, args.poly, "--poly")
    report = noebauer_is_permutation(f)
    return {
        "schema": SCHEMA,
        "ring": ring.spec(),
        "polynomial": poly_to_json(f),
        **report.to_json(),
    }


def _cmd_lift(args) -> dict:
    ring = args.ring
    a = _element(ring, args.a, "--a")
    b = _element(ring, args.b, "--b")
    g = _poly(ring, args.g, "--g")
    l = _poly(ring, args.l, "--l")
    h = corollary_h(a, b, g, l)
    perm = PermutationTable.from_function_table(function_table(h))
    residue_table = function_table(residue_poly(h))
    rf = ring.residue_field
    return {
        "schema": SCHEMA,
        "ring": ring.spec(),
        "a": ring.format_element(a),
        "b": ring.format_element(b),
        "g": poly_to_json(g),
        "l": poly_to_json(l),
        "h": poly_to_json(h),
        "criterion": noebauer_is_permutation(h).to_json(),
        "residue_action": [rf.format_element(x) for x in residue_table.outputs()],
        "cycle_type": list(perm.cycle_type()),
        "sign": perm.sign(),
    }


def _cmd_group(args) -> dict:
    ring = args.ring
    group = polynomial_permutation_group(ring, max_size=args.max_size)
    return {
        "schema": SCHEMA,
        "ring": ring.spec(),
        "group_order": group.order,
        "symmetric_order": math.factorial(ring.size),
        "is_full_symmetric": group.order == math.factorial(ring.size),
    }


def _cmd_experiment(args):
    config = SamplingConfig(
        g_max_degree=args.g_max_degree,
        l_max_degree=args.l_max_degree,
        g_sample_limit=args.g_sample_limit,
    )
    report = question_experiment(args.ring, config, seed=args.seed, max_size=args.max_size)
    if args.csv:
        return report  # rows rendered by the caller
    return {"schema": SCHEMA, **report.to_json()}


def _write_experiment_csv(report, stream) -> None:
    writer = csv.writer(stream)
    writer.writerow(["a", "b", "g", "l", "image", "sign"])
    for row in report.rows:
        writer.writerow(
            [
                json.dumps(row["a"]),
                json.dumps(row["b"]),
                json.dumps(row["g"]),
                json.dumps(row["l"]),
                json.dumps(row["image"]),
                row["sign"],
            ]
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permpoly",
        description="Transposition polynomials, local-ring lifting, and polynomial-permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--ring", type=_ring_arg, required=True, help="ring spec, e.g. gf:5, gf:2^2, zmod:3^2, fqu:3^1,2")
        p.set_defaults(handler=handler)
        return p

    p = add("field-table", _cmd_field_table, "enumerate a ring; optionally tabulate a polynomial over it")
    p.add_argument("--poly", help='polynomial JSON, e.g. {"coeffs":[1,2]}')

    p = add("transposition", _cmd_transposition, "degree-(q-2) polynomial swapping two field elements")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("carlitz", _cmd_carlitz, "nested degree-(q-2)^3 polynomial swapping 0 and a")
    p.add_argument("--a", required=True)

    p = add("verify", _cmd_verify, "check whether a polynomial induces the transposition (a b)")
    p.add_argument("--poly", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("criterion", _cmd_criterion, "permutation criterion for a polynomial over a local ring")
    p.add_argument("--poly", required=True)

    p = add("lift", _cmd_lift, "lift the transposition (a mod M, b mod M) to a permutation of R")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--g", default='{"coeffs":[1]}', help="unit-valued polynomial JSON (default 1)")
    p.add_argument("--l", default='{"coeffs":[]}', help="free polynomial JSON (default 0)")

    p = add("group", _cmd_group, "order of the group of polynomial permutations")
    p.add_argument("--max-size", type=int, default=100)

    p = add("experiment", _cmd_experiment, "close the lifted transpositions and compare with the full group")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--g-max-degree", type=int, default=1)
    p.add_argument("--l-max-degree", type=int, default=2)
    p.add_argument("--g-sample-limit", type=int, default=None)
    p.add_argument("--max-size", type=int, default=100)
    p.add_argument("--csv", action="store_true", help="emit the generator sweep as CSV instead of JSON")

    return parser


def _domain_error(e: PermPolyError) -> int:
    doc = {"schema": SCHEMA, "error": type(e).__name__, "message": str(e)}
    print(json.dumps(doc), file=sys.stderr)
    return 1


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    except PermPolyError as e:
        # semantically invalid ring (bad characteristic, trivial ideal, ...)
        return _domain_error(e)
    try:
        result = args.handler(args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except PermPolyError as e:
        return _domain_error(e)
    if isinstance(result, dict):
        print(json.dumps(result, indent=2))
    else:
        _write_experiment_csv(result, sys.stdout)
    return 0


def main() -> None:
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); suppress the noise
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)


if __name__ == "__main__":
    main()
