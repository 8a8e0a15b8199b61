"""Command-line front end: ``mobi list | verify | affine | sample``.

Exit codes: 0 when every check passes, 1 when a law fails (or a space is not
affine), 2 for configuration errors and endpoints outside the carrier.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

import numpy as np

from . import registry
from .algebra import check_algebra_axioms, check_closure, check_derived_properties
from .exceptions import MobiError
from .instances import LozengeAlgebra
from .report import DETECTION, all_passed, jsonable, summary_lines
from .space import check_space_axioms, check_space_properties, is_affine, q_eval

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
SEED_ENV = "MOBI_SEED"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _add_config(p):
    p.add_argument("--name", required=True, help="registry name (see 'mobi list')")
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                   help="instance parameter; VALUE is read as JSON when possible")


def _add_sampling(p):
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or 0")
    p.add_argument("--tol", type=float, default=None,
                   help=f"default: the instance tolerance ({DETECTION:g} for most)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mobi", description="Mobi algebras and mobi spaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("list", help="list registered algebras and spaces")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run the axiom suite on an algebra or a space")
    p.add_argument("--target", choices=("algebra", "space"), required=True)
    _add_config(p)
    _add_sampling(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("affine", help="sample the interchange law")
    _add_config(p)
    _add_sampling(p)

    p = sub.add_parser("sample", help="points along the path between two endpoints")
    _add_config(p)
    p.add_argument("--from", dest="start", required=True, help="JSON array")
    p.add_argument("--to", dest="end", required=True, help="JSON array")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    return parser


def _seed(args) -> int:
    return _default_seed() if args.seed is None else args.seed


def _check_samples(args):
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")


def cmd_list(args, out) -> int:
    cat = registry.catalog()
    if args.format == "json":
        out.write(json.dumps(cat, indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    for heading, key in (("algebras", "algebras"), ("spaces", "spaces")):
        out.write(f"{heading}:\n")
        for e in cat[key]:
            params = ", ".join(f"{p['name']}={json.dumps(p['default'])}" for p in e["params"])
            tag = " [negative control]" if e["negative_control"] else ""
            out.write(f"  {e['name']:<20} {e['description']}{tag}\n")
            if params:
                out.write(f"  {'':<20} params: {params}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    _check_samples(args)
    params = registry.parse_params(args.param)
    seed = _seed(args)
    if args.target == "algebra":
        alg = registry.get_algebra(args.name, params)
        tol = DETECTION if args.tol is None else args.tol
        reports = [check_closure(alg, seed, args.samples)]
        reports += check_algebra_axioms(alg, seed, args.samples, tol)
        reports += check_derived_properties(alg, seed, args.samples, tol)
    else:
        space = registry.get_space(args.name, params)
        tol = space.tol if args.tol is None else args.tol
        reports = check_space_axioms(space, seed, args.samples, tol)
        reports += check_space_properties(space, seed, args.samples, tol)
    ok = all_passed(reports)
    if args.format == "json":
        doc = {
            "target": args.target,
            "name": args.name,
            "params": params,
            "samples": args.samples,
            "seed": seed,
            "tol": tol,
            "passed": ok,
            "reports": [r.to_dict() for r in reports],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"{args.target} {args.name} (samples={args.samples}, seed={seed}, tol={tol:g})\n")
        out.write("\n".join(summary_lines(reports)) + "\n")
        out.write(("PASS" if ok else "FAIL") + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_affine(args, out) -> int:
    _check_samples(args)
    space = registry.get_space(args.name, registry.parse_params(args.param))
    seed = _seed(args)
    verdict = is_affine(space, seed, args.samples, args.tol)
    doc = {"name": args.name, "seed": seed, "tol": space.tol if args.tol is None else args.tol}
    doc.update(verdict.to_dict())
    out.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK if verdict.affine else EXIT_FAIL


def _parse_point(text: str, flag: str):
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag}: not JSON ({exc})") from None
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        value = [value]
    if not isinstance(value, list) or not all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
    ):
        raise UsageError(f"{flag}: expected a JSON array of numbers")
    return np.array(value, dtype=float)


def _instant(alg, t: float):
    """Embed a time ``t`` in [0, 1] into the scalar algebra."""
    if isinstance(alg, LozengeAlgebra):
        return np.array([t, 0.0])
    return t


def sample_path(space, x, y, steps: int):
    ts = [i / (steps - 1) for i in range(steps)]
    return [(t, np.atleast_1d(q_eval(space, x, _instant(space.algebra, t), y))) for t in ts]


def render_path(rows, fmt: str) -> str:
    if fmt == "json":
        doc = [{"t": t, "point": [float(v) for v in pt]} for t, pt in rows]
        return json.dumps(doc, indent=2) + "\n"
    width = len(rows[0][1])
    lines = [",".join(["t"] + [f"c{i}" for i in range(width)])]
    for t, pt in rows:
        lines.append(",".join(format(float(v), ".17g") for v in (t, *pt)))
    return "\n".join(lines) + "\n"


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".mobi-", dir=directory)
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_sample(args, out) -> int:
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    space = registry.get_space(args.name, registry.parse_params(args.param))
    x = _parse_point(args.start, "--from")
    y = _parse_point(args.end, "--to")
    text = render_path(sample_path(space, x, y, args.steps), args.format)
    if args.out:
        _atomic_write(args.out, text)
    else:
        out.write(text)
    return EXIT_OK


COMMANDS = {"list": cmd_list, "verify": cmd_verify, "affine": cmd_affine, "sample": cmd_sample}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"mobi: error: {exc}\n")
        return EXIT_CONFIG
    except (MobiError, ValueError) as exc:
        err.write(f"mobi: error: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
