"""Command-line surface: generate / code / curvatures / equiv / reconstruct.

Exit codes: 0 success (or equivalent), 1 not equivalent, 2 domain error,
64 usage error, 65 parse error.  Outputs are deterministic byte-for-byte.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import equivalence, families, formats
from .frame import (
    AdmissibilityError,
    DegenerateInputError,
    planar_curvatures,
    reconstruct_from_profile,
    space_invariants,
)
from .hilbert import expand_word, hilbert_kappa_sequence
from .snowflake import ClosureError

EXIT_OK = 0
EXIT_DIFFERENT = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64
EXIT_PARSE = 65

# Default step caps keep the largest output around 10^7 points; the
# AFFRAME_MAX_POINTS env var (or --max-points) replaces them with an
# explicit point-count bound.
DEFAULT_STEP_BOUNDS = {families.KOCH: 12, families.SNOWFLAKE: 12, families.HILBERT: 10}
MAX_POINTS_ENV = "AFFRAME_MAX_POINTS"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="afframe", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", help="generate a fractal curve from 3 starting points")
    gen.add_argument("--family", required=True, choices=families.FAMILIES)
    gen.add_argument("--step", required=True, type=int)
    gen.add_argument("--init", required=True, help='3 points, e.g. "0,0;1,0;1,1"')
    gen.add_argument("--format", default="csv", choices=("csv", "json", "svg"))
    gen.add_argument("--output", "-o", default=None)
    mode = gen.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="force rational arithmetic")
    mode.add_argument("--float", dest="force_float", action="store_true")
    gen.add_argument("--bar-ratio", default="0", help="kappa_bar = ratio * kappa (3D init)")
    gen.add_argument("--tau-ratio", default="0", help="tau = ratio * kappa (3D init)")
    gen.add_argument("--max-points", type=int, default=None)
    gen.set_defaults(func=_cmd_generate)

    code = sub.add_parser("code", help="print a family's code sequence")
    code.add_argument("--family", required=True, choices=families.FAMILIES)
    code.add_argument("--step", required=True, type=int)
    code.add_argument("--notation", default=None, choices=("binary", "letters", "kappas"))
    code.add_argument("--output", "-o", default=None)
    code.set_defaults(func=_cmd_code)

    curv = sub.add_parser("curvatures", help="invariant profile of a points file")
    curv.add_argument("--input", "-i", required=True)
    curv.add_argument("--dim", type=int, default=None)
    curv.add_argument("--output", "-o", default=None)
    curv.set_defaults(func=_cmd_curvatures)

    eq = sub.add_parser("equiv", help="decide equivalence of two points files")
    eq.add_argument("--a", required=True)
    eq.add_argument("--b", required=True)
    eq.add_argument("--mode", default=None, choices=(equivalence.PLANAR_AFFINE, equivalence.CENTROAFFINE))
    eq.add_argument("--tol", type=float, default=1e-9)
    eq.add_argument("--format", default="text", choices=("text", "json"))
    eq.set_defaults(func=_cmd_equiv)

    rec = sub.add_parser("reconstruct", help="rebuild a curve from init points and a profile")
    rec.add_argument("--init", required=True)
    rec.add_argument("--profile", required=True)
    rec.add_argument("--output", "-o", default=None)
    rec.set_defaults(func=_cmd_reconstruct)
    return parser


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise formats.ParseError(f"cannot read {path}: {exc}") from exc


def _check_bounds(family: str, step: int, dim: int, override: int | None) -> None:
    limit = override
    if limit is None and MAX_POINTS_ENV in os.environ:
        try:
            limit = int(os.environ[MAX_POINTS_ENV])
        except ValueError as exc:
            raise _UsageError(f"{MAX_POINTS_ENV} must be an integer") from exc
    count = families.point_count(family, step, dim)
    if limit is not None:
        if count > limit:
            raise _UsageError(f"step {step} needs {count} points, above the bound {limit}")
        return
    if step > DEFAULT_STEP_BOUNDS[family]:
        raise _UsageError(
            f"step {step} exceeds the default bound {DEFAULT_STEP_BOUNDS[family]} "
            f"for {family}; raise {MAX_POINTS_ENV} or pass --max-points to override"
        )


def _cmd_generate(args) -> int:
    if args.step < 2:
        raise _UsageError("step must be >= 2")
    init = formats.parse_init(args.init, force_exact=args.exact, force_float=args.force_float)
    dim = len(init[0])
    if dim == 3 and args.family == families.SNOWFLAKE:
        raise _UsageError("snowflake has no space extension")
    _check_bounds(args.family, args.step, dim, args.max_points)
    ratios = formats.parse_scalars([args.bar_ratio, args.tau_ratio])
    spec = families.FamilySpec(
        family=args.family,
        step=args.step,
        init=tuple(tuple(p) for p in init),
        bar_ratio=ratios[0],
        tau_ratio=ratios[1],
    )
    curve = families.generate(spec)
    if args.format == "csv":
        text = formats.dumps_points_csv(curve)
    elif args.format == "json":
        text = formats.dumps_points_json(curve)
    else:
        text = formats.curve_to_svg(curve)
    _write(text, args.output)
    return EXIT_OK


def _cmd_code(args) -> int:
    if args.step < 2:
        raise _UsageError("step must be >= 2")
    notation = args.notation
    if notation is None:
        notation = "letters" if args.family == families.HILBERT else "binary"
    if notation in ("letters", "kappas") and args.family != families.HILBERT:
        raise _UsageError(f"notation {notation!r} is only defined for the hilbert family")
    if notation == "binary" and args.family == families.HILBERT:
        raise _UsageError("the hilbert family has no binary code")
    if notation == "kappas":
        text = " ".join(str(v) for v in hilbert_kappa_sequence(args.step))
    elif notation == "letters":
        text = expand_word(args.step)
    else:
        text = families.code_string(args.family, args.step)
    _write(text + "\n", args.output)
    return EXIT_OK


def _cmd_curvatures(args) -> int:
    curve = formats.loads_points_csv(_read(args.input))
    if args.dim is not None and args.dim != curve.dim:
        raise _UsageError(f"--dim {args.dim} does not match the file dimension {curve.dim}")
    profile = planar_curvatures(curve) if curve.dim == 2 else space_invariants(curve)
    _write(formats.dumps_profile_json(profile), args.output)
    return EXIT_OK


def _witness_json(witness):
    if witness is None:
        return None
    return {
        "matrix": [[formats._value_to_json(v) for v in row] for row in witness.matrix],
        "translation": [formats._value_to_json(v) for v in witness.translation],
    }


def _cmd_equiv(args) -> int:
    a = formats.loads_points_csv(_read(args.a))
    b = formats.loads_points_csv(_read(args.b))
    try:
        report = equivalence.are_equivalent(a, b, mode=args.mode, tol=args.tol)
    except AdmissibilityError:
        raise
    except ValueError as exc:
        if args.format == "json":
            doc = {"equivalent": False, "reason": str(exc)}
            _write(json.dumps(doc, separators=(",", ":")) + "\n", None)
        else:
            _write(f"equivalent: false\nreason: {exc}\n", None)
        return EXIT_DIFFERENT
    if args.format == "json":
        doc = {
            "equivalent": report.equivalent,
            "mode": report.mode,
            "max_deviation": formats._value_to_json(report.max_deviation),
            "shift": report.shift,
            "witness": _witness_json(report.witness),
        }
        if report.reason:
            doc["reason"] = report.reason
        _write(json.dumps(doc, separators=(",", ":")) + "\n", None)
    else:
        lines = [
            f"equivalent: {'true' if report.equivalent else 'false'}",
            f"mode: {report.mode}",
            f"max_deviation: {formats.format_scalar(report.max_deviation) if not isinstance(report.max_deviation, int) else report.max_deviation}",
            f"shift: {report.shift}",
        ]
        if report.witness is not None:
            matrix = [[formats.format_scalar(v) for v in row] for row in report.witness.matrix]
            translation = [formats.format_scalar(v) for v in report.witness.translation]
            lines.append(f"witness_matrix: {matrix}")
            lines.append(f"witness_translation: {translation}")
        if report.reason:
            lines.append(f"reason: {report.reason}")
        _write("\n".join(lines) + "\n", None)
    return EXIT_OK if report.equivalent else EXIT_DIFFERENT


def _cmd_reconstruct(args) -> int:
    init = formats.parse_init(args.init)
    profile = formats.loads_profile_json(_read(args.profile))
    if len(init[0]) != profile.dim:
        raise ValueError(
            f"init points are {len(init[0])}-dimensional but the profile is {profile.dim}-dimensional"
        )
    curve = reconstruct_from_profile(init, profile)
    _write(formats.dumps_points_csv(curve), args.output)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"afframe: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except formats.ParseError as exc:
        print(f"afframe: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AdmissibilityError as exc:
        print(f"afframe: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (DegenerateInputError, ClosureError, ZeroDivisionError, ValueError) as exc:
        print(f"afframe: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
