"""``fachom`` command line.

Exit codes: 0 success, 2 bad input, 3 validation failure, 4 role or
binding error, 5 a verification check failed.
"""
import argparse
import json
import sys
from pathlib import Path

from . import io, presets
from .algebra import enveloping, validate
from .bar import cyclic_bar
from .complexes import BettiTable, homology
from .errors import (
    DifferentialSquareNonzero,
    FachomError,
    GluingSyntaxError,
    InvalidCodim,
    LevelCapTooSmall,
    MixedWeightSigns,
    PresentationError,
    RoleMismatch,
    UnknownModel,
    ValidationError,
)
from .excision import evaluate, parse_gluing
from .freeconf import conf_labeled_homology, free_en_dims
from .higher_hh import builtin_model, load_simplicial, space_tensor
from .lie import ce_chains, ce_cochains, validate_lie
from .verify import VerifyConfig, report_json, run_all, select

EXIT_OK, EXIT_INPUT, EXIT_VALIDATION, EXIT_ROLE, EXIT_VERIFY = 0, 2, 3, 4, 5


class InputError(Exception):
    pass


def _is_file(arg):
    return Path(arg).suffix == ".json" or Path(arg).is_file()


def _algebra(arg, W):
    if _is_file(arg):
        try:
            return io.load_algebra(arg, W)
        except OSError as e:
            raise InputError(str(e)) from e
    return presets.algebra(arg, W)


def _lie(arg):
    if _is_file(arg):
        try:
            return io.load_lie(arg)
        except OSError as e:
            raise InputError(str(e)) from e
    return presets.lie(arg)


def _gens(arg):
    if _is_file(arg) or arg.lstrip().startswith("{"):
        try:
            return io.parse_presentation(io._load(arg))[1]
        except OSError as e:
            raise InputError(str(e)) from e
    return presets.space(arg)


def _emit(table, args):
    fmt = args.format
    if fmt == "json":
        text = table.to_json() + "\n"
    elif fmt == "csv":
        text = table.to_csv()
    else:
        text = table.to_text()
    _write(text, args)


def _write(text, args):
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_hochschild(args):
    a = _algebra(args.algebra, args.max_weight)
    validate(a)
    _emit(homology(cyclic_bar(a, args.max_weight), (-args.max_weight, args.max_weight)), args)


def cmd_excise(args):
    expr = parse_gluing(args.expression)
    if args.bindings:
        try:
            bindings = io.load_bindings(args.bindings, args.max_weight)
        except OSError as e:
            raise InputError(str(e)) from e
    else:
        bindings = {}
    for spec in args.bind or []:
        name, _, preset = spec.partition("=")
        if not preset:
            raise InputError(f"--bind expects NAME=PRESET, got {spec!r}")
        bindings[name] = presets.algebra(preset, args.max_weight)
    for v in bindings.values():
        if hasattr(v, "mul"):
            validate(v)
    _emit(evaluate(expr, bindings, args.max_weight), args)


def cmd_verify(args):
    try:
        ids = select(args.selector)
    except KeyError as e:
        raise InputError(e.args[0]) from e
    checks = run_all(VerifyConfig(args.max_weight, args.selector, args.jobs, ids))
    text = report_json(checks, args.max_weight) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    if args.format == "json" and not args.output:
        sys.stdout.write(text)
    else:
        for c in checks:
            where = "" if c.passed else f" (first divergence at {tuple(c.first_divergence)})"
            print(f"{c.status} {c.id}{where}")
    return EXIT_OK if all(c.passed for c in checks) else EXIT_VERIFY


def cmd_higher_hh(args):
    if _is_file(args.model):
        try:
            x = load_simplicial(Path(args.model).read_text())
        except OSError as e:
            raise InputError(str(e)) from e
    else:
        x = builtin_model(args.model)
    a = _algebra(args.algebra, args.max_weight)
    validate(a)
    c = space_tensor(x, a, args.max_weight, level_cap=args.level_cap)
    _emit(homology(c, (-args.max_weight, args.max_weight)), args)


def cmd_free_dims(args):
    _emit(free_en_dims(args.n, _gens(args.generators), args.max_weight), args)


def cmd_conf(args):
    m = presets.model(args.model) if not _is_file(args.model) else io.load_model(args.model)
    _emit(conf_labeled_homology(m, args.n, _gens(args.generators), args.max_weight), args)


def cmd_ce(args):
    g = _lie(args.lie)
    validate_lie(g)
    W = args.max_weight
    if args.kind == "chains":
        table = homology(ce_chains(g, W), (-W, W))
    elif args.kind == "cochains":
        table = homology(ce_cochains(g, W).carrier(), (-W, W))
    else:
        table = BettiTable(enveloping(g, W).dimension_table().entries)
    _emit(table, args)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-w", "--max-weight", type=int, default=3, help="weight window |w| <= N (default 3)")
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (verify only)")
    common.add_argument("--output", "-o", help="write the result here instead of stdout")

    p = argparse.ArgumentParser(prog="fachom", description="Exact factorization homology computations over Q.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hochschild", parents=[common], help="Hochschild homology (cyclic bar complex)")
    s.add_argument("algebra", help="preset name or JSON presentation file")
    s.set_defaults(func=cmd_hochschild)

    s = sub.add_parser("excise", parents=[common], help="evaluate a gluing expression")
    s.add_argument("expression")
    s.add_argument("bindings", nargs="?", help="JSON file binding piece names")
    s.add_argument("--bind", action="append", metavar="NAME=PRESET", help="bind a name to an algebra preset")
    s.set_defaults(func=cmd_excise)

    s = sub.add_parser("verify", parents=[common], help="run theorem checks")
    s.add_argument("selector", nargs="?", default="all", help="check id, family prefix, comma list, or 'all'")
    s.add_argument("--all", dest="selector", action="store_const", const="all")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("higher-hh", parents=[common], help="X ⊗ A for a simplicial set X")
    s.add_argument("model", help="point, circle, sphere2, torus, interval, or a JSON file")
    s.add_argument("algebra")
    s.add_argument("--level-cap", type=int)
    s.set_defaults(func=cmd_higher_hh)

    s = sub.add_parser("free-dims", parents=[common], help="dimensions of the free n-disk algebra")
    s.add_argument("n", type=int)
    s.add_argument("generators", help="generator preset (x, xy, ...) or JSON presentation")
    s.set_defaults(func=cmd_free_dims)

    s = sub.add_parser("conf", parents=[common], help="labeled configuration homology via the Lie model")
    s.add_argument("model", help="R<n>, S<m>, S<m>xR<k>, point, or a JSON model file")
    s.add_argument("n", type=int)
    s.add_argument("generators")
    s.set_defaults(func=cmd_conf)

    s = sub.add_parser("ce", parents=[common], help="Chevalley–Eilenberg (co)homology")
    s.add_argument("lie")
    s.add_argument("kind", choices=("chains", "cochains", "enveloping"), nargs="?", default="chains")
    s.set_defaults(func=cmd_ce)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if args.max_weight < 0:
        print("error: --max-weight must be >= 0", file=sys.stderr)
        return EXIT_INPUT
    try:
        code = args.func(args)
        return EXIT_OK if code is None else code
    except GluingSyntaxError as e:
        print(f"syntax error: {e}\n  {e.text}\n  {' ' * (e.offset - 1)}^", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, PresentationError, UnknownModel, InvalidCodim, MixedWeightSigns, json.JSONDecodeError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except RoleMismatch as e:
        print(f"role error: {e}", file=sys.stderr)
        return EXIT_ROLE
    except (ValidationError, DifferentialSquareNonzero, LevelCapTooSmall) as e:
        print(f"validation error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except FachomError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
