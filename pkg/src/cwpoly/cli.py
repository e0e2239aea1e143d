"""Command-line front end.

Exit codes: 0 the property holds / the certificate is valid, 1 it fails (a
witness is printed), 2 usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import __version__
from . import constructors as cons
from . import ideal as ideals
from . import monomial as mono
from . import multicomplex as mc
from . import polymatroid as pm
from .experiments import TARGETS, ExperimentParams, replay, run_experiment, verdict_of
from .formats import (FormatError, dumps, ideal_to_json, ideal_to_text, multicomplex_to_json,
                      order_to_text, parse_ideal, parse_multicomplex, parse_order)
from .linear_quotients import (DEFAULT_BUDGET, FOUND, NotComponentwisePolymatroidalError,
                               search_lq_order, synthesize_lq_order, verify_linear_quotients)

EXIT_HOLDS, EXIT_FAILS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_ideal(args, path: str):
    return parse_ideal(_read(path), getattr(args, "n", None))


def _ideal_output(args, I) -> str:
    return ideal_to_text(I) if args.format == "text" else dumps(ideal_to_json(I))


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers") from None


# ---- check ----------------------------------------------------------------

BOUNDED_MODES = {"exchange-bounded", "dual-bounded"}


def cmd_check(args) -> int:
    I = _load_ideal(args, args.input)
    if args.mode in BOUNDED_MODES:
        if I.is_zero:
            cap = args.cap or 0
        else:
            cap = args.cap if args.cap is not None else ideals.degree_range(I)[1] + 2
        fn = pm.verify_exchange_condition_bounded if args.mode == "exchange-bounded" \
            else pm.verify_dual_exchange_bounded
        verdict = fn(I, cap)
    else:
        fn = {"cwp": pm.is_componentwise_polymatroidal,
              "polymatroidal": pm.is_polymatroidal,
              "strong": pm.has_strong_exchange}[args.mode]
        verdict = fn(I)
        cap = None
    if args.format == "text":
        lines = ["true" if verdict.holds else "false"]
        if cap is not None:
            lines.append(f"(bounded check up to degree {cap}; not a decision procedure)")
        if verdict.witness is not None:
            lines.append("witness: " + verdict.witness.describe())
        _emit(args, "\n".join(lines))
    else:
        out = {"mode": args.mode} | verdict.to_json()
        if cap is not None:
            out |= {"bounded": True, "cap": cap}
        _emit(args, dumps(out))
    return EXIT_HOLDS if verdict.holds else EXIT_FAILS


# ---- order / verify-order ---------------------------------------------------

def _order_output(args, result) -> str:
    if args.format == "text":
        return order_to_text(result.order)
    return dumps(result.to_json())


def cmd_order(args) -> int:
    I = _load_ideal(args, args.input)
    if args.strategy in ("split", "paper"):
        try:
            result = synthesize_lq_order(I, checked=not args.unchecked)
        except NotComponentwisePolymatroidalError as exc:
            _emit(args, dumps({"status": "not componentwise polymatroidal",
                               "witness": exc.witness.to_json()}))
            return EXIT_FAILS
    else:
        found = search_lq_order(I, args.budget or DEFAULT_BUDGET)
        if found.status != FOUND:
            _emit(args, dumps({"status": found.status, "nodes": found.nodes}))
            return EXIT_FAILS
        result = found.order
    # never emit an unverified order
    result = verify_linear_quotients(I, result.order)
    _emit(args, _order_output(args, result))
    return EXIT_HOLDS if result.valid else EXIT_FAILS


def cmd_verify_order(args) -> int:
    I = _load_ideal(args, args.input)
    order = parse_order(_read(args.order), I.n)
    try:
        result = verify_linear_quotients(I, order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "text":
        msg = "valid" if result.valid else f"invalid at position {result.failed_at}"
        _emit(args, msg)
    else:
        _emit(args, dumps(result.to_json() | {"failed_at": result.failed_at}))
    return EXIT_HOLDS if result.valid else EXIT_FAILS


# ---- construct ----------------------------------------------------------------

def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"construct {args.family} needs {', '.join(missing)}")


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "veronese":
        _need(args, "a", "d")
        I = cons.veronese_type(_ints(args.a, "--a"), args.d)
    elif fam == "borel":
        _need(args, "u", "n")
        I = cons.principal_borel(mono.parse_monomial(args.u, args.n))
    elif fam == "fatpoints":
        _need(args, "sets", "k", "n")
        subsets = [[i - 1 for i in _ints(s, "--sets")] for s in args.sets.split("/")]
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", cons.UnionConditionWarning)
            I = cons.fat_point_ideal(args.n, subsets, _ints(args.k, "--k"))
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    elif fam == "layered":
        _need(args, "files")
        layers = [_load_ideal(args, f) for f in args.files.split(",")]
        I = cons.layered_sum(layers, validate=not args.no_validate)
    elif fam == "socle":
        _need(args, "input")
        I = cons.socle(_load_ideal(args, args.input))
    elif fam == "power":
        _need(args, "input", "k")
        I = ideals.power(_load_ideal(args, args.input), int(args.k))
    elif fam == "intersect":
        _need(args, "files")
        parts = [_load_ideal(args, f) for f in args.files.split(",")]
        I = parts[0]
        for J in parts[1:]:
            I = ideals.intersect(I, J)
    elif fam == "component":
        _need(args, "input", "j")
        I = ideals.component(_load_ideal(args, args.input), args.j)
    else:
        raise UsageError(f"unknown family {fam!r}")
    _emit(args, _ideal_output(args, I))
    return EXIT_HOLDS


# ---- shell / convert ----------------------------------------------------------

def _shelling_output(args, result) -> str:
    if args.format == "text":
        return order_to_text(result.order)
    return dumps({
        "order": [list(a) for a in result.order],
        "valid": result.valid,
        "failed_at": result.failed_at,
        "certificate": [{"position": pos, "joins": [list(b) for b in gens]}
                        for pos, gens in result.certificate],
    })


def cmd_shell(args) -> int:
    M = parse_multicomplex(_read(args.input))
    if args.action == "synthesize":
        try:
            result = mc.shelling_order(M)
        except NotComponentwisePolymatroidalError as exc:
            _emit(args, dumps({"status": "not a componentwise discrete polymatroid",
                               "witness": exc.witness.to_json()}))
            return EXIT_FAILS
    else:
        if args.order is None:
            raise UsageError("shell --action verify needs --order")
        order = parse_order(_read(args.order), M.n)
        try:
            result = mc.verify_shelling(M, order)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(args, _shelling_output(args, result))
    return EXIT_HOLDS if result.valid else EXIT_FAILS


def cmd_convert(args) -> int:
    text = _read(args.input)
    if args.to == "multicomplex":
        I = parse_ideal(text, getattr(args, "n", None))
        if args.restrict:
            I, keep = mc.restrict_to_support(I)
            out = multicomplex_to_json(mc.ideal_to_multicomplex(I)) | {"support": [k + 1 for k in keep]}
        else:
            out = multicomplex_to_json(mc.ideal_to_multicomplex(I))
        _emit(args, dumps(out))
    else:
        M = parse_multicomplex(text)
        _emit(args, _ideal_output(args, mc.facet_ideal(M)))
    return EXIT_HOLDS


# ---- experiment ---------------------------------------------------------------

def cmd_experiment(args) -> int:
    if args.replay:
        return _replay_report(args)
    if args.target is None:
        raise UsageError("experiment needs --target (or --replay)")
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    seed = 0 if args.seed is None else args.seed
    p = ExperimentParams(args.target, args.trials, seed, n_max=args.n_max, degree_max=args.degree_max,
                         budget=args.budget or ExperimentParams.budget)
    header, records = run_experiment(p, workers=args.workers)
    lines = [json.dumps(header, sort_keys=True)] + [json.dumps(r, sort_keys=True) for r in records]
    _emit(args, "\n".join(lines))
    found = [r for r in records if r.get("counterexample")]
    undecided = sum(1 for r in records if r.get("undecided"))
    for r in found:
        print(f"!!! COUNTEREXAMPLE to the {args.target} conjecture at trial {r['trial']}: "
              f"{dumps(r['instance'])}", file=sys.stderr)
    print(f"{args.target}: {len(records)} trials, {len(found)} counterexamples, "
          f"{undecided} undecided (budget)", file=sys.stderr)
    return EXIT_HOLDS


def _replay_report(args) -> int:
    mismatches = 0
    count = 0
    for line in _read(args.replay).splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        if rec.get("kind") != "record":
            continue
        count += 1
        if rec.get("instance") is None:
            continue
        outcome = replay(rec)
        if outcome != rec["outcome"] or verdict_of(rec, outcome) != rec["counterexample"]:
            mismatches += 1
            print(f"trial {rec['trial']}: replay differs", file=sys.stderr)
    _emit(args, dumps({"replayed": count, "mismatches": mismatches}))
    return EXIT_HOLDS if mismatches == 0 else EXIT_FAILS


# ---- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--cap", type=int, help="degree cap for bounded checks (default: top degree + 2)")
    common.add_argument("--budget", type=int, help=f"search node budget (default {DEFAULT_BUDGET})")
    common.add_argument("--seed", type=int, help="PRNG seed for experiments")

    parser = argparse.ArgumentParser(prog="cwpoly", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"cwpoly {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="test an exchange property")
    p.add_argument("input")
    p.add_argument("--mode", choices=["cwp", "polymatroidal", "strong", "exchange-bounded", "dual-bounded"],
                   default="cwp")
    p.add_argument("--n", type=int, help="variable count for plain-text input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("order", parents=[common], help="find a linear-quotients order")
    p.add_argument("input")
    p.add_argument("--strategy", choices=["split", "paper", "search"], default="split",
                   help="split: recursive synthesis ('paper' is an alias); search: backtracking")
    p.add_argument("--unchecked", action="store_true", help="skip the componentwise polymatroidal check")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("verify-order", parents=[common], help="verify a linear-quotients order")
    p.add_argument("input")
    p.add_argument("order")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_verify_order)

    p = sub.add_parser("construct", parents=[common], help="build an ideal from a family")
    p.add_argument("family", choices=["veronese", "borel", "fatpoints", "layered", "socle",
                                      "power", "intersect", "component"])
    p.add_argument("--a", help="Veronese bound, e.g. 1,1,1")
    p.add_argument("--d", type=int, help="Veronese degree")
    p.add_argument("--u", help="Borel generator, e.g. x2*x3")
    p.add_argument("--n", type=int, help="number of variables")
    p.add_argument("--sets", help="fat-point subsets, e.g. 1,2,3/1,3,4")
    p.add_argument("--k", help="exponents: fat-point list (2,2) or power")
    p.add_argument("--j", type=int, help="component degree")
    p.add_argument("--files", help="comma-separated ideal files")
    p.add_argument("--input", help="ideal file")
    p.add_argument("--no-validate", action="store_true", help="skip layered-sum validation")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("shell", parents=[common], help="verify or synthesize a shelling order")
    p.add_argument("input")
    p.add_argument("--action", choices=["verify", "synthesize"], default="synthesize")
    p.add_argument("--order", help="order file for --action verify")
    p.set_defaults(func=cmd_shell)

    p = sub.add_parser("convert", parents=[common], help="ideal <-> multicomplex")
    p.add_argument("input")
    p.add_argument("--to", choices=["multicomplex", "ideal"], default="multicomplex")
    p.add_argument("--restrict", action="store_true", help="drop variables outside the support first")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("experiment", parents=[common], help="seeded conjecture sweeps")
    p.add_argument("--target", choices=TARGETS)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--n-max", type=int, default=ExperimentParams.n_max)
    p.add_argument("--degree-max", type=int, default=ExperimentParams.degree_max)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--replay", help="replay every record of a report and compare")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_HOLDS
    try:
        return args.func(args)
    except (UsageError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
