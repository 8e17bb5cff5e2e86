"""Command-line interface.

    binary-k1 gen --kind binary --seed 3 --field fp:101 --length 3
    binary-k1 torsion FILE
    binary-k1 shorten FILE
    binary-k1 truncate FILE --part ge1
    binary-k1 total FILE
    binary-k1 remark FILE
    binary-k1 verify --suite all --trials 50 --seed 0 --field q

FILE may be ``-`` for stdin. JSON goes to stdout and summaries to stderr.
Exit status: 0 success, 1 an identity failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import serialize
from .binary import BinaryComplex, BinaryLadder, BinarySES
from .complexes import ChainComplex
from .errors import BinaryK1Error
from .fields import parse_field
from .randgen import GenConfig, gen_acyclic, gen_binary, gen_ladder, gen_nenashev, gen_ses
from .shortening import grayson_shorten, ses_shorten, shorten_ladder, truncate_ge1, truncate_le2
from .suites import SUITE_NAMES, run_suite
from .torsion import binary_torsion, chain_torsion
from .totals import NenashevDiagram, ladder_total, nenashev_total, remark_objects

TRIALS_ENV = "BINARY_K1_TRIALS"
DEFAULT_TRIALS = 100

GEN_KINDS = ("complex", "binary", "diagonal", "ladder", "ses", "nenashev")


class UsageError(Exception):
    pass


def default_trials() -> int:
    raw = os.environ.get(TRIALS_ENV)
    if raw is None:
        return DEFAULT_TRIALS
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"{TRIALS_ENV} must be an integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"{TRIALS_ENV} must be positive")
    return n


def _read(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return serialize.loads(text)


def _emit(obj):
    if not isinstance(obj, (dict, list)):
        obj = serialize.to_json(obj)
    print(json.dumps(obj))


# -- subcommands -------------------------------------------------------------------


def cmd_gen(args) -> int:
    cfg = GenConfig(seed=args.seed, field=parse_field(args.field), max_rank=args.max_rank,
                    length=args.length, entry_bound=args.entry_bound)
    kind = args.kind
    if kind == "complex":
        obj = gen_acyclic(cfg)
    elif kind in ("binary", "diagonal"):
        obj = gen_binary(cfg, diagonal=kind == "diagonal")
    elif kind == "ladder":
        obj = gen_ladder(cfg)
    elif kind == "ses":
        obj = gen_ses(cfg)
    else:
        obj = gen_nenashev(cfg)
    _emit(obj)
    return 0


def cmd_torsion(args) -> int:
    obj = _read(args.file)
    if isinstance(obj, ChainComplex):
        value = chain_torsion(obj)
    elif isinstance(obj, BinaryComplex):
        value = binary_torsion(obj)
    else:
        raise UsageError("torsion takes a complex or a binary complex")
    print(json.dumps(value.encode()) if args.json else str(value))
    return 0


def cmd_shorten(args) -> int:
    obj = _read(args.file)
    if isinstance(obj, BinaryComplex):
        _emit(grayson_shorten(obj))
    elif isinstance(obj, BinaryLadder):
        _emit(shorten_ladder(obj))
    elif isinstance(obj, BinarySES):
        _emit(ses_shorten(obj))
    else:
        raise UsageError("shorten takes a binary complex, ladder or short exact sequence")
    return 0


def cmd_truncate(args) -> int:
    obj = _read(args.file)
    if not isinstance(obj, BinaryComplex):
        raise UsageError("truncate takes a binary complex")
    _emit(truncate_ge1(obj) if args.part == "ge1" else truncate_le2(obj))
    return 0


def cmd_total(args) -> int:
    obj = _read(args.file)
    if isinstance(obj, BinaryLadder):
        _emit(ladder_total(obj))
    elif isinstance(obj, NenashevDiagram):
        _emit(nenashev_total(obj))
    else:
        raise UsageError("total takes a ladder or a Nenashev diagram")
    return 0


def cmd_remark(args) -> int:
    obj = _read(args.file)
    if not isinstance(obj, NenashevDiagram):
        raise UsageError("remark takes a Nenashev diagram")
    objs = remark_objects(obj)
    out = {name: {"torsion": binary_torsion(p).encode(), "object": serialize.to_json(p)}
           for name, p in objs.items()}
    _emit(out)
    return 0


def cmd_verify(args) -> int:
    field = parse_field(args.field)
    trials = args.trials if args.trials is not None else default_trials()
    if trials < 1:
        raise UsageError("--trials must be positive")
    report = run_suite(args.suite, field, trials, seed=args.seed, replay=args.replay)
    _emit(report.to_json())
    status = "PASS" if report.passed else "FAIL"
    print(f"{status} {report.suite} over {report.field}: {report.trials} trials, "
          f"{report.checks} checks, {len(report.failures)} failures, "
          f"{report.elapsed:.2f}s", file=sys.stderr)
    for f in report.failures[:10]:
        print(f"  seed={f['seed']} {f['suite']}/{f['identity']}: {f['lhs']} != {f['rhs']}",
              file=sys.stderr)
    return 0 if report.passed else 1


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="binary-k1",
                                 description="Binary acyclic complexes and their torsion.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random instance as JSON")
    g.add_argument("--kind", choices=GEN_KINDS, default="binary")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--field", default="fp:101", help="q or fp:P (default fp:101)")
    g.add_argument("--length", type=int, default=3)
    g.add_argument("--max-rank", type=int, default=2)
    g.add_argument("--entry-bound", type=int, default=3)
    g.set_defaults(func=cmd_gen)

    tp = sub.add_parser("torsion", help="torsion of a complex or binary complex")
    tp.add_argument("file")
    tp.add_argument("--json", action="store_true", help="print the JSON scalar encoding")
    tp.set_defaults(func=cmd_torsion)

    sp = sub.add_parser("shorten", help="Grayson shortening of a binary complex, ladder or SES")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_shorten)

    tr = sub.add_parser("truncate", help="the truncations t_{>=1} and t_{<=2}")
    tr.add_argument("file")
    tr.add_argument("--part", choices=("ge1", "le2"), required=True)
    tr.set_defaults(func=cmd_truncate)

    to = sub.add_parser("total", help="total complex of a ladder or Nenashev diagram")
    to.add_argument("file")
    to.set_defaults(func=cmd_total)

    rm = sub.add_parser("remark", help="decomposition objects of a Nenashev diagram")
    rm.add_argument("file")
    rm.set_defaults(func=cmd_remark)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITE_NAMES, default="all")
    v.add_argument("--trials", type=int, default=None,
                   help=f"trials per suite (default ${TRIALS_ENV} or {DEFAULT_TRIALS})")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--field", default="fp:101", help="q or fp:P (default fp:101)")
    v.add_argument("--replay", type=int, default=None, metavar="TRIAL_SEED",
                   help="rerun the single trial with this reported seed")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (BinaryK1Error, UsageError, ValueError, TypeError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
