"""Command-line front end.

Subcommands: eval, region, orbit, count, enumerate, verify.  Exit codes:
0 success (and every verification check passed); 1 a verification check
failed; 2 usage error (bad flags, malformed word or field spec, malformed
BETAFORGE_LIMITS); 3 a resource limit cut the computation short (step
budget exhausted, truncated branch graph, or incomplete enumeration).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .branching import (
    DEFAULT_MAX_NODES,
    DEFAULT_MAX_STEPS,
    OutsideDomain,
    StepLimit,
    SwitchHit,
    UniqueTail,
    bfs_expansions,
    count_expansions,
    deterministic_run,
)
from .numberfield import BaseField, define_field, golden_field, q2_field, qf_field, to_decimal
from .verify import PROFILES, render_records, render_text, run_all
from .words import EmptyWordError, WordSyntaxError, eval_word, parse_word, region

DEFAULT_MAX_DEPTH = 256
DEFAULT_MAX_COUNT = 64

_LIMIT_KEYS = ("max_steps", "max_nodes", "max_depth", "max_count")
_BUILTIN_LIMITS = {
    "max_steps": DEFAULT_MAX_STEPS,
    "max_nodes": DEFAULT_MAX_NODES,
    "max_depth": DEFAULT_MAX_DEPTH,
    "max_count": DEFAULT_MAX_COUNT,
}

_FIELD_ALIASES = {"q2": q2_field, "qf": qf_field, "golden": golden_field}


class UsageError(Exception):
    """Bad input that maps to exit code 2."""


def _parse_field(spec: str) -> BaseField:
    if spec in _FIELD_ALIASES:
        return _FIELD_ALIASES[spec]()
    if spec.startswith("poly:"):
        body = spec[len("poly:"):]
        coeff_part, sep, interval_part = body.partition("@")
        if not sep:
            raise UsageError(
                f"field spec {spec!r} lacks '@lo,hi' (expected "
                "poly:c0,c1,...,1@lo,hi with ascending coefficients)")
        try:
            coeffs = tuple(int(c.strip()) for c in coeff_part.split(","))
        except ValueError:
            raise UsageError(f"non-integer coefficient in field spec {spec!r}")
        bounds = interval_part.split(",")
        if len(bounds) != 2:
            raise UsageError(f"field spec {spec!r} needs exactly two interval bounds")
        try:
            lo, hi = (Fraction(b.strip()) for b in bounds)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"malformed interval bound in field spec {spec!r}")
        try:
            return define_field(coeffs, (lo, hi))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"invalid field spec {spec!r}: {exc}")
    raise UsageError(
        f"unknown field {spec!r} (use q2, qf, golden, or poly:coeffs@lo,hi)")


def _field_record(field: BaseField, spec: str) -> dict:
    lo, hi = field.interval()
    return {
        "spec": spec,
        "min_poly": list(field.min_poly),
        "interval": [str(lo), str(hi)],
    }


def _env_limits() -> dict:
    raw = os.environ.get("BETAFORGE_LIMITS", "")
    out: dict[str, int] = {}
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        key, sep, val = part.partition("=")
        key, val = key.strip(), val.strip()
        if not sep or key not in _LIMIT_KEYS:
            raise UsageError(
                f"BETAFORGE_LIMITS entry {part!r} is not one of "
                f"{', '.join(_LIMIT_KEYS)}")
        if not val.isdigit() or int(val) < 1:
            raise UsageError(f"BETAFORGE_LIMITS value for {key} must be a positive integer")
        out[key] = int(val)
    return out


def _limits(args) -> dict:
    limits = dict(_BUILTIN_LIMITS)
    limits.update(_env_limits())
    for key in _LIMIT_KEYS:
        val = getattr(args, key)
        if val is not None:
            if val < 1:
                raise UsageError(f"--{key.replace('_', '-')} must be positive")
            limits[key] = val
    return limits


def _word_value(args, field: BaseField):
    word = parse_word(args.word)
    x = eval_word(word, field)
    if args.plus_one:
        x = x + 1
    return word, x


# ---------------------------------------------------------------------------
# subcommands


def _cmd_eval(args, field) -> int:
    _, x = _word_value(args, field)
    if args.format == "json":
        payload = {
            "word": args.word,
            "plus_one": args.plus_one,
            "field": _field_record(field, args.field),
            "coeffs": [str(c) for c in x.coeffs],
            "decimal": to_decimal(x, args.digits),
            "digits": args.digits,
        }
        print(json.dumps(payload))
    else:
        print(f"{x} / {to_decimal(x, args.digits)}")
    return 0


def _cmd_region(args, field) -> int:
    _, x = _word_value(args, field)
    reg = region(x)
    if args.format == "json":
        print(json.dumps({"word": args.word, "plus_one": args.plus_one,
                          "decimal": to_decimal(x, args.digits),
                          "region": str(reg)}))
    else:
        print(str(reg))
    return 0


def _orbit_rows(x, max_steps: int, digits: int):
    out = deterministic_run(x, max_steps=max_steps)
    rows = []
    v = x
    for i, d in enumerate(out.segment):
        rows.append((i, d, to_decimal(v, digits), str(region(v))))
        v = v * x.field.q - d
    rows.append((len(out.segment), None, to_decimal(v, digits), str(region(v))))
    return rows, out


def _cmd_orbit(args, field, limits) -> int:
    _, x = _word_value(args, field)
    rows, out = _orbit_rows(x, limits["max_steps"], args.digits)
    end = out.end
    if isinstance(end, SwitchHit):
        tag, code = "[SWITCH]", 0
        end_rec = {"kind": "switch", "decimal": to_decimal(end.value, args.digits)}
    elif isinstance(end, UniqueTail):
        tag, code = f"[TAIL {end.tail_word}]", 0
        end_rec = {"kind": "unique_tail", "tail": str(end.tail_word)}
    else:
        assert isinstance(end, StepLimit)
        tag, code = "[STEP LIMIT]", 3
        end_rec = {"kind": "step_limit", "steps": end.steps}

    if args.format == "json":
        print(json.dumps({
            "word": args.word, "plus_one": args.plus_one,
            "steps": [{"step": s, "digit": d, "decimal": dec, "region": reg}
                      for s, d, dec, reg in rows],
            "end": end_rec,
        }))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["step", "digit", "decimal", "region"])
        for s, d, dec, reg in rows:
            writer.writerow([s, "" if d is None else d, dec, reg])
        sys.stdout.write(buf.getvalue())
    else:
        parts = []
        for _, d, dec, _ in rows:
            parts.append(dec)
            if d is not None:
                parts.append(f"→{d}")
        print(" ".join(parts + [tag]))
    return code


def _cmd_count(args, field, limits) -> int:
    _, x = _word_value(args, field)
    card = count_expansions(x, max_steps=limits["max_steps"],
                            max_nodes=limits["max_nodes"])
    if args.format == "json":
        print(json.dumps({"word": args.word, "plus_one": args.plus_one,
                          "cardinality": {"kind": card.kind, "count": card.count},
                          "display": str(card)}))
    else:
        print(str(card))
    return 3 if card.kind == "lower_bound" else 0


def _cmd_enumerate(args, field, limits) -> int:
    _, x = _word_value(args, field)
    found, complete = bfs_expansions(
        x, max_count=limits["max_count"], max_depth=limits["max_depth"],
        max_steps=limits["max_steps"], max_nodes=limits["max_nodes"])
    words = sorted(found)
    if args.format == "json":
        print(json.dumps({"word": args.word, "plus_one": args.plus_one,
                          "expansions": [str(w) for w in words],
                          "complete": complete}))
    else:
        for w in words:
            print(str(w))
        if not complete:
            print("# incomplete: a resource limit was reached", file=sys.stderr)
    return 0 if complete else 3


def _cmd_verify(args) -> int:
    check_ids = args.checks or None
    if check_ids and "all" in check_ids:
        check_ids = None
    try:
        results = run_all(args.profile, check_ids)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        print(json.dumps(render_records(results, profile=args.profile)))
    else:
        print(render_text(results))
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q2",
                        help="base field: q2, qf, golden, or poly:coeffs@lo,hi "
                             "(ascending integer coefficients, monic)")
    common.add_argument("--digits", type=int, default=6,
                        help="decimal digits to print (default 6)")
    common.add_argument("--format", default="text",
                        choices=("text", "json", "csv"),
                        help="output format (csv applies to orbit only)")
    common.add_argument("--max-steps", dest="max_steps", type=int, default=None)
    common.add_argument("--max-nodes", dest="max_nodes", type=int, default=None)
    common.add_argument("--max-depth", dest="max_depth", type=int, default=None)
    common.add_argument("--max-count", dest="max_count", type=int, default=None)

    word_common = argparse.ArgumentParser(add_help=False)
    word_common.add_argument("word", help="binary word, e.g. '00(01)*' or '1(0000)^2 0(10)*'")
    word_common.add_argument("--plus-one", dest="plus_one", action="store_true",
                             help="add 1 to the word's value before the command runs")

    parser = argparse.ArgumentParser(
        prog="betaforge",
        description="Exact arithmetic for binary expansions in non-integer bases.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("eval", parents=[common, word_common],
                   help="exact value and decimal of a word")
    sub.add_parser("region", parents=[common, word_common],
                   help="which region the word's value lies in")
    sub.add_parser("orbit", parents=[common, word_common],
                   help="forced-orbit trace until the branching region, a cycle, or the step limit")
    sub.add_parser("count", parents=[common, word_common],
                   help="cardinality classification of the expansion set")
    sub.add_parser("enumerate", parents=[common, word_common],
                   help="expansions of the word's value, lexicographically sorted")
    p_verify = sub.add_parser("verify", parents=[common],
                              help="run verification checks")
    p_verify.add_argument("checks", nargs="*",
                          help="check ids to run (default: all)")
    p_verify.add_argument("--profile", default="quick", choices=sorted(PROFILES),
                          help="parameter bounds: quick (k,j <= 8) or full (k,j <= 50)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)

    try:
        if args.digits < 1:
            raise UsageError("--digits must be >= 1")
        if args.format == "csv" and args.command != "orbit":
            raise UsageError("csv output is only available for the orbit command")
        if args.command == "verify":
            return _cmd_verify(args)
        field = _parse_field(args.field)
        limits = _limits(args)
        if args.command == "eval":
            return _cmd_eval(args, field)
        if args.command == "region":
            return _cmd_region(args, field)
        if args.command == "orbit":
            return _cmd_orbit(args, field, limits)
        if args.command == "count":
            return _cmd_count(args, field, limits)
        if args.command == "enumerate":
            return _cmd_enumerate(args, field, limits)
        raise UsageError(f"unknown command {args.command!r}")
    except (UsageError, WordSyntaxError, EmptyWordError, OutsideDomain) as exc:
        print(f"betaforge: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
