"""Command-line front end: term streams, family registry, identity sweeps.

Subcommands
-----------
term      scalar sequence values w_n (optionally with the hybrid window)
hybrid    hybrid terms K_n = w_n + w_{n+1} i + w_{n+2} eps + w_{n+3} h
families  the registry of named special cases
verify    run identity sweeps, write JSON-lines + CSV reports

Exit codes: 0 success, 1 identity failure, 2 usage or config error.
All fractions are rendered as strings "p/q"; output ordering is
deterministic for a given invocation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .hybrid_sequences import FAMILIES, FamilyError, HybridSeq, family_lookup
from .scalars import rat, rat_str
from .sequences import SeqParams
from .sweep import ConfigError, SweepConfig, run_sweep, write_reports_jsonl, write_summary_csv

EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_USAGE = 2


def _fraction(text: str):
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r} ({exc})")


def _parse_free_params(pairs):
    free = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise FamilyError(f"--param expects NAME=VALUE, got {pair!r}")
        name, _, value = pair.partition("=")
        free[name.strip()] = rat(value)
    return free


def _resolve_seq(args) -> HybridSeq:
    if args.family:
        if any(v is not None for v in (args.a, args.b, args.c, args.w0, args.w1)):
            raise FamilyError("--family and explicit --a/--b/--c/--w0/--w1 are exclusive")
        return family_lookup(args.family, **_parse_free_params(args.param))
    explicit = [args.a, args.b, args.c, args.w0, args.w1]
    if any(v is None for v in explicit):
        raise FamilyError("provide --family NAME or all of --a --b --c --w0 --w1")
    return HybridSeq(SeqParams(*explicit))


def _index_range(args) -> range:
    if args.n is not None:
        if args.start is not None or args.stop is not None:
            raise FamilyError("--n and --from/--to are exclusive")
        return range(args.n, args.n + 1)
    start = args.start if args.start is not None else 0
    stop = args.stop if args.stop is not None else start + 10
    if stop < start:
        raise FamilyError(f"empty index range [{start}, {stop}]")
    return range(start, stop + 1)


def _emit(records: list[dict], fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        text = "".join(json.dumps(rec, sort_keys=True) + "\n" for rec in records)
    else:
        buf = io.StringIO()
        if records:
            writer = csv.DictWriter(buf, fieldnames=list(records[0].keys()))
            writer.writeheader()
            writer.writerows(records)
        text = buf.getvalue()
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _add_seq_arguments(sub):
    sub.add_argument("--family", help="named family from the registry")
    sub.add_argument("--param", action="append", metavar="NAME=VALUE",
                     help="free parameter of the family (repeatable)")
    for flag in ("a", "b", "c", "w0", "w1"):
        sub.add_argument(f"--{flag}", type=_fraction, default=None)
    sub.add_argument("--n", type=int, default=None, help="single index")
    sub.add_argument("--from", dest="start", type=int, default=None)
    sub.add_argument("--to", dest="stop", type=int, default=None)
    sub.add_argument("--binet", action="store_true",
                     help="also evaluate the closed form and cross-check (n >= 0)")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out", default=None, help="output path (default stdout)")


def cmd_term(args) -> int:
    hs = _resolve_seq(args)
    idx = _index_range(args)
    if args.binet and idx.start < 0:
        print("error: --binet requires nonnegative indices", file=sys.stderr)
        return EXIT_USAGE
    records = []
    for n in idx:
        rec = {"n": n, "w": rat_str(hs.seq.term(n))}
        if args.binet:
            closed = hs.seq.term_binet(n)
            if closed != hs.seq.term(n):
                print(f"error: closed form mismatch at n={n}", file=sys.stderr)
                return EXIT_IDENTITY_FAILURE
            rec["binet"] = rat_str(closed.rat)
        if args.hybrid:
            rec.update(hs.term(n).to_json_dict())
            rec["character"] = rat_str(hs.character(n))
        records.append(rec)
    _emit(records, args.format, args.out)
    return EXIT_OK


def cmd_hybrid(args) -> int:
    hs = _resolve_seq(args)
    idx = _index_range(args)
    if args.binet and idx.start < 0:
        print("error: --binet requires nonnegative indices", file=sys.stderr)
        return EXIT_USAGE
    records = []
    for n in idx:
        rec = hs.term_record(n)
        if args.binet:
            closed = hs.term_binet(n)
            plain = hs.term(n)
            ok = all(q.rad == 0 and q.rat == x
                     for q, x in zip(closed.components, plain.components))
            if not ok:
                print(f"error: hybrid closed form mismatch at n={n}", file=sys.stderr)
                return EXIT_IDENTITY_FAILURE
            rec["binet_checked"] = True
        records.append(rec)
    _emit(records, args.format, args.out)
    return EXIT_OK


def cmd_families(args) -> int:
    records = [
        {
            "name": fam.name,
            "tuple": fam.spec_tuple(),
            "free_params": ",".join(fam.free_params),
            "description": fam.description,
        }
        for fam in FAMILIES
    ]
    _emit(records, args.format, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.config:
        try:
            doc = json.loads(Path(args.config).read_text())
        except OSError as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except json.JSONDecodeError as exc:
            print(f"error: config is not valid JSON: {exc}", file=sys.stderr)
            return EXIT_USAGE
        config = SweepConfig.from_json_dict(doc)
    else:
        config = SweepConfig()

    result = run_sweep(config)

    out_dir = Path(args.out or "reports")
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        write_reports_jsonl(out_dir / "reports.jsonl", result)
        write_summary_csv(out_dir / "summary.csv", result)
    except OSError as exc:
        print(f"error: cannot write reports: {exc}", file=sys.stderr)
        return EXIT_USAGE

    for row in result.summary_rows():
        print(
            "{identity}: grid={grid_size} checks={checks} pass={passes} "
            "fail={failures} xfail={expected_failures} error={errors} "
            "xerror={expected_errors}".format(**row)
        )
    print(f"reports: {out_dir / 'reports.jsonl'}")
    print(f"summary: {out_dir / 'summary.csv'}")
    if result.exit_code == 0:
        print("verify: OK (no unexpected failures)")
    else:
        bad = sum(r.failures + r.errors for r in result.reports)
        print(f"verify: FAILED ({bad} unexpected failing checks)")
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hybridseq",
        description="exact bi-periodic Horadam hybrid numbers and identity sweeps",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_term = subs.add_parser("term", help="scalar sequence terms")
    _add_seq_arguments(p_term)
    p_term.add_argument("--hybrid", action="store_true",
                        help="include the hybrid window and character")
    p_term.set_defaults(fn=cmd_term)

    p_hyb = subs.add_parser("hybrid", help="hybrid terms with characters")
    _add_seq_arguments(p_hyb)
    p_hyb.set_defaults(fn=cmd_hybrid)

    p_fam = subs.add_parser("families", help="list the named-family registry")
    p_fam.add_argument("--format", choices=("json", "csv"), default="json")
    p_fam.add_argument("--out", default=None)
    p_fam.set_defaults(fn=cmd_families)

    p_ver = subs.add_parser("verify", help="run identity sweeps and write reports")
    p_ver.add_argument("--config", default=None, help="JSON sweep config")
    p_ver.add_argument("--out", default=None, help="report directory (default ./reports)")
    p_ver.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (FamilyError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # parameter validation (zero a/b/c, delta_sq = 0, bad fractions)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
