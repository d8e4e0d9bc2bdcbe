"""Command line interface.

Exit codes: 0 success, 1 validation failure, 2 claim falsified (with --strict),
3 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .analysis import Analysis
from .classification import classify_all
from .core import elements_of
from .errors import AlgebraError, ParseError, UnknownClaim
from .grading import enumerate_gradings
from .io import load_entry, load_monoid, save_structure

EXIT_OK, EXIT_INVALID, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2, 3
OUT_DIR_ENV = "GRADEDNR_OUT_DIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _out_path(path: str | None, default_name: str) -> Path | None:
    """Relative output paths land in $GRADEDNR_OUT_DIR when it is set."""
    base = os.environ.get(OUT_DIR_ENV)
    if path is None:
        return Path(base) / default_name if base else None
    p = Path(path)
    return Path(base) / p if base and not p.is_absolute() else p


def _load(path: str):
    if not Path(path).is_file():
        raise UsageError(f"no such file: {path}")
    return load_entry(path)


def _fmt(mask: int) -> str:
    return "{" + ",".join(map(str, elements_of(mask))) + "}"


# -- subcommands ------------------------------------------------------------------

def cmd_validate(args) -> int:
    e = _load(args.file)
    g = e.gnr
    left = "left-distributive" if _left_dist(g) else "not left-distributive"
    print(f"ok {g.name}: order {g.order}, monoid order {g.monoid.order}, {left}")
    for s, p in enumerate(g.parts):
        print(f"  N_{s} = {_fmt(p)}")
    return EXIT_OK


def _left_dist(g) -> bool:
    from .core import is_left_distributive
    return is_left_distributive(g.ring)


def cmd_ideals(args) -> int:
    an = Analysis(_load(args.file).gnr)
    pool = an.graded if args.graded else an.all_ideals
    for I in pool:
        tag = "graded" if an.is_graded_ideal(I) else "ungraded"
        print(f"{I:#x}\t{_fmt(I)}\t{tag}")
    print(f"# {len(pool)} ideal(s)")
    return EXIT_OK


def cmd_classify(args) -> int:
    an = Analysis(_load(args.file).gnr, "all" if args.all_ideals else "graded", args.ideal_product)
    rows = [r for r in classify_all(an) if args.improper or not r.improper]
    if args.json:
        print(json.dumps([r.row() for r in rows], sort_keys=True))
        return EXIT_OK
    yn = {True: "yes", False: "no"}
    print(f"{'ideal':<28}{'prime':<7}{'weakly':<8}{'almost':<8}{'P*P':<20} note")
    for r in rows:
        note = "improper" if r.improper else ""
        print(f"{_fmt(r.ideal.bits):<28}{yn[r.is_graded_prime]:<7}{yn[r.is_graded_weakly_prime]:<8}"
              f"{yn[r.is_graded_almost_prime]:<8}{_fmt(r.square):<20} {note}".rstrip())
    return EXIT_OK


def _config(args):
    from .world import Config
    return Config(domain="all" if args.all_ideals else "graded", ideal_generated=args.ideal_product,
                  graded_maximal=args.graded_maximal, cap=None if args.all_counterexamples else args.cap,
                  max_order=args.max_order)


def cmd_check(args) -> int:
    from .corpus import default_entries, with_product_pairs
    from .report import build_report, dumps_records

    if args.default_corpus:
        entries = default_entries()
    elif args.files:
        entries = [_load(f) for f in args.files]
    else:
        raise UsageError("give structure files or --default-corpus")
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise UsageError("structure names must be distinct")
    if args.product_pairs:
        entries = with_product_pairs(entries, args.max_order)
    try:
        records = build_report(entries, _config(args), args.claims)
    except UnknownClaim as exc:
        raise UsageError(f"unknown claim {exc.args[0]!r}") from exc
    text = dumps_records(records)
    out = _out_path(args.report, "report.jsonl")
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
    falsified = 0
    for r in records:
        if r["type"] == "golden" and not r["ok"]:
            print(f"golden fact {r['id']} FAILED: expected {r['expected']}, got {r['observed']}")
        if r["type"] == "claim":
            falsified += r["status"] == "falsified"
            print(f"{r['claim_id']:<16}{r['status']:<20}instances={r['instances_checked']} "
                  f"nonvacuous={r['nonvacuous']} counterexamples={r['falsified_instances']}")
    print(f"# {len(entries)} structures, {falsified} falsified claim(s)"
          + (f", report written to {out}" if out else ""))
    return EXIT_FALSIFIED if args.strict and falsified else EXIT_OK


def cmd_gradings(args) -> int:
    g = _load(args.file).gnr
    monoid = load_monoid(args.monoid)
    found = enumerate_gradings(g.ring, monoid)
    for i, h in enumerate(found):
        print(f"grading {i}: " + ", ".join(f"N_{s}={_fmt(p)}" for s, p in enumerate(h.parts)))
    print(f"# {len(found)} grading(s)")
    return EXIT_OK


def cmd_factor(args) -> int:
    from .claims import factor_into

    an = Analysis(_load(args.file).gnr)
    if args.ideal not in set(an.graded):
        print(f"{args.ideal:#x} = {_fmt(args.ideal)} is not a graded ideal", file=sys.stderr)
        return EXIT_INVALID
    seq = factor_into(an, args.ideal, args.kind, args.max_len)
    if seq is None:
        print(f"{_fmt(args.ideal)}: no product of at most {args.max_len} graded {args.kind} prime ideals")
    else:
        print(f"{_fmt(args.ideal)} = " + " * ".join(_fmt(P) for P in seq))
    return EXIT_OK


def cmd_corpus(args) -> int:
    from .corpus import default_entries, manifest, with_product_pairs

    if not args.default:
        raise UsageError("only --default is supported")
    entries = default_entries()
    if args.product_pairs:
        entries = with_product_pairs(entries, args.max_order)
    if args.write:
        out = _out_path(args.write, ".")
        out.mkdir(parents=True, exist_ok=True)
        for e in entries:
            save_structure(e.gnr, out / f"{e.name}.json", e.factors)
    print(json.dumps(manifest(entries), indent=1, sort_keys=True))
    return EXIT_OK


def cmd_replay(args) -> int:
    from .claims import replay

    path = Path(args.report)
    if not path.is_file():
        raise UsageError(f"no such file: {path}")
    total = bad = 0
    for line in path.read_text(encoding="utf-8").splitlines():
        rec = json.loads(line)
        if rec.get("type") != "claim":
            continue
        for cx in rec["counterexamples"]:
            total += 1
            if not replay(cx):
                bad += 1
                print(f"{cx['claim_id']}: counterexample did NOT re-verify")
    print(f"# {total - bad}/{total} counterexample(s) re-verified")
    return EXIT_INVALID if bad else EXIT_OK


# -- parser ------------------------------------------------------------------------

def _ideal_mask(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer bitmask: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gradednr", description="Finite graded near-rings and their weakly/almost prime ideals.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check the axioms of a structure file")
    s.add_argument("file")
    s.set_defaults(fn=cmd_validate)

    s = sub.add_parser("ideals", help="list ideals")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--graded", action="store_true", help="graded ideals only")
    g.add_argument("--all", action="store_true", help="all ideals (default)")
    s.add_argument("file")
    s.set_defaults(fn=cmd_ideals)

    s = sub.add_parser("classify", help="classify every graded ideal")
    s.add_argument("file")
    s.add_argument("--improper", action=argparse.BooleanOptionalAction, default=True,
                   help="include the row for P = N (default: yes)")
    s.add_argument("--all-ideals", action="store_true", help="quantify I, J over all ideals, not just graded")
    s.add_argument("--ideal-product", action="store_true", help="IJ is the ideal generated by the products")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_classify)

    s = sub.add_parser("check", help="sweep the claim registry over a corpus")
    s.add_argument("files", nargs="*")
    s.add_argument("--default-corpus", action="store_true")
    s.add_argument("--claims", default="all", help="comma separated ids or prefixes, or 'all'")
    s.add_argument("--product-pairs", action="store_true")
    s.add_argument("--max-order", type=int, default=64)
    s.add_argument("--strict", action="store_true", help="exit 2 when a claim is falsified")
    s.add_argument("--report", help="write the JSON-lines report here")
    s.add_argument("--cap", type=int, default=5, help="counterexamples kept per claim")
    s.add_argument("--all-counterexamples", action="store_true")
    s.add_argument("--ideal-product", action="store_true")
    s.add_argument("--all-ideals", action="store_true")
    s.add_argument("--graded-maximal", action="store_true",
                   help="look for the unique maximal ideal among graded ideals only")
    s.set_defaults(fn=cmd_check)

    s = sub.add_parser("gradings", help="enumerate gradings over a monoid")
    s.add_argument("file")
    s.add_argument("--monoid", required=True)
    s.set_defaults(fn=cmd_gradings)

    s = sub.add_parser("factor", help="write an ideal as a product of weakly/almost prime ideals")
    s.add_argument("file")
    s.add_argument("--ideal", type=_ideal_mask, required=True, help="bitmask, e.g. 0x111")
    s.add_argument("--kind", choices=("weakly", "almost"), required=True)
    s.add_argument("--max-len", type=int, default=3)
    s.set_defaults(fn=cmd_factor)

    s = sub.add_parser("corpus", help="emit the bundled corpus manifest")
    s.add_argument("--default", action="store_true", required=True)
    s.add_argument("--product-pairs", action="store_true")
    s.add_argument("--max-order", type=int, default=64)
    s.add_argument("--write", metavar="DIR", help="also write every member as a structure file")
    s.set_defaults(fn=cmd_corpus)

    s = sub.add_parser("replay", help="re-verify the counterexamples stored in a report")
    s.add_argument("report")
    s.set_defaults(fn=cmd_replay)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"gradednr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except AlgebraError as exc:
        print(f"invalid: {type(exc).__name__}: {exc} witness={exc.witness!r}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
