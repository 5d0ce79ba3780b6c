"""
Command-line front end: ``osp34 {flag,jh,block,verify,expand}``.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 inconclusive derivation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .engine import DerivationError, Inconclusive, derive_flag, verify_range
from .flags import VermaFlag, sigma_sum, typical_projective
from .jh import JHDecomposition, jh_multiplicities, typical_jh
from .linkage import BlockLabel, block_label, enumerate_block
from .table import classify, table_flag
from .weights import Weight, WeightParseError, atypicality, format_half

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
FORMATS = ("text", "json", "tsv", "latex")


class UsageError(ValueError):
    """Bad command-line input; maps to exit code 2."""


def parse_weight(text: str) -> Weight:
    try:
        return Weight.parse(text, require_shifted=True)
    except WeightParseError as exc:
        raise UsageError(str(exc)) from None


def parse_block(text: str) -> BlockLabel:
    text = text.strip()
    if text.startswith("B_"):
        text = text[2:]
    try:
        w = Weight.parse(f"{text},{text}|{text}", require_shifted=True)
        return BlockLabel.atypical(abs(w.da))
    except (WeightParseError, ValueError):
        raise UsageError(f"block label must be a positive half-odd such as 1/2 or 5/2, got {text!r}") from None


# ---------------------------------------------------------------------------
# rendering

def _tsv_rows(rows: list[tuple[Weight, int]]) -> str:
    lines = ["a\tb\tc\tmult"]
    lines += [f"{format_half(w.da)}\t{format_half(w.db)}\t{format_half(w.dc)}\t{m}" for w, m in rows]
    return "\n".join(lines)


def render_flag(lam: Weight, flag: VermaFlag, fmt: str, case: str | None = None) -> str:
    if fmt == "json":
        doc = {"projective": lam.to_json(), "case": case, "entries": flag.to_json()}
        return json.dumps(doc)
    if fmt == "tsv":
        return _tsv_rows(flag.items())
    if fmt == "latex":
        return f"P_{{{lam.latex()}}} = {flag.latex()}"
    return flag.render()


def render_jh(d: JHDecomposition, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(d.to_json())
    if fmt == "tsv":
        return _tsv_rows(d.items())
    if fmt == "latex":
        return f"M_{{{d.verma.latex()}}} = {d.latex()}"
    return d.render()


def render_weights(ws: list[Weight], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([w.to_json() for w in ws])
    if fmt == "tsv":
        return _tsv_rows([(w, 1) for w in ws])
    if fmt == "latex":
        return ",\\ ".join(f"({w.latex()})" for w in ws)
    return "\n".join(str(w) for w in ws)


# ---------------------------------------------------------------------------
# commands

def cmd_flag(args) -> int:
    lam = parse_weight(args.weight)
    if not atypicality(lam):
        print(f"note: {lam} is typical; showing the orbit formula", file=sys.stderr)
        print(render_flag(lam, typical_projective(lam), args.format, "typical"))
        return EXIT_OK
    case = str(classify(lam))
    if not args.derive:
        print(render_flag(lam, table_flag(lam), args.format, case))
        return EXIT_OK
    d = derive_flag(lam)
    if args.format == "json":
        doc = json.loads(render_flag(lam, d.result, "json", case))
        doc["trace"] = d.trace()
        doc["agrees_with_table"] = d.result == table_flag(lam)
        print(json.dumps(doc))
    elif args.format == "text":
        print("\n".join(d.trace()))
    else:
        print(render_flag(lam, d.result, args.format, case))
    return EXIT_OK


def cmd_jh(args) -> int:
    mu = parse_weight(args.weight)
    if not atypicality(mu):
        print(f"note: {mu} is typical; using the orbit formula", file=sys.stderr)
        print(render_jh(typical_jh(mu), args.format))
        return EXIT_OK
    print(render_jh(jh_multiplicities(mu), args.format))
    return EXIT_OK


def cmd_block(args) -> int:
    label = parse_block(args.label)
    print(render_weights(enumerate_block(label, args.bound), args.format))
    return EXIT_OK


def cmd_expand(args) -> int:
    nu = parse_weight(args.weight)
    print(render_flag(nu, sigma_sum(nu), args.format, str(block_label(nu))))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_range(args.bound)
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        print(report.summary())
        if args.format == "text":
            print(f"{report.ambiguous} resolved ambiguities, {report.identities} identities replayed")
    if not report.ok:
        print(f"first counterexample: {report.first_failure}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive doubled integer, got {text!r}") from None
    if n <= 0:
        raise argparse.ArgumentTypeError(f"bound must be positive, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    # global options are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--derive", action="store_true", default=argparse.SUPPRESS,
                        help="flag: run the translation-functor derivation and print its trace")
    common.add_argument("--bound", type=_positive, default=argparse.SUPPRESS,
                        help="box size in doubled coordinates (11 means |a|,|b| <= 11/2)")

    p = argparse.ArgumentParser(prog="osp34", parents=[common],
                                description="Projective Verma flags and composition factors for osp(3|4).")
    sub = p.add_subparsers(dest="command", required=True)
    for name, fn, helptext in (
        ("flag", cmd_flag, "Verma flag of the projective cover P(a,b|c)"),
        ("jh", cmd_jh, "composition factors of M(a,b|c)"),
        ("expand", cmd_expand, "orbit-sum expansion of a weight"),
    ):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("weight", help='rho-shifted weight "a,b|c", e.g. "1/2,-1/2|1/2"')
        sp.set_defaults(func=fn)
    sp = sub.add_parser("block", parents=[common], help="list the weights of an atypical block")
    sp.add_argument("label", help="block index t, e.g. 1/2 or B_5/2")
    sp.set_defaults(func=cmd_block)
    sp = sub.add_parser("verify", parents=[common], help="derive every atypical weight in the box and compare")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # "-1/2,..." would otherwise be taken for an option; a leading space keeps it positional
    argv = [f" {a}" if a[:1] == "-" and a[1:2].isdigit() else a for a in argv]
    args = parser.parse_args(argv)
    for key, default in (("format", "text"), ("derive", False), ("bound", 11)):
        if not hasattr(args, key):
            setattr(args, key, default)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except DerivationError as exc:
        print(f"derivation failed: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
