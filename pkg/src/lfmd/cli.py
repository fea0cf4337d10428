"""Command-line front end: ``lfmd <subcommand>``.

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import acceptance
from .errors import CapacityError, InvalidInputError
from .families import SWEEP_PARAM, Family, FamilySpec, instantiate, records_to_json, validate_family
from .graphs import EXPORT_FORMATS, Graph, all_pairs_distances, build_toeplitz, build_zero_divisor, build_zero_divisor_star, export_graph
from .lp import BLAND, DANTZIG
from .resolving import edge_resolving_profile
from .solver import fmt_fraction, generic_bounds, solve_lfmd_exact
from .tables import TABLE_IDS, reproduce_tables

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3
DEFAULT_MAX_ORDER = int(os.environ.get("LFMD_MAX_ORDER", "5000"))


class UsageError(Exception):
    pass


def approx(q: Fraction) -> str:
    return f"{float(q):.5f}"


def _parse_s(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi) if sep else int(lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--family",
        required=True,
        help="toeplitz, zd, zdstar, or a family tag such as TOEPLITZ_2P",
    )
    p.add_argument("--n", type=int, help="order (toeplitz) or modulus (zd, zdstar, ZD_KP, ZD_PK)")
    p.add_argument("--s", type=_parse_s, help="comma-separated difference set for toeplitz")
    p.add_argument("--p", type=int, help="prime parameter")
    p.add_argument("--k", type=int, help="exponent parameter")
    p.add_argument("--w", type=int, help="order parameter of the T_w families")


def graph_from_args(args: argparse.Namespace) -> Graph:
    fam = args.family.lower()

    def need(name: str):
        val = getattr(args, name)
        if val is None:
            raise UsageError(f"--family {args.family} needs --{name}")
        return val

    if fam == "toeplitz":
        g = build_toeplitz(need("n"), need("s"))
    elif fam == "zd":
        g = build_zero_divisor(need("n"))
    elif fam == "zdstar":
        g = build_zero_divisor_star(need("n"))
    else:
        try:
            tag = Family(args.family.upper())
        except ValueError:
            raise UsageError(f"unknown family {args.family!r}") from None
        if tag is Family.GENERIC:
            g = instantiate(FamilySpec.of(tag, n=need("n"), S=tuple(need("s"))))
        else:
            name = SWEEP_PARAM[tag]
            g = instantiate(FamilySpec.of(tag, **{name: need(name)}))
    if g.order > args.max_order:
        raise CapacityError(f"order {g.order} exceeds --max-order {args.max_order}")
    return g


def _emit(text: str | bytes) -> None:
    if isinstance(text, str):
        text = text.encode("utf-8")
    sys.stdout.buffer.write(text)
    sys.stdout.flush()


def cmd_graph_build(args: argparse.Namespace) -> int:
    _emit(export_graph(graph_from_args(args), args.export))
    return EXIT_OK


def cmd_resolve(args: argparse.Namespace) -> int:
    g = graph_from_args(args)
    prof = edge_resolving_profile(g)
    _emit(prof.to_csv() if args.format == "csv" else prof.to_json())
    return EXIT_OK


def cmd_lfmd(args: argparse.Namespace) -> int:
    g = graph_from_args(args)
    d = all_pairs_distances(g)
    sol = solve_lfmd_exact(g, d, method=args.method, rule=args.rule)
    report = generic_bounds(g, with_integer_ldim=args.with_integer_ldim, exact=sol.value, d=d, ldim_cap=args.ldim_cap)
    approximations = {"value": approx(sol.value), "lower_nt": approx(report.lower_nt), "upper_ell": approx(report.upper_ell)}
    if report.lower_lemma is not None:
        approximations["lower_lemma"] = approx(report.lower_lemma)
    if args.format == "text":
        lines = [
            f"graph      {g.name} (order {g.order}, {len(g.edges)} edges)",
            f"ell, beta  {report.ell}, {report.beta}",
            f"n/beta     {fmt_fraction(report.lower_nt)} ({approximations['lower_nt']})",
            f"n/ell      {fmt_fraction(report.upper_ell)} ({approximations['upper_ell']})",
        ]
        if report.lower_lemma is not None:
            lines.append(f"ldim       {report.integer_ldim}")
            lines.append(f"lemma      {fmt_fraction(report.lower_lemma)} ({approximations['lower_lemma']})")
        lines.append(f"ldim_f     {fmt_fraction(sol.value)} ({approximations['value']})")
        lines.append(f"certified  {sol.certified} via {sol.method}")
        lines.extend(f"note       {n}" for n in report.notes)
        _emit("\n".join(lines) + "\n")
    else:
        doc = {
            "graph": g.name,
            "bounds": report.to_dict(),
            "solution": sol.to_dict(),
            "approx": approximations,
        }
        _emit(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_family_validate(args: argparse.Namespace) -> int:
    try:
        tag = Family(args.tag.upper())
    except ValueError:
        raise UsageError(f"unknown family tag {args.tag!r}") from None
    if tag is Family.GENERIC:
        raise UsageError("GENERIC has no closed-form claim to validate")
    lo, hi = args.range
    records = validate_family(tag, range(lo, hi + 1), method=args.method)
    if args.format == "text":
        out = []
        for r in records:
            val = "-" if r.computed_exact is None else fmt_fraction(r.computed_exact)
            claim = f"[{fmt_fraction(r.claimed.lower)}, {fmt_fraction(r.claimed.upper)}]"
            line = f"{r.spec.describe():28} {r.verdict.value:15} ldim_f={val:12} claim={claim}"
            if r.discrepancy:
                line += "  (documented discrepancy)"
            out.append(line)
        _emit("\n".join(out) + ("\n" if out else ""))
    else:
        _emit(records_to_json(records))
    return EXIT_FAIL if any(r.blocking for r in records) else EXIT_OK


def cmd_tables(args: argparse.Namespace) -> int:
    table = reproduce_tables(args.id)
    _emit(table.to_csv() if args.format == "csv" else table.to_markdown())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    failed = 0
    for check in acceptance.CRITERIA:
        res = check()
        failed += not res.passed
        _emit(res.line() + "\n")
    _emit(f"{len(acceptance.CRITERIA) - failed}/{len(acceptance.CRITERIA)} criteria passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lfmd", description="Exact local fractional metric dimension toolkit.")
    parser.add_argument(
        "--max-order",
        type=int,
        default=DEFAULT_MAX_ORDER,
        help="refuse graphs with more vertices (env LFMD_MAX_ORDER)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    graph = sub.add_parser("graph", help="graph construction")
    gsub = graph.add_subparsers(dest="graph_command", required=True)
    build = gsub.add_parser("build", help="build and export a graph")
    _add_family_args(build)
    build.add_argument("--export", choices=EXPORT_FORMATS, default="json")
    build.set_defaults(func=cmd_graph_build)

    resolve = sub.add_parser("resolve", help="edge resolving neighborhoods, ell and beta")
    _add_family_args(resolve)
    resolve.add_argument("--format", choices=("json", "csv"), default="json")
    resolve.set_defaults(func=cmd_resolve)

    lf = sub.add_parser("lfmd", help="exact ldim_f with generic bounds")
    _add_family_args(lf)
    lf.add_argument("--with-integer-ldim", action="store_true", help="add the exhaustive ldim lower bound")
    lf.add_argument("--ldim-cap", type=int, default=None, help="largest order for exhaustive ldim (env LFMD_LDIM_CAP)")
    lf.add_argument("--method", choices=("auto", "simplex", "certified-float"), default="auto")
    lf.add_argument("--rule", choices=(BLAND, DANTZIG), default=BLAND)
    lf.add_argument("--format", choices=("json", "text"), default="json")
    lf.set_defaults(func=cmd_lfmd)

    fam = sub.add_parser("family", help="closed-form family claims")
    fsub = fam.add_subparsers(dest="family_command", required=True)
    val = fsub.add_parser("validate", help="compare claims with exact values over a range")
    val.add_argument("--tag", required=True, choices=[f.value for f in Family if f is not Family.GENERIC], type=str.upper)
    val.add_argument("--range", required=True, type=_parse_range, help="inclusive a..b of the family's sweep parameter")
    val.add_argument("--method", choices=("auto", "simplex", "certified-float"), default="auto")
    val.add_argument("--format", choices=("json", "text"), default="json")
    val.set_defaults(func=cmd_family_validate)

    tab = sub.add_parser("tables", help="reproduce a bound table")
    tab.add_argument("--id", required=True, choices=TABLE_IDS, type=str.upper)
    tab.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    tab.set_defaults(func=cmd_tables)

    ver = sub.add_parser("verify", help="run the acceptance suite")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_order < 1 or (getattr(args, "ldim_cap", None) is not None and args.ldim_cap < 1):
        parser.error("caps must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except CapacityError as exc:
        print(f"lfmd: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InvalidInputError as exc:
        print(f"lfmd: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
