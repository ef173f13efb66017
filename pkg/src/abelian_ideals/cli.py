"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import List, Optional

from .duality import verify_duality_bijection
from .graded_oracle import GuardExceeded, gl_formula, gl_subalgebras, recheck_with_matrices
from .ideals import (
    enumerate_ideals,
    ideal_to_json,
    is_long_ideal,
    long_ideals,
    maximal_ideals,
    rootlet,
)
from .rootsys import RootSystemError, SimpleType, build, epsilon_coords, format_root
from .verify import all_types, checks_to_json, verify_type

SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


def _fmt(rs, x) -> str:
    s = format_root(x)
    eps = epsilon_coords(rs, x)
    if eps is not None:
        s += f" [{format_root(eps, 'e')}]"
    return s


def _fmt_set(rs, roots) -> str:
    return "{" + ", ".join(_fmt(rs, x) for x in roots) + "}"


def _fmt_word(word) -> str:
    return "".join(f"s{i}" for i in word) or "e"


def _table(headers: List[str], rows: List[List[str]]) -> str:
    widths = [max(len(str(c)) for c in col) for col in zip(headers, *rows)]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def _csv(headers: List[str], rows: List[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(headers)
    w.writerows(rows)
    return buf.getvalue()


def _parse_type(text: str) -> SimpleType:
    try:
        return SimpleType.parse(text)
    except RootSystemError as e:
        raise UsageError(str(e)) from None


# -- subcommands: each returns (report dict, text, csv text, ok) -----------------


IDEAL_CSV = ["type", "ideal_index", "size", "long", "rootlet", "word"]


def _ideal_rows(rs, ideals):
    return [[str(rs.type), k, len(I), str(is_long_ideal(rs, I)).lower(),
             " ".join(map(str, rootlet(rs, I))) if I.roots else "",
             " ".join(map(str, I.word))] for k, I in enumerate(ideals)]


def cmd_ideals(args):
    t = _parse_type(args.type)
    rs = build(t)
    ideals = enumerate_ideals(rs)
    report = {"type": str(t), "count": len(ideals), "expected": 2 ** rs.rank,
              "ideals": [ideal_to_json(rs, I) for I in ideals]}
    rows = [[k, len(I), "yes" if is_long_ideal(rs, I) else "no",
             format_root(rootlet(rs, I)) if I.roots else "-", _fmt_word(I.word),
             _fmt_set(rs, I.roots)] for k, I in enumerate(ideals)]
    text = (f"{t}: {len(ideals)} Abelian ideals (2^{rs.rank} = {2 ** rs.rank})\n"
            + _table(["#", "size", "long", "rootlet", "word", "roots"], rows))
    return report, text, _csv(IDEAL_CSV, _ideal_rows(rs, ideals)), len(ideals) == 2 ** rs.rank


def cmd_long(args):
    t = _parse_type(args.type)
    rs = build(t)
    ratio, power = rs.long_ideal_count_formula()
    longs = long_ideals(rs)
    maxi = maximal_ideals(longs)
    report = {"type": str(t), "count": len(longs), "d": rs.length_ratio,
              "long_simple_roots": rs.long_simple_count, "expected": power,
              "maximal": [[list(x) for x in I.roots] for I in maxi],
              "ideals": [ideal_to_json(rs, I) for I in longs]}
    rows = [[k, len(I), _fmt_word(I.word), _fmt_set(rs, I.roots)] for k, I in enumerate(longs)]
    text = (f"{t}: {len(longs)} long Abelian ideals, d^a = {rs.length_ratio}^{rs.long_simple_count}"
            f" = {power}\n" + _table(["#", "size", "word", "roots"], rows)
            + "\nmaximal: " + "; ".join(_fmt_set(rs, I.roots) for I in maxi))
    return report, text, _csv(IDEAL_CSV, _ideal_rows(rs, longs)), len(longs) == power


def cmd_rootlets(args):
    t = _parse_type(args.type)
    rs = build(t)
    ideals = [I for I in enumerate_ideals(rs) if I.roots]
    out = [{"roots": [list(x) for x in I.roots], "rootlet": list(rootlet(rs, I)),
            "long": is_long_ideal(rs, I)} for I in ideals]
    report = {"type": str(t), "count": len(out), "rows": out}
    rows = [[k + 1, _fmt(rs, rootlet(rs, I)), "*" if is_long_ideal(rs, I) else "",
             _fmt_set(rs, I.roots)] for k, I in enumerate(ideals)]
    text = f"{t}: rootlets of non-trivial ideals (* = long)\n" + _table(
        ["#", "rootlet", "long", "ideal"], rows)
    return report, text, _csv(IDEAL_CSV, _ideal_rows(rs, ideals)), True


def cmd_verify(args):
    if args.all == (args.type is not None):
        raise UsageError("verify needs exactly one of TYPE or --all")
    types = all_types(args.max_rank) if args.all else [_parse_type(args.type)]
    results = []
    csv_rows = []
    blocks = []
    failed = 0
    for t in types:
        checks = verify_type(t)
        failed += sum(not c.passed for c in checks)
        results.append({"type": str(t), "checks": checks_to_json(checks)})
        for c in checks:
            csv_rows.append([str(t), c.name, str(c.passed).lower(), c.detail])
        lines = [f"{t}:"]
        for c in checks:
            lines.append(f"  {'PASS' if c.passed else 'FAIL'}  {c.name:<20} {c.detail}")
            if not c.passed and c.witness:
                lines.append(f"        witness: {json.dumps(c.witness, sort_keys=True)}")
        blocks.append("\n".join(lines))
    total = sum(len(r["checks"]) for r in results)
    report = {"types": results, "checks": total, "failed": failed}
    text = "\n".join(blocks) + f"\n{total - failed}/{total} checks passed"
    return report, text, _csv(["type", "check", "passed", "detail"], csv_rows), failed == 0


def cmd_dual(args):
    t = _parse_type(args.type)
    try:
        rep = verify_duality_bijection(t)
    except RootSystemError as e:
        raise UsageError(str(e)) from None
    report = rep.to_json()
    lines = [f"{t}: long ideals = {rep.long_ideals}, dual candidates = {rep.dual_candidates}"
             f" ({rep.target}), bijection = {'yes' if rep.bijection else 'NO'}",
             f"dim V(theta_s) = {rep.dimension}"
             + (f" (table: {rep.table_dimension})" if rep.table_dimension is not None else "")]
    if rep.alternate_target:
        lines.append(f"alternate predicate ({rep.alternate_target}): {rep.alternate_count} candidates,"
                     f" {'agrees' if rep.predicates_agree else 'DISAGREES'}")
    for w in rep.witnesses:
        lines.append(f"  witness ({w['side']}): {w['roots']}")
    headers = ["type", "long_ideals", "dual_candidates", "bijection", "target", "dimension"]
    row = [str(t), rep.long_ideals, rep.dual_candidates, str(rep.bijection).lower(), rep.target,
           rep.dimension]
    return report, "\n".join(lines), _csv(headers, [row]), rep.ok


def cmd_gl(args):
    n, r = args.n, args.r
    try:
        subsets = gl_subalgebras(n, r)
        formula = gl_formula(n, r)
    except (GuardExceeded, ValueError) as e:
        raise UsageError(str(e)) from None
    recheck = recheck_with_matrices(n, r, subsets)
    ok = len(subsets) == formula and recheck
    report = {"n": n, "r": r, "count": len(subsets), "formula": formula,
              "matrix_recheck": recheck, "ok": ok}
    text = f"count={len(subsets)} formula={formula} {'OK' if ok else 'MISMATCH'}"
    return report, text, _csv(["n", "r", "count", "formula", "ok"],
                              [[n, r, len(subsets), formula, str(ok).lower()]]), ok


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--out", help="write the report to this file")
    common.add_argument("--seed", help="accepted and ignored; everything is deterministic")
    common.add_argument("--quiet", action="store_true", help="do not print the report")
    common.add_argument("--timing", action="store_true", help="include elapsed_ms in the report")

    p = argparse.ArgumentParser(prog="abelian-ideals",
                                description="Abelian and long Abelian ideals of Borel subalgebras.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, fn, helptext in [("ideals", cmd_ideals, "list all Abelian ideals"),
                               ("long", cmd_long, "list long Abelian ideals"),
                               ("rootlets", cmd_rootlets, "rootlets of non-trivial ideals"),
                               ("dual", cmd_dual, "duality with the little adjoint module")]:
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("type", help='root system type, e.g. "F4"')
        sp.set_defaults(func=fn)
    sp = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    sp.add_argument("type", nargs="?")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--max-rank", type=int, default=8)
    sp.set_defaults(func=cmd_verify)
    sp = sub.add_parser("gl-oracle", parents=[common], help="gl_n brute force vs closed formula")
    sp.add_argument("n", type=int)
    sp.add_argument("r", type=int)
    sp.set_defaults(func=cmd_gl)
    return p


def render(report: dict, text: str, csv_text: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return csv_text
    return text + "\n"


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        body, text, csv_text, ok = args.func(args)
    except (UsageError, RootSystemError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except AssertionError as e:
        print(f"assertion failed: {e}", file=sys.stderr)
        return 1
    report = {"schema_version": SCHEMA_VERSION, "command": args.command, "ok": ok, **body}
    if args.timing:
        ms = round((time.perf_counter() - start) * 1000, 1)
        report["elapsed_ms"] = ms
        text += f"\n({ms} ms)"
    out = render(report, text, csv_text, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    if not args.quiet:
        sys.stdout.write(out)
    return 0 if ok else 1
