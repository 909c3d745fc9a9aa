"""Command-line interface.

Output is canonical JSON (sorted keys, compact separators, no floats) so that
identical invocations print identical bytes apart from ``elapsed_ms``.

Exit codes: 0 ok, 2 usage or validation, 3 degree cap exceeded,
4 search exhausted, 5 internal cross-check failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

import numpy as np

from .errors import BadMirrorPrime, InvalidPrimes, NotNumerical, SearchExhausted, TooLarge
from .families import find_family_instance, mirror_check, verify_family, verify_optimal_range
from .kaplan import coeff_range, make_kaplan_context
from .polys import cyclotomic_series, get_cap, inverse_cyclotomic_poly, cyclotomic_poly
from .properties import coeff_set, height_scan
from .scans import convex_scan, jump_scan, optimal_scan
from .semigroups import build_table, divides_x_m_minus_1, indicator_check, semigroup_polynomial

EXIT_USAGE, EXIT_CAP, EXIT_SEARCH, EXIT_MISMATCH = 2, 3, 4, 5


class CrossCheckFailed(Exception):
    pass


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def rle(values) -> list[list[int]]:
    out: list[list[int]] = []
    for v in values:
        if out and out[-1][0] == v:
            out[-1][1] += 1
        else:
            out.append([v, 1])
    return out


def _coeff_payload(values, use_rle: bool):
    values = [int(v) for v in values]
    return {"rle": rle(values)} if use_rle else values


def parse_range(text: str) -> tuple[int, int]:
    """``a`` or ``a..b`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index or range {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad index or range {text!r}")
    return lo, hi


def parse_gens(text: str) -> list[int]:
    try:
        gens = [int(g) for g in text.split(",") if g.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad generator list {text!r}") from None
    if any(g < 1 for g in gens):
        raise argparse.ArgumentTypeError("generators must be positive")
    return gens


def cmd_coeff(args) -> dict:
    ctx = make_kaplan_context(args.p, args.q, args.r)
    lo, hi = args.k
    values = coeff_range(lo, hi, ctx)
    if lo == hi:
        result = {"k": lo, "value": int(values[0])}
    else:
        result = {"k_lo": lo, "k_hi": hi, "values": _coeff_payload(values, args.rle)}
    if args.verify_oracle:
        deg = ctx.triple.degree
        oracle = np.zeros(hi - lo + 1, dtype=np.int64)
        top = min(hi, deg)
        if top >= lo:
            oracle[: top - lo + 1] = cyclotomic_series(ctx.triple.n, top + 1)[lo:]
        if not np.array_equal(oracle, values):
            bad = int(np.flatnonzero(oracle != values)[0]) + lo
            raise CrossCheckFailed(f"Kaplan and oracle disagree at k={bad}")
        result["verified"] = True
    return result


def cmd_poly(args) -> dict:
    poly = cyclotomic_poly(args.n) if args.which == "phi" else inverse_cyclotomic_poly(args.n)
    result = {
        "n": args.n,
        "which": args.which,
        "degree": poly.degree,
        "summary": coeff_set(poly).as_dict(),
    }
    if not args.summary_only:
        result["coeffs"] = _coeff_payload(poly.coeffs, args.rle)
    return result


def cmd_scan(args):
    if args.mode == "jump":
        res = jump_scan(args.max_n, ternary_only=args.ternary, source=args.source, threads=args.threads)
        return res.findings, res.summary()
    if args.mode == "convex":
        res = convex_scan(args.max_n, which=args.which, factors=args.factors, threads=args.threads)
        return res.findings, res.summary()
    if args.mode == "optimal":
        res = optimal_scan(args.max_n, threads=args.threads)
        return res.findings, res.summary()
    if args.p is None:
        raise InvalidPrimes("height scans need -p")
    h = height_scan(args.p, args.q_max, args.r_max, threads=args.threads)
    findings = [
        {"p": args.p, "q": row.q, "r": row.r, "height": row.height, "k": row.k, "value": row.value}
        for row in h.rows
    ]
    summary = {
        "mode": "height",
        "scanned": len(h.rows),
        "max": h.height,
        "witness": list(h.witness) if h.witness else None,
        "value": h.value,
    }
    return findings, summary


def cmd_family(args) -> dict:
    inst = find_family_instance(args.kind, args.p, args.search_limit)
    report = verify_family(inst)
    result = {"instance": inst.as_dict(), "report": report.as_dict()}
    try:
        result["range"] = verify_optimal_range(inst).as_dict()
    except TooLarge as exc:
        result["range"] = None
        result["range_skipped"] = str(exc)
    if args.mirror:
        result["mirror"] = mirror_check(inst, args.search_limit)
    if not report.ok:
        raise CrossCheckFailed(f"family values disagree: {canonical(report.as_dict())}")
    return result


def cmd_semigroup(args) -> dict:
    if args.indicator is not None:
        res = indicator_check(args.indicator)
        return {"n": res.n, "holds": res.holds, "exponents": res.exponents, "prefix_sums": res.prefix_sums}
    if not args.gens:
        raise InvalidPrimes("--gens must list at least one generator")
    action = args.action or "table"
    table = build_table(args.gens)
    if action == "table":
        return {
            "generators": list(table.generators),
            "numerical": table.numerical,
            "frobenius": table.frobenius,
            "gaps": table.gaps() if table.numerical else None,
        }
    if action == "poly":
        poly = semigroup_polynomial(table)
        return {"generators": list(table.generators), "degree": poly.degree, "coeffs": poly.tolist()}
    if action == "divides":
        return {"generators": list(table.generators), "m_max": args.m_max,
                "m": divides_x_m_minus_1(args.gens, args.m_max)}
    raise InvalidPrimes(f"unknown action {action!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclocoeff", description=__doc__.split("\n\n")[0])
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="ternary coefficients via Kaplan's formula")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-k", type=parse_range, required=True, help="index or inclusive range a..b")
    p.add_argument("--verify-oracle", action="store_true")
    p.add_argument("--rle", action="store_true")

    p = sub.add_parser("poly", help="full expansion of Phi_n or Psi_n")
    p.add_argument("n", type=int)
    p.add_argument("--which", choices=["phi", "psi"], default="phi")
    p.add_argument("--rle", action="store_true")
    p.add_argument("--summary-only", action="store_true")

    p = sub.add_parser("scan", help="parameter sweeps")
    p.add_argument("mode", choices=["jump", "convex", "optimal", "height"])
    p.add_argument("--max-n", type=int, default=30000)
    p.add_argument("--ternary", action="store_true", help="jump: only ternary n")
    p.add_argument("--source", choices=["oracle", "kaplan"], default="oracle")
    p.add_argument("--which", choices=["phi", "psi"], default="phi")
    p.add_argument("--factors", type=int, default=3)
    p.add_argument("-p", type=int)
    p.add_argument("--q-max", type=int, default=100)
    p.add_argument("--r-max", type=int, default=100)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--format", choices=["json", "csv"], default=None, dest="scan_format")

    p = sub.add_parser("family", help="extremal ternary families")
    p.add_argument("kind", choices=["lemma4", "lemma6"])
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--search-limit", type=int, default=10**7)
    p.add_argument("--mirror", action="store_true", help="also transfer the value to p*q*t")

    p = sub.add_parser("semigroup", help="numerical semigroups")
    p.add_argument("action", nargs="?", choices=["table", "poly", "divides"])
    p.add_argument("--gens", type=parse_gens)
    p.add_argument("--indicator", type=int, metavar="N")
    p.add_argument("--m-max", type=int, default=1000)
    return parser


# scan options that matter for each mode, others are left out of the echo
_SCAN_KEYS = {
    "jump": {"max_n", "ternary", "source"},
    "convex": {"max_n", "which", "factors"},
    "optimal": {"max_n"},
    "height": {"p", "q_max", "r_max"},
}


def _params(args) -> dict:
    skip = {"command", "format", "scan_format", "threads"}
    keep = _SCAN_KEYS.get(args.mode) | {"mode"} if args.command == "scan" else None
    out = {}
    for key, val in sorted(vars(args).items()):
        if key in skip or val is None or val is False:
            continue
        if keep is not None and key not in keep:
            continue
        out[key] = list(val) if isinstance(val, tuple) else val
    return out


def _write_scan(findings, summary, fmt, out, envelope):
    if fmt == "csv":
        fields = sorted({key for f in findings for key in f})
        writer = csv.writer(out, lineterminator="\n")
        if fields:
            writer.writerow(fields)
        for f in findings:
            row = []
            for key in fields:
                v = f.get(key)
                row.append(";".join(map(str, v)) if isinstance(v, list) else ("" if v is None else v))
            writer.writerow(row)
        out.write("# " + " ".join(f"{k}={summary[k]}" for k in sorted(summary)) + "\n")
        return
    for f in findings:
        out.write(canonical(f) + "\n")
    envelope["result"] = summary
    out.write(canonical(envelope) + "\n")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    envelope = {"command": args.command, "params": _params(args)}
    try:
        if args.command == "scan":
            findings, summary = cmd_scan(args)
            envelope["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
            _write_scan(findings, summary, args.scan_format or args.format, out, envelope)
            return 0
        handler = {
            "coeff": cmd_coeff,
            "poly": cmd_poly,
            "family": cmd_family,
            "semigroup": cmd_semigroup,
        }[args.command]
        result = handler(args)
    except (InvalidPrimes, BadMirrorPrime, NotNumerical, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLarge as exc:
        print(f"error: {exc} (raise CYCLO_CAP, currently {get_cap()})", file=sys.stderr)
        return EXIT_CAP
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEARCH
    except CrossCheckFailed as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    envelope["result"] = result
    envelope["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
    out.write(canonical(envelope) + "\n")
    return 0


def run(argv) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout (used by the tests)."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
