"""Command-line front end: ``twist-apoly compute|verify|table``.

stdout carries only the requested payload; diagnostics go to stderr.
Exit codes: 0 success, 1 computation failure or disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .apoly import METHODS, APoly, a_poly_explicit, compute, verify
from .poly_core import LaurentPoly, to_latex, to_text


def parse_range(text: str) -> range:
    """Inclusive ``a..b`` with optional negative bounds; ``b < a`` is empty."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bounds must be integers: {text!r}") from None
    return range(a, b + 1)


def terms_record(p: LaurentPoly) -> list[dict]:
    out = []
    for exp, c in p.sorted_terms():
        if exp.e_Z:
            raise ValueError("A-polynomial terms must not involve Z")
        out.append({"coeff": str(c), "e_L": exp.e_L, "e_M": exp.e_M})
    return out


def poly_from_terms(terms: list[dict]) -> LaurentPoly:
    return LaurentPoly({(t["e_L"], t["e_M"], 0): int(t["coeff"]) for t in terms})


def output_record(n: int, method: str, poly: LaurentPoly, agree=None, elapsed_ms=None) -> dict:
    rec = {"n": n, "method": method, "polynomial": terms_record(poly)}
    if agree is not None:
        rec["agree"] = agree
    if elapsed_ms is not None:
        rec["elapsed_ms"] = {k: round(v, 3) for k, v in elapsed_ms.items()}
    return rec


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def render_text(n: int, poly: LaurentPoly) -> str:
    return f"A_{n}(L,M) = {to_text(poly)}"


def render_latex(n: int, poly: LaurentPoly) -> str:
    return f"A_{{{n}}}(L,M) = {to_latex(poly)}"


# -- commands --------------------------------------------------------------


def cmd_compute(n: int, method: str = "all", fmt: str = "text") -> tuple[str, int]:
    if method == "all":
        report = verify(n)
        for name, err in report.errors.items():
            print(f"error: {name}: {err}", file=sys.stderr)
        if not report.agree:
            print(f"error: methods disagree for n = {n}", file=sys.stderr)
            return "", 1
        poly = report.canonical
        timings = {k: t for k, (_, t) in report.per_method.items()}
        agree = True
    else:
        start = time.perf_counter()
        poly = compute(n, method).poly
        timings = {method: (time.perf_counter() - start) * 1000.0}
        agree = None

    if fmt == "json":
        return dump_json(output_record(n, method, poly, agree, timings)), 0
    if fmt == "latex":
        return render_latex(n, poly), 0
    return render_text(n, poly), 0


def _verify_one(args):
    n, fault = args
    overrides = None
    if fault:
        overrides = {fault: _corrupted}
    return verify(n, overrides=overrides)


def _corrupted(n: int) -> APoly:
    good = a_poly_explicit(n)
    return APoly(n, "corrupted", good.poly + LaurentPoly.monomial(1, 0, 1, 0),
                 good.unit_shift, good.sign, good.content)


def _run_ordered(ns: range, fault: str | None, jobs: int):
    work = [(n, fault) for n in ns]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map preserves input order
            return list(pool.map(_verify_one, work))
    return [_verify_one(w) for w in work]


def cmd_verify(ns: range, fmt: str = "text", fault: str | None = None, jobs: int = 1) -> tuple[str, int]:
    reports = _run_ordered(ns, fault, jobs)
    ok = all(r.agree for r in reports)
    for r in reports:
        for name, err in r.errors.items():
            print(f"error: n={r.n} {name}: {err}", file=sys.stderr)
    if fmt == "json":
        records = []
        for r in reports:
            timings = {k: t for k, (_, t) in r.per_method.items()}
            if r.canonical is not None:
                rec = output_record(r.n, "all", r.canonical, r.agree, timings)
            else:
                rec = {"n": r.n, "method": "all", "polynomial": None,
                       "agree": r.agree,
                       "elapsed_ms": {k: round(v, 3) for k, v in timings.items()}}
            records.append(rec)
        return dump_json(records), 0 if ok else 1

    lines = []
    for r in reports:
        status = "agree" if r.agree else "DISAGREE"
        timing = ", ".join(f"{k} {t:.1f} ms" for k, (_, t) in r.per_method.items())
        lines.append(f"n={r.n:>3}  {status}  ({timing})")
    lines.append(f"{sum(r.agree for r in reports)}/{len(reports)} agree")
    return "\n".join(lines), 0 if ok else 1


def cmd_table(ns: range, fmt: str = "latex") -> tuple[str, int]:
    rows = []
    for n in ns:
        report = verify(n)
        if not report.agree:
            print(f"error: methods disagree for n = {n}", file=sys.stderr)
            return "", 1
        rows.append((n, report.canonical))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "polynomial", "terms"])
        for n, p in rows:
            writer.writerow([n, to_text(p), json.dumps(terms_record(p), separators=(",", ":"))])
        return buf.getvalue().rstrip("\n"), 0
    lines = [r"\begin{tabular}{r|l}", r"$n$ & $A_n(L,M)$ \\", r"\hline"]
    for n, p in rows:
        lines.append(f"${n}$ & ${to_latex(p)}$ \\\\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines), 0


# -- argument parsing ------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twist-apoly", description="A-polynomials of twist knots K_n = J(2, 2n).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="compute A_n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=("all",) + METHODS, default="all")
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")

    p = sub.add_parser("verify", help="cross-check all methods over a range of n")
    p.add_argument("--range", dest="range_", type=parse_range, required=True, metavar="a..b")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    # test hook: replace one method by a deliberately wrong one
    p.add_argument("--inject-fault", choices=METHODS, default=None, help=argparse.SUPPRESS)

    p = sub.add_parser("table", help="tabulate A_n over a range of n")
    p.add_argument("--range", dest="range_", type=parse_range, required=True, metavar="a..b")
    p.add_argument("--format", choices=("latex", "csv"), default="latex")
    return parser


def _attach_range_values(argv: list[str]) -> list[str]:
    # argparse takes "-6..6" for an option flag unless it is glued on with "="
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--range":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--range={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_range_values(argv))
    try:
        if args.command == "compute":
            out, code = cmd_compute(args.n, args.method, args.format)
        elif args.command == "verify":
            if args.jobs < 1:
                parser.error("--jobs must be positive")
            out, code = cmd_verify(args.range_, args.format, args.inject_fault, args.jobs)
        else:
            out, code = cmd_table(args.range_, args.format)
    except Exception as exc:  # noqa: BLE001 - mapped to exit code 1
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
