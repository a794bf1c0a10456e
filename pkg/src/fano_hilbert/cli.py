"""Command-line front end.

Exit status: 0 success, 1 domain error (bad data, failed root finding),
2 usage error.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from fractions import Fraction
from typing import Sequence, TextIO

from . import bundle_scan, catalog
from .exactq import UniPoly, rational_str
from .families import (
    ChernData4,
    DelPezzoData,
    MukaiData,
    bundle_case2_poly,
    bundle_case13_poly,
    del_pezzo,
    fourfold_conditions,
    fourfold_from_chern,
    genus_degree,
    mukai,
    projective_space,
    quadric,
    surface_from_K2,
    threefold_condition,
    threefold_from_K3,
)
from .hilbert import H0Vector, HilbertPolynomial, center, from_h0, from_polynomial
from .reducibility import (
    RootFindingError,
    analyze,
    default_dps,
    gamma_lines,
    strip_check,
    structural_violations,
)

KINDS = ("pn", "qn", "delpezzo", "mukai", "surface", "threefold", "fourfold", "bundle13", "bundle2")
_NEEDS = {
    "pn": ("n",),
    "qn": ("n",),
    "delpezzo": ("n", "d"),
    "mukai": ("n",),
    "surface": ("K2", "iota"),
    "threefold": ("mK3", "iota"),
    "fourfold": ("k", "h"),
    "bundle13": ("m",),
    "bundle2": ("m",),
}


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


# ---------------------------------------------------------------------------
# building polynomials


def build_family(args) -> tuple[HilbertPolynomial, dict]:
    kind = args.kind
    missing = [f"--{name}" for name in _NEEDS[kind] if getattr(args, name) is None]
    if kind == "mukai" and args.d is None and args.g is None:
        missing.append("--d or --g")
    if missing:
        raise UsageError(f"family --kind {kind} needs {', '.join(missing)}")
    extra: dict = {}
    if kind == "pn":
        hp = projective_space(args.n)
    elif kind == "qn":
        hp = quadric(args.n)
    elif kind == "delpezzo":
        hp, delta = del_pezzo(DelPezzoData(args.n, args.d))
        extra["Delta"] = rational_str(delta)
    elif kind == "mukai":
        d = args.d if args.d is not None else genus_degree(args.g)
        data = MukaiData(args.n, d, args.g)
        hp, delta = mukai(data)
        extra["Delta"] = rational_str(delta)
        extra["anticanonical_degree"] = data.anticanonical_degree
    elif kind == "surface":
        hp = surface_from_K2(args.K2, args.iota)
    elif kind == "threefold":
        hp = threefold_from_K3(args.mK3, args.iota)
        extra["condition"] = rational_str(threefold_condition(args.mK3))
    elif kind == "fourfold":
        hp = fourfold_from_chern(ChernData4(args.k, args.h, args.iota or 1))
        extra.update(fourfold_conditions(args.k, args.h).to_json())
    elif kind == "bundle13":
        hp = bundle_case13_poly(args.m)
    else:
        hp = bundle_case2_poly(args.m)
    return hp, extra


def _read_polynomial(stdin: TextIO, n: int | None, iota: int | None):
    text = stdin.read()
    if not text.strip():
        raise ValueError("no polynomial on standard input")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed polynomial JSON: {exc}") from exc
    if isinstance(data, dict):
        n = data.get("n", n)
        iota = data.get("iota", iota)
    P = UniPoly.from_json(data)
    if P.is_zero():
        raise ValueError("zero polynomial")
    if n is not None and iota is not None:
        return from_polynomial(P, int(n), int(iota))
    return P


# ---------------------------------------------------------------------------
# output


def _analysis(hp, args) -> dict:
    out: dict = {}
    P = hp.P if isinstance(hp, HilbertPolynomial) else hp
    if args.check:
        out["report"] = analyze(P).to_json()
        if isinstance(hp, HilbertPolynomial):
            out["violations"] = structural_violations(hp)
    if args.curve:
        if not isinstance(hp, HilbertPolynomial):
            raise UsageError("--curve needs n and iota")
        out["gamma"] = gamma_lines(hp, args.r).to_json()
    if getattr(args, "strip", False):
        if not isinstance(hp, HilbertPolynomial):
            raise UsageError("--strip needs n and iota")
        out["strip"] = [v.to_json() for v in strip_check(hp, args.tol, args.dps)]
    return out


def _text_block(hp, extra: dict, analysis: dict) -> str:
    lines = []
    if isinstance(hp, HilbertPolynomial):
        lines.append(f"n = {hp.n}, iota = {hp.iota}, coindex = {hp.coindex}, H^n = {rational_str(hp.degree_Hn)}")
        lines.append(f"P(z) = {hp.P}")
        lines.append(f"R(z) = {hp.r_factor}")
        lines.append(f"Q(w) = {str(center(hp)).replace('z', 'w')}")
        lines.append("coeffs = " + json.dumps(hp.P.to_json()))
        lines.append("R coeffs = " + json.dumps(hp.r_factor.to_json()))
    else:
        lines.append(f"P(z) = {hp}")
    for key, val in extra.items():
        lines.append(f"{key} = {'none' if val is None else str(val).lower() if isinstance(val, bool) else val}")
    rep = analysis.get("report")
    if rep:
        roots = ", ".join(f"{r['root']} (x{r['mult']})" for r in rep["rational_roots"]) or "none"
        lines.append(f"rational roots: {roots}")
        lines.append(f"q_verdict = {str(rep['q_verdict']).lower()}")
        lines.append(f"r_verdict = {str(rep['r_verdict']).lower()}")
        lines.append(f"distinct real roots = {rep['distinct_real_roots']}")
        if "violations" in analysis:
            lines.append("structure: " + ("ok" if not analysis["violations"] else "; ".join(analysis["violations"])))
    gam = analysis.get("gamma")
    if gam:
        lines.append(f"Gamma_Q (r = {gam['r']}, slope {gam['slope']}):")
        for ln in gam["q_lines"]:
            lines.append(f"  {ln['equation']}" + (f"  (x{ln['mult']})" if ln["mult"] > 1 else ""))
        if not gam["q_lines"]:
            lines.append("  (no rational lines)")
        ex = gam["r_extra"]
        lines.append(f"extra real lines: {ex['count']}")
        for d in ex["description"]:
            lines.append(f"  {d}")
    strip = analysis.get("strip")
    if strip:
        lines.append("strip check (root, rescaled real part, status):")
        for v in strip:
            tag = "" if v["exact"] else f"  +/- {v['radius']}"
            lines.append(f"  {v['root']}  {v['rescaled_real']}  {v['status']}{tag}")
    return "\n".join(lines) + "\n"


def _emit(hp, extra: dict, analysis: dict, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        doc = {"polynomial": hp.to_json() if isinstance(hp, HilbertPolynomial) else {"coeffs": hp.to_json()}}
        if extra:
            doc["invariants"] = extra
        doc.update(analysis)
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["field", "value"])
        P = hp.P if isinstance(hp, HilbertPolynomial) else hp
        if isinstance(hp, HilbertPolynomial):
            w.writerows([["n", hp.n], ["iota", hp.iota], ["coindex", hp.coindex]])
        for i, c in enumerate(P.to_json()):
            w.writerow([f"a{i}", c])
        for key, val in extra.items():
            w.writerow([key, val])
        rep = analysis.get("report")
        if rep:
            w.writerow(["q_verdict", str(rep["q_verdict"]).lower()])
            w.writerow(["r_verdict", str(rep["r_verdict"]).lower()])
            w.writerow(["rational_roots", " ".join(f"{r['root']}^{r['mult']}" for r in rep["rational_roots"])])
        gam = analysis.get("gamma")
        if gam:
            for ln in gam["q_lines"]:
                w.writerow(["line", ln["equation"]])
    else:
        out.write(_text_block(hp, extra, analysis))


def _x_values(args) -> list[Fraction]:
    if args.x_step <= 0:
        raise UsageError("--x-step must be positive")
    if args.x_max < args.x_min:
        raise UsageError("--x-max must not be below --x-min")
    xs, x = [], args.x_min
    while x <= args.x_max:
        xs.append(x)
        x += args.x_step
    return xs


# ---------------------------------------------------------------------------
# subcommands


def cmd_family(args, stdin, out) -> int:
    hp, extra = build_family(args)
    _emit(hp, extra, _analysis(hp, args), args.format, out)
    return 0


def cmd_from_h0(args, stdin, out) -> int:
    hp = from_h0(args.n, args.iota, H0Vector.parse(args.h0))
    extra = {"a": " ".join(rational_str(c) for c in hp.r_factor.coeffs)}
    _emit(hp, extra, _analysis(hp, args), args.format, out)
    return 0


def cmd_check(args, stdin, out) -> int:
    args.check = True
    hp = _read_polynomial(stdin, args.n, args.iota)
    _emit(hp, {}, _analysis(hp, args), args.format, out)
    return 0


def cmd_curve(args, stdin, out) -> int:
    if args.kind:
        hp, _ = build_family(args)
    else:
        hp = _read_polynomial(stdin, args.n, args.iota)
        if not isinstance(hp, HilbertPolynomial):
            raise UsageError("curve needs n and iota (in the JSON or via --n/--iota)")
    dec = gamma_lines(hp, args.r)
    if args.emit_points:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["x", "y", "line"])
        w.writerows(dec.point_rows(_x_values(args)))
        return 0
    if args.format == "json":
        out.write(json.dumps(dec.to_json(), indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["line", "equation", "root", "mult"])
        for i, ln in enumerate(dec.q_lines, start=1):
            w.writerow([f"l{i}", ln.equation, rational_str(ln.root), ln.multiplicity])
    else:
        args.check = False
        args.curve = True
        out.write(_text_block(hp, {}, {"gamma": dec.to_json()}))
    return 0


def cmd_scan(args, stdin, out) -> int:
    recs = bundle_scan.scan(args.min, args.max, args.workers)
    render = {"text": bundle_scan.render_text, "json": bundle_scan.render_jsonl, "csv": bundle_scan.render_csv}
    out.write(render[args.format](recs, args.timing))
    if args.evidence:
        sys.stderr.write(bundle_scan.render_evidence(recs))
    return 0


def cmd_catalog(args, stdin, out) -> int:
    if args.file:
        with open(args.file, "rb") as fh:
            entries = catalog.load_catalog(fh)
        if args.dim is not None:
            entries = [e for e in entries if e.dim == args.dim]
    else:
        entries = catalog.load_embedded(args.dim)
    rows = catalog.report(entries)
    render = {"text": catalog.render_text, "json": catalog.render_json, "csv": catalog.render_csv}
    out.write(render[args.format](rows))
    bad = [r.id for r in rows if r.status == "MISMATCH"]
    if bad:
        sys.stderr.write(f"catalog integrity failure: {', '.join(bad)}\n")
        return 1
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_format(p):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")


def _add_analysis(p):
    p.add_argument("--check", action="store_true", help="decide splitting over Q and R")
    p.add_argument("--curve", action="store_true", help="print the Hilbert-curve lines")
    p.add_argument("--r", type=int, default=1, help="polarization multiple L = rH (default 1)")
    p.add_argument("--strip", action="store_true", help="locate roots against the canonical strip")
    p.add_argument("--tol", type=_fraction, default=Fraction(1, 10**20))
    p.add_argument("--dps", type=int, default=None, help="decimal digits (env FANO_HILBERT_DPS)")


def _add_family_opts(p, required: bool):
    p.add_argument("--kind", choices=KINDS, required=required)
    for name in ("n", "d", "g", "m", "k", "h", "iota"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--K2", type=int, help="K^2 of a del Pezzo surface")
    p.add_argument("--mK3", type=int, help="(-K)^3 of a Fano threefold")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fano-hilbert", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="closed-form family polynomial")
    _add_family_opts(p, True)
    _add_analysis(p)
    _add_format(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("from-h0", help="polynomial from h0(tH), t = 0..coindex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--iota", type=int, required=True)
    p.add_argument("--h0", required=True, help="comma-separated integers, first entry 1")
    _add_analysis(p)
    _add_format(p)
    p.set_defaults(func=cmd_from_h0)

    p = sub.add_parser("check", help="analyse a polynomial read as JSON from stdin")
    p.add_argument("--n", type=int)
    p.add_argument("--iota", type=int)
    _add_analysis(p)
    _add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan-bundles", help="scan the rank-m bundle family")
    p.add_argument("--min", type=int, default=2)
    p.add_argument("--max", type=int, default=10)
    p.add_argument("--workers", type=int, default=None, help="processes (env FANO_HILBERT_WORKERS)")
    p.add_argument("--timing", action="store_true", help="include per-m timings (not reproducible)")
    p.add_argument("--evidence", action="store_true", help="conjecture evidence summary on stderr")
    _add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("catalog", help="classify the embedded or a user catalog")
    p.add_argument("--dim", type=int)
    p.add_argument("--file", help="CSV or JSON catalog path")
    _add_format(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("curve", help="Hilbert-curve lines of a family or of stdin JSON")
    _add_family_opts(p, False)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--emit-points", action="store_true", help="CSV samples (x, y, line)")
    p.add_argument("--x-min", type=_fraction, default=Fraction(-1))
    p.add_argument("--x-max", type=_fraction, default=Fraction(1))
    p.add_argument("--x-step", type=_fraction, default=Fraction(1, 2))
    _add_format(p)
    p.set_defaults(func=cmd_curve)
    return ap


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "r", 1) is not None and getattr(args, "r", 1) < 1:
        sys.stderr.write("error: --r must be a positive integer\n")
        return 2
    if getattr(args, "dps", None) is None and hasattr(args, "dps"):
        args.dps = default_dps()
    buf = io.StringIO()
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = args.func(args, stdin, buf)
        for w in caught:
            sys.stderr.write(f"warning: {w.message}\n")
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, ArithmeticError, RootFindingError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    stdout.write(buf.getvalue())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
