"""Command-line front end.

Exit codes: ``check`` returns 0 when irreducibility is certified, 1 when
inconclusive; ``oracle`` returns 0 for a proper factorization, 1 for
irreducible, 3 when a search limit trips; 2 always means bad input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import families
from ._validation import check_primes
from .criteria import Verdict, auto_check
from .oracle import Status, kronecker_factorize
from .poly import IntPoly, PolyParseError, factor_out_x, parse_poly
from .polygon import build_polygon, classify_shape
from .svg import polygon_svg
from .valuation import candidate_primes


class UsageError(Exception):
    pass


def _parse_primes(text: str) -> list[int]:
    try:
        return list(check_primes(int(tok) for tok in text.split(",") if tok.strip()))
    except ValueError as exc:
        raise UsageError(f"bad prime list {text!r}: {exc}") from None


def _load_poly(args) -> IntPoly:
    if (args.poly is None) == (args.file is None):
        raise UsageError("give exactly one of --poly or --file")
    text = args.poly if args.poly is not None else Path(args.file).read_text()
    try:
        return parse_poly(text.strip())
    except PolyParseError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    elif not getattr(args, "quiet", False):
        sys.stdout.write(text)


def _add_poly_args(sp: argparse.ArgumentParser) -> None:
    src = sp.add_argument_group("polynomial source")
    src.add_argument("--poly", help='coefficients "c0,c1,..." or an expression like "x^2+2*x+2"')
    src.add_argument("--file", help="read the polynomial from a file")


def _add_prime_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--primes", help="comma-separated primes")
    sp.add_argument("--auto-primes", action="store_true", help="also discover primes from the coefficients")
    sp.add_argument("--bound", type=int, default=10000, help="discovery bound (default 10000)")
    sp.add_argument("--mode", choices=("endpoints", "all"), default="endpoints")


def _selected_primes(args, f: IntPoly) -> tuple[list[int] | None, bool]:
    primes = _parse_primes(args.primes) if args.primes else None
    return primes, args.auto_primes or primes is None


def cmd_check(args) -> int:
    f = _load_poly(args)
    primes, auto = _selected_primes(args, f)
    cert = auto_check(f, primes, auto_primes=auto, bound=args.bound, mode=args.mode)
    if args.format == "json":
        _emit(args, cert.to_json() + "\n")
    else:
        lines = [
            f"polynomial: {cert.polynomial.to_expr()}"
            + (f"  (content {cert.content}, x^{cert.x_power} removed)" if cert.content != 1 or cert.x_power else ""),
            f"primes: {', '.join(map(str, cert.primes)) or 'none'}",
        ]
        for ev in cert.per_prime:
            lines.append(
                f"  p={ev.prime}: widths {ev.polygon.segment_widths()}, d_p={ev.d_p}, S_p={ev.s_p.sorted()}"
            )
        lines.append(f"factor degree multiple: {cert.factor_degree_multiple}")
        lines.append(f"residual degrees: {cert.residual_degrees.sorted()}")
        rule = f" ({cert.fired_rule.value})" if cert.fired_rule else ""
        lines.append(f"verdict: {cert.verdict.value}{rule}")
        lines += [f"note: {n}" for n in cert.notes]
        _emit(args, "\n".join(lines) + "\n")
    return 0 if cert.verdict is Verdict.IRREDUCIBLE else 1


def cmd_polygon(args) -> int:
    f = _load_poly(args)
    k, g = factor_out_x(f) if not f.is_zero() else (0, f)
    if g.is_zero() or g.degree < 1:
        raise UsageError("polygon needs a non-constant polynomial")
    primes, auto = _selected_primes(args, g)
    chosen = sorted(set(primes or []) | (set(candidate_primes(g, args.bound, args.mode)) if auto else set()))
    if not chosen:
        raise UsageError("no primes given or discovered")
    polys = [build_polygon(g, p) for p in chosen]

    if args.format == "svg":
        svgs = [polygon_svg(g, poly) for poly in polys]
        if args.out and len(svgs) > 1:
            base = Path(args.out)
            for poly, svg in zip(polys, svgs):
                base.with_name(f"{base.stem}_p{poly.prime}{base.suffix or '.svg'}").write_text(svg)
        else:
            _emit(args, "".join(svgs))
        return 0
    if args.format == "json":
        import json

        _emit(args, json.dumps([poly.to_dict() for poly in polys], indent=2) + "\n")
        return 0
    lines = []
    if k:
        lines.append(f"x^{k} factored out")
    for poly in polys:
        shape = classify_shape(poly)
        corner = f" at j={shape.corner}" if shape.corner is not None else ""
        lines.append(f"p={poly.prime}: shape {shape.tag.value}{corner}")
        lines.append("  vertices " + " ".join(f"({x},{y})" for x, y in poly.vertices))
        for e in poly.edges:
            s = e.slope
            frac = str(s.numerator) if s.denominator == 1 else f"{s.numerator}/{s.denominator}"
            lines.append(
                f"  edge {e.start}->{e.end}: slope {frac}, width {e.width}, height {e.height}, "
                f"m={e.multiplicity}, x={e.segment_width}"
            )
        lines.append(f"  segment widths {poly.segment_widths()}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_oracle(args) -> int:
    f = _load_poly(args)
    if f.is_zero():
        raise UsageError("cannot factor the zero polynomial")
    res = kronecker_factorize(f, max_degree=args.max_degree, max_divisor_candidates=args.max_candidates)
    _emit(args, str(res) + "\n")
    return {Status.FACTORED: 0, Status.IRREDUCIBLE: 1, Status.LIMIT_EXCEEDED: 3}[res.status]


def cmd_generate(args) -> int:
    try:
        f = families.family(args.family, args.p, args.q, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, str(f) + "\n")
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run_all

    results = run_all(args.seed)
    for r in results:
        print(r.line())
    ok = all(r.passed for r in results)
    print("ALL PASS" if ok else "SOME CHECKS FAILED")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="newton-irred", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="certify irreducibility via Newton polygons")
    _add_poly_args(sp)
    _add_prime_args(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--out")
    sp.add_argument("--quiet", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("polygon", help="print or draw Newton polygons")
    _add_poly_args(sp)
    _add_prime_args(sp)
    sp.add_argument("--format", choices=("text", "json", "svg"), default="text")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_polygon)

    sp = sub.add_parser("oracle", help="factor by Kronecker's method")
    _add_poly_args(sp)
    sp.add_argument("--max-degree", type=int, default=8)
    sp.add_argument("--max-candidates", type=int, default=10**7)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("generate", help="emit a member of one of the eight two-prime families")
    sp.add_argument("--family", type=int, required=True, choices=range(1, 9))
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("selftest", help="run the acceptance checks")
    sp.add_argument("--seed", type=int, default=None)
    sp.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.command == "selftest" and args.seed is None:
        from .selftest import DEFAULT_SEED

        args.seed = DEFAULT_SEED
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
