"""Command-line front end.

Subcommands: ``precompute``, ``integrate``, ``compare`` and ``epsilon``.
Integrands are given as comma-separated descending coefficient lists, e.g.
``--den 1,4,15 --num 1``; entries may be integers, ``p/q`` or decimals.

With ``--format kv`` every command prints a line-oriented report::

    # landen-report v1
    command=integrate
    key=value
    ...

Exact rationals are written as ``p/q`` (or an integer) and re-parse to the
same value; floating values are written as decimal strings.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction
from typing import Dict, List, Optional

import mpmath

from . import symbolic
from .driver import RunConfig, epsilon_study, integrate, relative_errors
from .errors import (
    DivergenceSuspected,
    FormatError,
    InvalidOrder,
    NoConvergence,
    OddDegree,
    PrecisionExhausted,
    ResourceLimit,
    ValidationError,
)
from .landen import RationalFunction, validate
from .quadrature import TRAPEZOID_RULES, fold, reference_integral, trapezoid
from .scalars import precision, to_bigfloat

REPORT_HEADER = "# landen-report v1"
CACHE_ENV = "LANDEN_CACHE"
DEFAULT_DIGITS = 30

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_RESOURCE = 0, 2, 3, 4

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class UsageError(Exception):
    """Bad command-line input; maps to exit status 2."""


# parsing ----------------------------------------------------------------------


def parse_scalar(token: str) -> Fraction:
    token = token.strip()
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse coefficient {token!r}") from None


def parse_list(text: str) -> List[Fraction]:
    if text is None or not text.strip():
        raise UsageError("empty coefficient list")
    return [parse_scalar(t) for t in text.split(",")]


def parse_int_list(text: str, what: str) -> List[int]:
    if text is None or not text.strip():
        raise UsageError(f"empty {what} list")
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse {what} list {text!r}") from None


def parse_integrand(num: str, den: str) -> RationalFunction:
    return RationalFunction.from_lists(parse_list(num), parse_list(den))


def format_value(x, digits: int) -> str:
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    return mpmath.nstr(x, digits)


def parse_report(text: str) -> Dict[str, object]:
    """Read a kv report back; exact rationals come back as Fractions."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != REPORT_HEADER:
        raise FormatError("missing report header")
    out: Dict[str, object] = {}
    for line in lines[1:]:
        if not line.strip() or line.startswith("#"):
            continue
        if "=" not in line:
            raise FormatError(f"bad report line: {line!r}")
        key, value = line.split("=", 1)
        out[key] = Fraction(value) if _RATIONAL.match(value) else value
    return out


class Report:
    """Collects key/value pairs and renders them as kv or a table."""

    def __init__(self, command: str, digits: int):
        self.command = command
        self.digits = digits
        self.items: list = [("command", command)]

    def add(self, key: str, value) -> None:
        self.items.append((key, value))

    def kv(self) -> str:
        body = [f"{k}={format_value(v, self.digits) if not isinstance(v, str) else v}" for k, v in self.items]
        return "\n".join([REPORT_HEADER] + body) + "\n"


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _table(headers: List[str], rows: List[List[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    fmt = "  ".join(f"{{:>{w}}}" for w in widths)
    lines = [fmt.format(*headers), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*r) for r in rows]
    return "\n".join(lines)


# commands ---------------------------------------------------------------------


def _cache_dir(args) -> str:
    return args.cache_dir or os.environ.get(CACHE_ENV) or os.path.join(os.getcwd(), ".landen-cache")


def cmd_precompute(args) -> int:
    try:
        symbolic._check_params(args.p, args.m)
    except (OddDegree, InvalidOrder) as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from None
    path = symbolic.cache_path(_cache_dir(args), args.p, args.m)
    try:
        lmap, hit = symbolic.load_or_generate(_cache_dir(args), args.p, args.m, args.max_terms)
    except ResourceLimit as exc:
        smaller = f"p={max(2, args.p - 2)}, m={args.m}" if args.p > 2 else f"p={args.p}, m={max(2, args.m - 1)}"
        raise ResourceLimit(f"{exc}; try a smaller case such as {smaller} or raise --max-terms") from None
    rep = Report("precompute", DEFAULT_DIGITS)
    rep.add("p", args.p)
    rep.add("m", args.m)
    rep.add("path", str(path))
    rep.add("cache", "hit" if hit else "written")
    rep.add("scale", lmap.scale)
    for name, count in lmap.term_counts().items():
        rep.add(f"terms.{name}", count)
    if args.format == "kv":
        _emit(rep.kv())
    else:
        print(f"cache hit: {path}" if hit else f"wrote {path}")
        print(_table(["formula", "terms"], [[k, str(v)] for k, v in lmap.term_counts().items()]))
    return EXIT_OK


def _run_config(args, p: int) -> RunConfig:
    if (args.n is None) == (args.tol is None):
        raise UsageError("give exactly one of --n or --tol")
    landen_map = None
    if args.use_cache:
        landen_map, _ = symbolic.load_or_generate(_cache_dir(args), p, args.m)
    try:
        return RunConfig(
            m=args.m,
            mode=args.mode,
            digits=args.digits,
            n=args.n,
            tol=None if args.tol is None else parse_scalar(args.tol),
            compress=None if args.compress is None else parse_scalar(args.compress),
            normalize=args.normalize,
            landen_map=landen_map,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_integrate(args) -> int:
    if args.m < 2:
        raise UsageError(f"InvalidOrder: order m must be >= 2, got {args.m}")
    F = validate(parse_integrand(args.num, args.den))
    cfg = _run_config(args, F.p)
    result = integrate(F, cfg)
    rep = Report("integrate", args.digits)
    rep.add("m", args.m)
    rep.add("mode", args.mode)
    rep.add("digits", args.digits)
    rep.add("steps", len(result.trace) - 1)
    ref = rels = None
    if args.reference:
        ref = reference_integral(F, args.digits + 10)
        with precision(args.digits + 10):
            rels = relative_errors(result.trace, ref)
    with precision(args.digits):
        for s in result.trace:
            rep.add(f"step.{s.n}.phi", s.phi)
            rep.add(f"step.{s.n}.delta", s.delta)
            if s.height_max is not None:
                rep.add(f"step.{s.n}.height", s.height_max)
            rep.add(f"step.{s.n}.coeffs", ",".join(format_value(c, args.digits) for c in s.coeffs))
            if rels is not None:
                rep.add(f"step.{s.n}.relerr", rels[s.n])
        rep.add("phi", result.phi)
        rep.add("approx", result.approx)
        if ref is not None:
            rep.add("reference", ref)
        if args.format == "kv":
            _emit(rep.kv())
            return EXIT_OK
        headers = ["n", "phi", "delta", "height"] + (["rel.err"] if rels else [])
        rows = []
        for s in result.trace:
            phi_text = format_value(s.phi if args.mode != "exact" else to_bigfloat(s.phi), args.digits)
            delta = "-" if s.delta is None else mpmath.nstr(to_bigfloat(s.delta), 6)
            height = "-" if s.height_max is None else f"{len(str(s.height_max))}d"
            row = [str(s.n), phi_text, delta, height]
            if rels:
                row.append(mpmath.nstr(rels[s.n], 6))
            rows.append(row)
        print(_table(headers, rows))
        print(f"approx = {mpmath.nstr(result.approx, args.digits)}")
        if args.mode == "exact":
            print(f"phi    = {format_value(result.phi, args.digits)}")
    return EXIT_OK


def cmd_compare(args) -> int:
    F = parse_integrand(args.num, args.den)
    ms = parse_int_list(args.m_list, "order")
    ns = parse_int_list(args.n_list, "step")
    traps = parse_int_list(args.trapezoid, "panel") if args.trapezoid else []
    if any(m < 2 for m in ms):
        raise UsageError("every order must be >= 2")
    if any(n < 0 for n in ns):
        raise UsageError("step counts must be >= 0")
    validate(F, exact=True)
    ref = reference_integral(F, args.digits + 10)
    rep = Report("compare", 6)
    rep.add("digits", args.digits)
    grid = {}
    for m in ms:
        run = integrate(F, RunConfig(m=m, n=max(ns), digits=args.digits))
        with precision(args.digits):
            errs = relative_errors(run.trace, ref)
        for n in ns:
            grid[m, n] = errs[n]
            rep.add(f"rel.m{m}.n{n}", errs[n])
    trap_errs = {}
    if traps:
        g = fold(F)
        for n in traps:
            with precision(args.digits):
                value = trapezoid(g, n, args.digits, rule=args.rule)
                trap_errs[n] = abs(value - ref) / abs(ref)
            rep.add(f"trapezoid.{args.rule}.n{n}", trap_errs[n])
    if args.format == "kv":
        _emit(rep.kv())
        return EXIT_OK
    rows = [[str(n)] + [mpmath.nstr(grid[m, n], 6) for m in ms] for n in ns]
    print(_table(["n"] + [f"m={m}" for m in ms], rows))
    if traps:
        print()
        print(_table(["panels", f"trapezoid ({args.rule})"], [[str(n), mpmath.nstr(e, 6)] for n, e in trap_errs.items()]))
    return EXIT_OK


def cmd_epsilon(args) -> int:
    epsilons = parse_list(args.eps)
    if any(e <= 0 for e in epsilons):
        raise UsageError("every eps must be positive")
    if args.steps < 1:
        raise UsageError("need at least one step")
    if args.m < 2:
        raise UsageError(f"InvalidOrder: order m must be >= 2, got {args.m}")
    rep = Report("epsilon", 6)
    rep.add("m", args.m)
    rep.add("steps", args.steps)
    rep.add("digits", args.digits)
    rows = []
    for eps in epsilons:
        key = format_value(eps, 6)
        try:
            errs = epsilon_study(eps, args.m, args.steps, args.digits)
            with precision(args.digits):
                ratio = mpmath.nstr(errs[-1] / errs[-2], 6)
        except PrecisionExhausted as exc:
            ratio = "precision-exhausted"
            rep.add(f"note.{key}", str(exc))
        rep.add(f"ratio.{key}", ratio)
        rows.append([key, ratio])
    if args.format == "kv":
        _emit(rep.kv())
    else:
        print(_table(["eps", f"err_{args.steps}/err_{args.steps - 1} (order {args.m})"], rows))
    return EXIT_OK


# argument parsing -------------------------------------------------------------


def _add_integrand(sp) -> None:
    sp.add_argument("--num", required=True, help="numerator coefficients, descending")
    sp.add_argument("--den", required=True, help="denominator coefficients, descending")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ratlanden", description="Rational Landen integration of rational functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, digits=DEFAULT_DIGITS):
        sp.add_argument("--digits", type=int, default=digits, help="working precision in decimal digits")
        sp.add_argument("--format", choices=("table", "kv"), default="table")

    sp = sub.add_parser("precompute", help="generate and cache a symbolic map")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--cache-dir", help=f"cache directory (default ${CACHE_ENV})")
    sp.add_argument("--max-terms", type=int, default=symbolic.DEFAULT_MAX_TERMS)
    sp.add_argument("--format", choices=("table", "kv"), default="table")
    sp.set_defaults(func=cmd_precompute)

    sp = sub.add_parser("integrate", help="iterate the transformation and report the integral")
    _add_integrand(sp)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--n", type=int)
    sp.add_argument("--tol")
    sp.add_argument("--mode", choices=("exact", "bigfloat"), default="exact")
    sp.add_argument("--normalize", choices=("auto", "monic", "gcd", "none"), default="auto")
    sp.add_argument("--compress", metavar="TOL", help="continued-fraction compression tolerance")
    sp.add_argument("--use-cache", action="store_true", help="step with the precomputed symbolic map")
    sp.add_argument("--cache-dir")
    sp.add_argument("--reference", action="store_true", help="also report relative errors against a reference value")
    common(sp)
    sp.set_defaults(func=cmd_integrate)

    sp = sub.add_parser("compare", help="relative-error grid against trapezoid baselines")
    _add_integrand(sp)
    sp.add_argument("--m-list", default="2,3,4")
    sp.add_argument("--n-list", default="0,1,2,3,4")
    sp.add_argument("--trapezoid", default="100,1000", help="panel counts for the trapezoid baseline")
    sp.add_argument("--rule", choices=TRAPEZOID_RULES, default="skip-last")
    common(sp, digits=60)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("epsilon", help="error-ratio study for 1/((x-2)^2+eps^2)")
    sp.add_argument("--eps", required=True, help="comma-separated eps values")
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--steps", type=int, default=16)
    common(sp, digits=200)
    sp.set_defaults(func=cmd_epsilon)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"invalid integrand: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ResourceLimit, PrecisionExhausted, NoConvergence, DivergenceSuspected) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
