"""Precomputed Landen maps: explicit integer polynomial formulas.

:func:`generate` runs the transformation pipeline with indeterminate
coefficients a_0..a_p, b_0..b_{p-2} (variables 0..2p-1 of a
:class:`MultiPoly`). The resulting h- and d-formulas are stored with their
joint rational content divided out; ``scale`` multiplies them back, so
``apply`` reproduces the un-normalised numeric transform exactly.

Cache file layout (UTF-8, one record per line)::

    landen-map v1 p=<p> m=<m>
    scale <rational>
    h0 <nterms> <coef>:<e0>,...,<e_{2p-1}> ...
    ...
    d<p-2> ...

Terms within a line are sorted lexicographically by exponent vector.
"""

from __future__ import annotations

import io
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, Sequence, Tuple

from . import cotangent
from .errors import ArityMismatch, FormatError, InvalidOrder, OddDegree, ResourceLimit, VersionMismatch
from .landen import PipelineDims, step1_H, step2_E, step3_Z, step4_C, step7_J
from .multipoly import MultiPoly
from .upoly import Polynomial

FORMAT_VERSION = 1
DEFAULT_MAX_TERMS = 250_000


def variable_names(p: int) -> list:
    return [f"a{i}" for i in range(p + 1)] + [f"b{i}" for i in range(p - 1)]


@dataclass(frozen=True)
class Derivation:
    """Every intermediate polynomial of one symbolic pipeline run."""

    p: int
    m: int
    H: Polynomial
    E: Polynomial
    Z: Polynomial
    C: Polynomial
    J: Polynomial


@dataclass(frozen=True)
class LandenMap:
    p: int
    m: int
    den_formulas: Tuple[MultiPoly, ...]
    num_formulas: Tuple[MultiPoly, ...]
    scale: Fraction

    @property
    def arity(self) -> int:
        return 2 * self.p

    def term_counts(self) -> Dict[str, int]:
        counts = {f"h{i}": len(f) for i, f in enumerate(self.den_formulas)}
        counts.update({f"d{i}": len(f) for i, f in enumerate(self.num_formulas)})
        return counts

    def formulas(self):
        yield from ((f"h{i}", f) for i, f in enumerate(self.den_formulas))
        yield from ((f"d{i}", f) for i, f in enumerate(self.num_formulas))


def _check_params(p: int, m: int) -> None:
    if p % 2:
        raise OddDegree(f"degree p must be even, got {p}")
    if p < 2:
        raise OddDegree(f"degree p must be >= 2, got {p}")
    if m < 2:
        raise InvalidOrder(f"order m must be >= 2, got {m}")


def _guard(poly: Polynomial, max_terms: int, stage: str) -> None:
    total = sum(len(c) for c in poly.coeffs if isinstance(c, MultiPoly))
    if total > max_terms:
        raise ResourceLimit(f"{stage} has {total} terms, above the limit of {max_terms}")


def derive(p: int, m: int, max_terms: int = DEFAULT_MAX_TERMS) -> Derivation:
    """Run steps 1-7 over the multivariate integer ring."""
    _check_params(p, m)
    n = 2 * p
    a = [MultiPoly.variable(n, i) for i in range(p + 1)]
    b = [MultiPoly.variable(n, p + 1 + i) for i in range(p - 1)]
    A, B = Polynomial(a), Polynomial(b)
    dims = PipelineDims(p, m)

    H = step1_H(A, m)
    _guard(H, max_terms, "H")
    E = step2_E(H, cotangent.build(m), dims)
    _guard(E, max_terms, "E")
    Z = step3_Z(E, A)
    C = step4_C(B, Z)
    _guard(C, max_terms, "C")
    J = step7_J(C.coeff_vector(dims.s + 1), dims)
    return Derivation(p, m, H, E, Z, C, J)


def generate(p: int, m: int, max_terms: int = DEFAULT_MAX_TERMS) -> LandenMap:
    d = derive(p, m, max_terms)
    zero = MultiPoly(2 * p)
    hs = [c if isinstance(c, MultiPoly) else zero + c for c in d.H.coeff_vector(p + 1)]
    ds = [c if isinstance(c, MultiPoly) else zero + c for c in d.J.coeff_vector(p - 1)]
    contents = [f.content() for f in hs + ds if not f.is_zero()]
    num = math.gcd(*(c.numerator for c in contents))
    den = math.lcm(*(c.denominator for c in contents))
    scale = Fraction(num, den) if num else Fraction(1)
    inv = 1 / scale
    return LandenMap(
        p, m, tuple(f * inv for f in hs), tuple(f * inv for f in ds), scale
    )


def apply(lmap: LandenMap, coeffs: Sequence) -> list:
    """Evaluate every formula at (a_0..a_p, b_0..b_{p-2}).

    Returns (h_0..h_p, d_0..d_{p-2}) in the same layout as the input.
    """
    if len(coeffs) != lmap.arity:
        raise ArityMismatch(f"map for p={lmap.p} takes {lmap.arity} coefficients, got {len(coeffs)}")
    values = list(coeffs)
    out = []
    for _, f in lmap.formulas():
        v = f.evaluate(values)
        out.append(v * lmap.scale if lmap.scale != 1 else v)
    return out


# persistence ------------------------------------------------------------------


def _format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dump(lmap: LandenMap, sink) -> None:
    sink.write(f"landen-map v{FORMAT_VERSION} p={lmap.p} m={lmap.m}\n")
    sink.write(f"scale {_format_rational(lmap.scale)}\n")
    for name, f in lmap.formulas():
        terms = " ".join(
            f"{c}:{','.join(map(str, e))}" for e, c in f.sorted_terms()
        )
        sink.write(f"{name} {len(f)}" + (f" {terms}" if terms else "") + "\n")


def dumps(lmap: LandenMap) -> str:
    buf = io.StringIO()
    dump(lmap, buf)
    return buf.getvalue()


def save(lmap: LandenMap, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        dump(lmap, fh)
    os.replace(tmp, path)
    return path


def _parse_header(line: str) -> Tuple[int, int]:
    parts = line.split()
    if len(parts) != 4 or parts[0] != "landen-map":
        raise FormatError(f"bad header line: {line!r}")
    if parts[1] != f"v{FORMAT_VERSION}":
        raise VersionMismatch(f"unsupported cache version {parts[1]!r}")
    try:
        kv = dict(item.split("=", 1) for item in parts[2:])
        return int(kv["p"]), int(kv["m"])
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad header line: {line!r}") from exc


def loads(text: str) -> LandenMap:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty cache file")
    p, m = _parse_header(lines[0])
    n = 2 * p
    if len(lines) < 2 or not lines[1].startswith("scale "):
        raise FormatError("missing scale line")
    try:
        scale = Fraction(lines[1].split(None, 1)[1])
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad scale: {lines[1]!r}") from exc
    expected = [f"h{i}" for i in range(p + 1)] + [f"d{i}" for i in range(p - 1)]
    body = lines[2:]
    if len(body) != len(expected):
        raise FormatError(f"expected {len(expected)} formula lines, found {len(body)}")
    formulas = []
    for want, line in zip(expected, body):
        fields = line.split()
        if len(fields) < 2 or fields[0] != want:
            raise FormatError(f"expected formula {want}, got {line[:40]!r}")
        try:
            count = int(fields[1])
            terms = {}
            for item in fields[2:]:
                coef, exps = item.split(":")
                e = tuple(int(x) for x in exps.split(","))
                if len(e) != n:
                    raise FormatError(f"exponent arity {len(e)} != {n} in {want}")
                terms[e] = int(coef)
        except ValueError as exc:
            raise FormatError(f"malformed term in {want}") from exc
        if count != len(fields) - 2 or len(terms) != count:
            raise FormatError(f"{want}: term count {count} does not match the line")
        formulas.append(MultiPoly(n, terms))
    return LandenMap(p, m, tuple(formulas[: p + 1]), tuple(formulas[p + 1:]), scale)


def load(source) -> LandenMap:
    if hasattr(source, "read"):
        return loads(source.read())
    return loads(Path(source).read_text(encoding="utf-8"))


def cache_path(cache_dir, p: int, m: int) -> Path:
    return Path(cache_dir) / f"landen_p{p}_m{m}.txt"


def load_or_generate(cache_dir, p: int, m: int, max_terms: int = DEFAULT_MAX_TERMS):
    """Return (map, cache_hit)."""
    path = cache_path(cache_dir, p, m)
    if path.exists():
        return load(path), True
    lmap = generate(p, m, max_terms)
    save(lmap, path)
    return lmap, False
