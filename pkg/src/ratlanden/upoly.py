"""Dense univariate polynomials over an arbitrary commutative ring.

Coefficients are stored in descending order, ``coeffs[0]`` being the leading
one, to match the ``a_0 x^p + ... + a_p`` indexing used throughout the
package. Any coefficient type with ``+``, ``-`` and ``*`` works (ints,
Fractions, mpmath floats, :class:`ratlanden.multipoly.MultiPoly`); division
based operations additionally need an exact or field ``/``.
"""

from __future__ import annotations

import math
import numbers
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence

import mpmath

from .errors import NonZeroRemainder

NEG_INF = -math.inf


def _is_zero(c) -> bool:
    return c == 0


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        coeffs = list(coeffs)
        start = 0
        while start < len(coeffs) and _is_zero(coeffs[start]):
            start += 1
        self.coeffs = tuple(coeffs[start:])

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Polynomial":
        return cls([c] + [0] * degree)

    @classmethod
    def from_ascending(cls, coeffs: Iterable) -> "Polynomial":
        return cls(list(coeffs)[::-1])

    @property
    def degree(self):
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[0] if self.coeffs else 0

    @property
    def trailing(self):
        """The constant coefficient, i.e. the value at zero."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff_vector(self, length: int) -> list:
        """Descending coefficients left-padded with zeros to ``length``."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} coefficients")
        return [0] * (length - len(self.coeffs)) + list(self.coeffs)

    def ascending(self) -> list:
        return list(reversed(self.coeffs))

    def map(self, fn) -> "Polynomial":
        return Polynomial(fn(c) for c in self.coeffs)

    # ring operations -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        shift = len(a) - len(b)
        out = list(a[:shift]) + [x + y for x, y in zip(a[shift:], b)]
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if _is_zero(x):
                continue
            for j, y in enumerate(other.coeffs):
                if _is_zero(y):
                    continue
                out[i + j] = out[i + j] + x * y
        return Polynomial(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        return Polynomial(x * c for x in self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, numbers.Number):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        return evaluate(self, x)

    def derivative(self) -> "Polynomial":
        d = len(self.coeffs) - 1
        return Polynomial(c * (d - i) for i, c in enumerate(self.coeffs[:-1]))

    def compose(self, other: "Polynomial") -> "Polynomial":
        result = Polynomial()
        for c in self.coeffs:
            result = result * other + c
        return result

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        d = len(self.coeffs) - 1
        parts = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            e = d - i
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if e == 0:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def add(p: Polynomial, q) -> Polynomial:
    return p + q


def sub(p: Polynomial, q) -> Polynomial:
    return p - q


def mul(p: Polynomial, q) -> Polynomial:
    return p * q


def scale(p: Polynomial, c) -> Polynomial:
    return p.scale(c)


def evaluate(p: Polynomial, x):
    """Horner evaluation; evaluating at 0 returns the trailing coefficient."""
    acc = 0
    for c in p.coeffs:
        acc = acc * x + c
    return acc


# division ---------------------------------------------------------------------


def divmod_poly(num: Polynomial, den: Polynomial):
    """Long division ``num = den * q + r`` with ``deg r < deg den``.

    Requires ``/`` on the coefficients to divide the running leading term
    by ``lc(den)`` (field division, or exact division in the ring).
    """
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    dd = len(den.coeffs)
    lead = den.coeffs[0]
    nq = len(rem) - dd + 1
    if nq <= 0:
        return Polynomial(), num
    quot = []
    for i in range(nq):
        c = rem[i]
        if _is_zero(c):
            quot.append(0)
            continue
        q = c / lead
        quot.append(q)
        rem[i] = 0
        for j in range(1, dd):
            if not _is_zero(den.coeffs[j]):
                rem[i + j] = rem[i + j] - q * den.coeffs[j]
    return Polynomial(quot), Polynomial(rem[nq:])


def div_exact(num: Polynomial, den: Polynomial, rel_tol=None) -> Polynomial:
    """Quotient of an exact division.

    With exact coefficients any remainder raises :class:`NonZeroRemainder`.
    Floating coefficients carry rounding noise, so for them the remainder is
    accepted when it is below ``rel_tol`` (default ``10**(-dps/2)``) relative
    to the largest coefficient of ``num``.
    """
    q, r = divmod_poly(num, den)
    if r.is_zero():
        return q
    if all(isinstance(c, mpmath.mpf) for c in r.coeffs):
        if rel_tol is None:
            rel_tol = mpmath.mpf(10) ** (-(mpmath.mp.dps // 2))
        size = max(abs(c) for c in num.coeffs)
        if max(abs(c) for c in r.coeffs) <= rel_tol * size:
            return q
    raise NonZeroRemainder(f"remainder {r} after dividing by {den}")


def monic(p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    lead = p.lc
    return Polynomial(c / lead for c in p.coeffs)


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd over a field (Euclid)."""
    p = p.map(Fraction) if _all_rational(p) else p
    q = q.map(Fraction) if _all_rational(q) else q
    while not q.is_zero():
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def _all_rational(p: Polynomial) -> bool:
    return all(isinstance(c, numbers.Rational) for c in p.coeffs)


# resultants -------------------------------------------------------------------


def sylvester_matrix(alpha: Polynomial, beta: Polynomial) -> List[list]:
    """Square Sylvester matrix of size ``deg alpha + deg beta``.

    The first ``deg beta`` rows hold shifted copies of alpha's coefficients,
    the remaining ``deg alpha`` rows shifted copies of beta's.
    """
    if alpha.is_zero() or beta.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    da, db = alpha.degree, beta.degree
    n = da + db
    rows = []
    for i in range(db):
        rows.append([0] * i + list(alpha.coeffs) + [0] * (n - da - 1 - i))
    for i in range(da):
        rows.append([0] * i + list(beta.coeffs) + [0] * (n - db - 1 - i))
    return rows


def determinant(rows: Sequence[Sequence]):
    """Determinant over the ring of the entries.

    Integer/rational matrices use fraction-free Bareiss elimination, floating
    matrices partial-pivot Gaussian elimination, and anything else (e.g.
    multivariate polynomial entries) a division-free Laplace expansion with
    memoised minors.
    """
    n = len(rows)
    if n == 0:
        return 1
    entries = [c for row in rows for c in row]
    if all(isinstance(c, numbers.Rational) for c in entries):
        return _det_rational(rows)
    if all(isinstance(c, (numbers.Rational, mpmath.mpf)) for c in entries):
        return _det_float(rows)
    return _det_laplace(rows)


def _det_rational(rows):
    scale = Fraction(1)
    int_rows = []
    for row in rows:
        den = math.lcm(*(Fraction(c).denominator for c in row))
        int_rows.append([int(Fraction(c) * den) for c in row])
        scale /= den
    return _bareiss(int_rows) * scale


def _bareiss(m: List[List[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            a = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - a * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _det_float(rows):
    m = [[mpmath.mpf(c) if not isinstance(c, Fraction) else mpmath.mpf(c.numerator) / c.denominator
          for c in row] for row in rows]
    n = len(m)
    det = mpmath.mpf(1)
    for k in range(n):
        piv = max(range(k, n), key=lambda i: abs(m[i][k]))
        if m[piv][k] == 0:
            return mpmath.mpf(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k + 1, n):
                    m[i][j] -= f * m[k][j]
    return det


def _det_laplace(rows):
    n = len(rows)

    @lru_cache(maxsize=None)
    def minor(r: int, mask: int):
        if r == n:
            return 1
        total = 0
        pos = 0
        for col in range(n):
            if not mask >> col & 1:
                continue
            entry = rows[r][col]
            if not _is_zero(entry):
                term = entry * minor(r + 1, mask & ~(1 << col))
                total = total + term if pos % 2 == 0 else total - term
            pos += 1
        return total

    result = minor(0, (1 << n) - 1)
    minor.cache_clear()
    return result


def resultant(alpha: Polynomial, beta: Polynomial):
    """Res(alpha, beta) = lc(alpha)^deg(beta) * prod beta(root_i of alpha)."""
    return determinant(sylvester_matrix(alpha, beta))


def interpolation_points(count: int) -> list:
    """The nodes 0, 1, -1, 2, -2, ... used for evaluation/interpolation."""
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts


@lru_cache(maxsize=64)
def _lagrange_basis(xs: tuple) -> tuple:
    basis = []
    for i, xi in enumerate(xs):
        poly = Polynomial([Fraction(1)])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if i != j:
                poly = poly * Polynomial([1, -xj])
                denom *= xi - xj
        basis.append(tuple(c / denom for c in poly.coeffs))
    return tuple(basis)


def interpolate(xs: Sequence[int], values: Sequence) -> Polynomial:
    """Polynomial of degree < len(xs) through (xs[i], values[i]).

    Node values may come from any ring that can be multiplied by Fractions.
    """
    basis = _lagrange_basis(tuple(xs))
    n = len(xs)
    out = [0] * n
    for v, b in zip(values, basis):
        if _is_zero(v):
            continue
        for k, w in enumerate(b):
            if w:
                out[k] = out[k] + v * w
    return Polynomial(out)


def resultant_pencil(alpha: Polynomial, u: Polynomial, v: Polynomial) -> Polynomial:
    """Res_z(alpha(z), u(z) - x v(z)) as a polynomial in x.

    Requires ``deg u > deg v`` so that the degree in x is at most
    ``deg alpha``. Evaluated at ``deg alpha + 1`` integer nodes, each a
    scalar Sylvester determinant, then interpolated.
    """
    if not u.degree > v.degree:
        raise ValueError("the pencil needs deg u > deg v")
    xs = interpolation_points(alpha.degree + 1)
    values = [resultant(alpha, u - v.scale(x)) for x in xs]
    return interpolate(xs, values)


# real roots -------------------------------------------------------------------


def _primitive(p: Polynomial) -> Polynomial:
    """Positive rescaling to coprime integers (keeps Sturm signs intact)."""
    fr = [Fraction(c) for c in p.coeffs]
    den = math.lcm(*(c.denominator for c in fr))
    ints = [int(c * den) for c in fr]
    g = math.gcd(*ints)
    return Polynomial(c // g for c in ints)


def sturm_sequence(p: Polynomial) -> List[Polynomial]:
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [_primitive(p)]
    if p.degree >= 1:
        seq.append(_primitive(p.derivative()))
    while len(seq) > 1 and seq[-1].degree > 0:
        r = divmod_poly(seq[-2].map(Fraction), seq[-1].map(Fraction))[1]
        if r.is_zero():
            break
        seq.append(_primitive(-r))
    return seq


def _sign_changes(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_real_root_count(p: Polynomial) -> int:
    """Number of distinct real roots of a rational polynomial."""
    seq = sturm_sequence(p)
    at_pos = [_sign(q.lc) for q in seq]
    at_neg = [_sign(q.lc) * (-1) ** q.degree for q in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def sturm_count_interval(p: Polynomial, a, b) -> int:
    """Distinct real roots in the half-open interval (a, b]."""
    seq = sturm_sequence(p)
    va = _sign_changes(_sign(q(Fraction(a))) for q in seq)
    vb = _sign_changes(_sign(q(Fraction(b))) for q in seq)
    return va - vb
