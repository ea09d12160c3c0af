"""The rational Landen transformation of order m on degree-p integrands.

Given F = B/A with deg A = p even and deg B <= p - 2, :func:`transform`
builds a new rational function J/H of the same shape and the same integral
over the real line:

1. H(x) = Res_z(A(z), P_m(z) - x Q_m(z))
2. E(x) = sum_i h_i P_m(x)^(p-i) Q_m(x)^i
3. Z = E / A (exact)
4. C = B Z
5-7. J from the coefficients of C through alternating binomial sums T_x(a, b)

The step functions are ring generic so :mod:`ratlanden.symbolic` can run the
same pipeline on indeterminate coefficients.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

import mpmath

from . import cotangent
from .cotangent import CotangentPair
from .errors import (
    DegreeGap,
    OddDegree,
    RealPole,
    ValidationError,
    ZeroTrailingCoeff,
)
from .scalars import to_bigfloat, to_fraction
from .upoly import Polynomial, div_exact, resultant_pencil, sturm_real_root_count


@dataclass(frozen=True)
class RationalFunction:
    """F(x) = numerator(x) / denominator(x)."""

    numerator: Polynomial
    denominator: Polynomial

    @classmethod
    def from_lists(cls, num: Sequence, den: Sequence) -> "RationalFunction":
        """Build from descending coefficient lists of ints, strings or rationals."""
        conv = lambda c: c if isinstance(c, mpmath.mpf) else to_fraction(c)
        return cls(Polynomial(map(conv, num)), Polynomial(map(conv, den)))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, p: int) -> "RationalFunction":
        """Inverse of :meth:`coeffs`: (a_0..a_p, b_0..b_{p-2})."""
        if len(coeffs) != 2 * p:
            raise ValueError(f"expected {2 * p} coefficients for p={p}, got {len(coeffs)}")
        return cls(Polynomial(coeffs[p + 1:]), Polynomial(coeffs[: p + 1]))

    @property
    def p(self) -> int:
        return self.denominator.degree

    def coeffs(self) -> list:
        """The coefficient-space vector (a_0, ..., a_p, b_0, ..., b_{p-2})."""
        p = self.p
        return self.denominator.coeff_vector(p + 1) + self.numerator.coeff_vector(p - 1)

    def is_exact(self) -> bool:
        return all(isinstance(c, numbers.Rational) for c in self.coeffs())

    def map(self, fn) -> "RationalFunction":
        return RationalFunction(self.numerator.map(fn), self.denominator.map(fn))

    def to_bigfloat(self) -> "RationalFunction":
        return self.map(to_bigfloat)

    def __call__(self, x):
        return self.numerator(x) / self.denominator(x)

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"


@dataclass(frozen=True)
class PipelineDims:
    p: int
    m: int

    @property
    def r(self) -> int:
        return self.p * (self.m - 1)

    @property
    def s(self) -> int:
        return self.m * self.p - 2

    @property
    def nu(self) -> int:
        return self.p // 2

    @property
    def lam(self) -> int:
        return (self.m * self.p - 2) // 2


def validate(F: RationalFunction, exact: bool | None = None) -> RationalFunction:
    """Check that F has a finite integral over the real line.

    The real-root check (Sturm) needs exact coefficients; with floating
    coefficients only the structural conditions are checked.
    """
    A, B = F.denominator, F.numerator
    if A.is_zero():
        raise ValidationError("denominator is zero")
    p = A.degree
    if p % 2:
        raise OddDegree(f"denominator degree {p} is odd")
    if p < 2:
        raise ValidationError(f"denominator degree must be >= 2, got {p}")
    if not B.is_zero() and B.degree > p - 2:
        raise DegreeGap(f"numerator degree {B.degree} exceeds p - 2 = {p - 2}")
    if A.trailing == 0:
        raise ZeroTrailingCoeff("the constant coefficient of the denominator is zero")
    if exact is None:
        exact = F.is_exact()
    if exact:
        n_real = sturm_real_root_count(A)
        if n_real:
            raise RealPole(f"denominator has {n_real} real root(s)")
    return F


# steps 1-4 --------------------------------------------------------------------


def step1_H(A: Polynomial, m: int) -> Polynomial:
    pair = cotangent.build(m)
    return resultant_pencil(A, pair.P, pair.Q)


def step2_E(H: Polynomial, pair: CotangentPair, dims: PipelineDims) -> Polynomial:
    p = dims.p
    h = H.coeff_vector(p + 1)
    p_pows = [Polynomial([1])]
    q_pows = [Polynomial([1])]
    for _ in range(p):
        p_pows.append(p_pows[-1] * pair.P)
        q_pows.append(q_pows[-1] * pair.Q)
    E = Polynomial()
    for i, hi in enumerate(h):
        if hi == 0:
            continue
        E = E + (p_pows[p - i] * q_pows[i]).scale(hi)
    return E


def step3_Z(E: Polynomial, A: Polynomial) -> Polynomial:
    return div_exact(E, A)


def step4_C(B: Polynomial, Z: Polynomial) -> Polynomial:
    return B * Z


# steps 5-7 --------------------------------------------------------------------


def _binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def T(x: int, a: int, b: int) -> int:
    """sum_{j=0}^{x} (-1)^(a-x+j) C(a, x-j) C(b, j); zero for x < 0.

    Equivalently the coefficient of t^x in (t - 1)^a (1 + t)^b.
    """
    total = 0
    for j in range(x + 1):
        term = _binom(a, x - j) * _binom(b, j)
        if term:
            total += -term if (a - x + j) % 2 else term
    return total


def _m1_weight(j: int, alpha: int, beta: int, gamma: int, dims: PipelineDims) -> Fraction:
    if not (alpha >= 1 and 0 <= beta <= alpha):
        raise ValueError(f"M1 needs alpha >= 1 and 0 <= beta <= alpha, got {alpha}, {beta}")
    s, lam, nu, m = dims.s, dims.lam, dims.nu, dims.m
    a, b = 2 * j, s - 2 * j
    w = Fraction(4 ** (alpha - beta) * alpha, 2 * alpha - beta)
    w *= _binom(2 * alpha - beta, beta) * _binom(nu - alpha - 1 + beta, gamma)
    w *= T(lam + alpha * m, a, b) + T(lam - alpha * m, a, b)
    return -w if (j + alpha - beta) % 2 else w


def _m2_weight(j: int, alpha: int, beta: int, gamma: int, dims: PipelineDims) -> int:
    if not (alpha >= 1 and 0 <= beta <= alpha - 1):
        raise ValueError(f"M2 needs 0 <= beta < alpha, got alpha={alpha}, beta={beta}")
    s, lam, nu, m = dims.s, dims.lam, dims.nu, dims.m
    a, b = 2 * j + 1, s - 2 * j - 1
    w = 2 ** (2 * beta + 1) * _binom(alpha + beta, 2 * beta + 1) * _binom(nu - 2 - beta, gamma)
    w *= T(lam + alpha * m, a, b) - T(lam - alpha * m, a, b)
    return -w if (j + beta) % 2 else w


def M1(j, alpha, beta, gamma, dims: PipelineDims, c: Sequence):
    return c[2 * j] * _m1_weight(j, alpha, beta, gamma, dims)


def M2(j, alpha, beta, gamma, dims: PipelineDims, c: Sequence):
    return c[2 * j + 1] * _m2_weight(j, alpha, beta, gamma, dims)


@lru_cache(maxsize=None)
def numerator_weights(p: int, m: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Matrix W with J's x^e coefficient = sum_k W[e][k] c_k.

    Row e runs over powers 0..p-2 (ascending), column k over c_0..c_s.
    """
    dims = PipelineDims(p, m)
    s, lam, nu = dims.s, dims.lam, dims.nu
    W = [[Fraction(0)] * (s + 1) for _ in range(p - 1)]

    for gamma in range(nu):
        for j in range(lam + 1):
            W[2 * gamma][2 * j] += _binom(nu - 1, gamma) * (-1) ** j * T(lam, 2 * j, s - 2 * j)
    for gamma in range(nu - 1):
        for j in range(lam + 1):
            for alpha in range(1, nu - gamma):
                for beta in range(alpha + 1):
                    W[2 * gamma][2 * j] += _m1_weight(j, alpha, beta, gamma, dims)
    for gamma in range(1, nu):
        for j in range(lam + 1):
            for alpha in range(nu - gamma, nu):
                for beta in range(alpha - nu + gamma + 1, alpha + 1):
                    W[2 * gamma][2 * j] += _m1_weight(j, alpha, beta, gamma, dims)
    for gamma in range(nu - 1):
        for j in range(lam):
            for alpha in range(1, nu - gamma):
                for beta in range(alpha):
                    W[2 * gamma + 1][2 * j + 1] += _m2_weight(j, alpha, beta, gamma, dims)
    for gamma in range(1, nu - 1):
        for j in range(lam):
            for alpha in range(nu - gamma, nu):
                for beta in range(alpha):
                    W[2 * gamma + 1][2 * j + 1] += _m2_weight(j, alpha, beta, gamma, dims)

    scale = Fraction(1, 2 ** s)
    return tuple(tuple(w * scale for w in row) for row in W)


def step7_J(c: Sequence, dims: PipelineDims) -> Polynomial:
    """Numerator J of degree <= p - 2 from the s + 1 coefficients of C."""
    if len(c) != dims.s + 1:
        raise ValueError(f"expected {dims.s + 1} coefficients of C, got {len(c)}")
    W = numerator_weights(dims.p, dims.m)
    ascending = []
    for row in W:
        acc = 0
        for w, ck in zip(row, c):
            if w and ck != 0:
                acc = acc + ck * w
        ascending.append(acc)
    return Polynomial(ascending[::-1])


# full transform ---------------------------------------------------------------


def transform_raw(F: RationalFunction, m: int) -> RationalFunction:
    """Steps 1-8 without any normalisation of the result."""
    dims = PipelineDims(F.p, m)
    pair = cotangent.build(m)
    A, B = F.denominator, F.numerator
    H = step1_H(A, m)
    E = step2_E(H, pair, dims)
    Z = step3_Z(E, A)
    C = step4_C(B, Z)
    J = step7_J(C.coeff_vector(dims.s + 1), dims)
    return RationalFunction(J, H)


def normalize(F: RationalFunction, how: str = "auto") -> RationalFunction:
    """Rescale numerator and denominator by a common factor.

    ``gcd``   divide by the signed rational content of all coefficients
              (exact mode only), leaving coprime integers with a positive
              leading denominator coefficient;
    ``monic`` make the denominator monic;
    ``auto``  monic for p = 2 or floating coefficients, gcd otherwise;
    ``none``  leave F unchanged.
    """
    if how == "none":
        return F
    exact = F.is_exact()
    if how == "auto":
        how = "monic" if (F.p == 2 or not exact) else "gcd"
    if how == "monic":
        lead = F.denominator.lc
        return RationalFunction(
            F.numerator.map(lambda c: c / lead), F.denominator.map(lambda c: c / lead)
        )
    if how == "gcd":
        if not exact:
            raise ValueError("gcd normalisation needs exact coefficients")
        fr = [Fraction(c) for c in F.coeffs() if c != 0]
        g = Fraction(math.gcd(*(c.numerator for c in fr)), math.lcm(*(c.denominator for c in fr)))
        if F.denominator.lc < 0:
            g = -g
        return RationalFunction(F.numerator.map(lambda c: c / g), F.denominator.map(lambda c: c / g))
    raise ValueError(f"unknown normalisation {how!r}")


def transform(F: RationalFunction, m: int, normalize_how: str = "auto") -> RationalFunction:
    """One Landen step of order m, followed by :func:`normalize`."""
    return normalize(transform_raw(F, m), normalize_how)


# degree-2 closed form ---------------------------------------------------------


def quadratic_map(state):
    """Order-2 map on (a0, a1, a2, b0) for b0 / (a0 + a1 x + a2 x^2).

    Note the constant-first ordering, unlike the rest of the package.
    """
    a0, a1, a2, b0 = state
    return (
        (a0 - a1 + a2) * (a0 + a1 + a2),
        2 * a1 * (a0 - a2),
        4 * a0 * a2,
        2 * b0 * (a0 + a2),
    )


def to_quadratic_state(F: RationalFunction):
    if F.p != 2:
        raise ValueError("the quadratic state needs p = 2")
    a2, a1, a0 = F.denominator.coeff_vector(3)
    (b0,) = F.numerator.coeff_vector(1)
    return (a0, a1, a2, b0)


def from_quadratic_state(state) -> RationalFunction:
    a0, a1, a2, b0 = state
    return RationalFunction(Polynomial([b0]), Polynomial([a2, a1, a0]))
