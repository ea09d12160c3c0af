"""Baseline quadrature and independent integral oracles.

* :func:`fold` maps an integral over the real line to one over [0, 1] via
  t = x / (1 + x) on each half line.
* :func:`trapezoid` is the composite trapezoidal rule on the folded integrand.
* :func:`oracle_integral` integrates the folded integrand with adaptive
  Gauss-Legendre panels at a chosen decimal precision.
* :func:`residue_integral` sums residues in the upper half plane; it is
  cheap at hundreds of digits and serves as the reference for deep tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

import mpmath

from .errors import NoConvergence, RealPole
from .landen import RationalFunction
from .scalars import precision, to_bigfloat, to_fraction
from .upoly import Polynomial, divmod_poly, gcd


class NotSquarefree(ValueError):
    """Residue summation here assumes simple poles."""


@dataclass(frozen=True)
class FoldedIntegrand:
    """g(t) = numerator(t) / denominator(t) on [0, 1]."""

    numerator: Polynomial
    denominator: Polynomial

    def __call__(self, t):
        return self.numerator(t) / self.denominator(t)

    def evaluator(self):
        """A fast callable for mpf arguments at the current precision."""
        num = [to_bigfloat(c) for c in self.numerator.coeffs]
        den = [to_bigfloat(c) for c in self.denominator.coeffs]

        def g(t):
            a = mpmath.mpf(0)
            for c in num:
                a = a * t + c
            b = mpmath.mpf(0)
            for c in den:
                b = b * t + c
            return a / b

        return g


def _half_line(P: Polynomial, deg: int, sign: int) -> Polynomial:
    """(1 - t)^deg * P(sign * t / (1 - t)) as a polynomial in t."""
    d = P.degree
    one_minus_t = Polynomial([-1, 1])
    t = Polynomial([sign, 0])
    out = Polynomial()
    for k, c in enumerate(P.coeffs):
        out = out + (t ** (d - k)) * (one_minus_t ** (deg - d + k)) * c
    return out


def _primitive_pair(num: Polynomial, den: Polynomial) -> Tuple[Polynomial, Polynomial]:
    coeffs = [Fraction(c) for c in num.coeffs + den.coeffs]
    lcm = math.lcm(*(c.denominator for c in coeffs))
    g = math.gcd(*(int(c * lcm) for c in coeffs))
    factor = Fraction(lcm, g)
    if den.lc < 0:
        factor = -factor
    return num.map(lambda c: Fraction(c) * factor), den.map(lambda c: Fraction(c) * factor)


def fold(F: RationalFunction) -> FoldedIntegrand:
    """Exact rational g on [0, 1] with the same integral as F on the line."""
    p = F.p
    A = F.denominator.map(to_fraction)
    B = F.numerator.map(to_fraction)
    a_pos, a_neg = _half_line(A, p, 1), _half_line(A, p, -1)
    if B.is_zero():
        return FoldedIntegrand(Polynomial(), Polynomial([1]))
    b_pos, b_neg = _half_line(B, p - 2, 1), _half_line(B, p - 2, -1)
    num = b_pos * a_neg + b_neg * a_pos
    den = a_pos * a_neg
    if num.is_zero():
        return FoldedIntegrand(Polynomial(), Polynomial([1]))
    common = gcd(num, den)
    if common.degree > 0:
        num = divmod_poly(num, common)[0]
        den = divmod_poly(den, common)[0]
    return FoldedIntegrand(*_primitive_pair(num, den))


TRAPEZOID_RULES = ("standard", "skip-last")


def trapezoid(g: FoldedIntegrand, n: int, digits: int | None = None, rule: str = "standard"):
    """Composite trapezoidal rule with n uniform panels on [0, 1].

    ``rule="skip-last"`` drops the interior node i = n - 1, i.e. sums
    g_1..g_{n-2} with weight h and the end points with weight h/2. This is
    the variant that reproduces the published baseline numbers for the
    quartic example; ``standard`` is the usual rule.
    """
    if n < 1:
        raise ValueError("need at least one panel")
    if rule not in TRAPEZOID_RULES:
        raise ValueError(f"unknown rule {rule!r}; choose from {TRAPEZOID_RULES}")
    with precision(digits or mpmath.mp.dps):
        f = g.evaluator()
        h = mpmath.mpf(1) / n
        last = n - 1 if rule == "standard" else n - 2
        interior = mpmath.fsum(f(i * h) for i in range(1, last + 1))
        return +(h * ((f(mpmath.mpf(0)) + f(mpmath.mpf(1))) / 2 + interior))


def quadratic_closed_form(a2, a1, a0):
    """Integral of 1 / (a2 x^2 + a1 x + a0) over the real line."""
    a2, a1, a0 = to_fraction(a2), to_fraction(a1), to_fraction(a0)
    disc = 4 * a0 * a2 - a1 * a1
    if a2 <= 0 or disc <= 0:
        raise RealPole(f"a2 x^2 + a1 x + a0 = ({a2}, {a1}, {a0}) is not positive definite")
    return 2 * mpmath.pi / mpmath.sqrt(to_bigfloat(disc))


# Gauss-Legendre ---------------------------------------------------------------


@lru_cache(maxsize=32)
def gauss_legendre(k: int, digits: int) -> Tuple[tuple, tuple]:
    """Nodes and weights of the k-point rule on [-1, 1] to ``digits`` digits."""
    nodes: List = []
    weights: List = []
    with precision(digits + 15):
        eps = mpmath.mpf(10) ** (-(digits + 10))
        for i in range(1, k // 2 + 1):
            x = mpmath.cos(mpmath.pi * (i - mpmath.mpf(1) / 4) / (k + mpmath.mpf(1) / 2))
            for _ in range(100):
                p0, p1 = mpmath.mpf(1), x
                for j in range(2, k + 1):
                    p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
                dp = k * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) < eps:
                    break
            p0, p1 = mpmath.mpf(1), x
            for j in range(2, k + 1):
                p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
            dp = k * (x * p1 - p0) / (x * x - 1)
            w = 2 / ((1 - x * x) * dp * dp)
            nodes += [-x, x]
            weights += [w, w]
        if k % 2:
            p0, p1 = mpmath.mpf(1), mpmath.mpf(0)
            for j in range(2, k + 1):
                p0, p1 = p1, (-(j - 1) * p0) / j
            # P_k'(0) = k * P_{k-1}(0)
            dp = k * p0
            nodes.append(mpmath.mpf(0))
            weights.append(2 / (dp * dp))
        order = sorted(range(len(nodes)), key=lambda i: nodes[i])
        return tuple(nodes[i] for i in order), tuple(weights[i] for i in order)


@dataclass(frozen=True)
class OracleResult:
    value: object
    digits: int
    panels: int

    def __float__(self):
        return float(self.value)


def _gl_panel(f, a, b, nodes, weights):
    half = (b - a) / 2
    mid = (a + b) / 2
    return half * mpmath.fsum(w * f(mid + half * x) for x, w in zip(nodes, weights))


def integrate_interval(f, digits: int = 40, k: int | None = None, max_depth: int = 40) -> OracleResult:
    """Adaptive Gauss-Legendre on [0, 1] to about ``digits - 10`` digits.

    A panel is accepted when the k-point estimate and the sum over its two
    halves agree; ``digits`` of the result reports the agreement achieved.
    """
    target = max(digits - 10, 1)
    k = k or max(12, digits // 2)
    with precision(digits + 10):
        nodes, weights = gauss_legendre(k, digits + 10)
        zero, one = mpmath.mpf(0), mpmath.mpf(1)
        initial = [(zero + one * i / 8, zero + one * (i + 1) / 8) for i in range(8)]
        estimates = [_gl_panel(f, a, b, nodes, weights) for a, b in initial]
        scale = mpmath.fsum(abs(e) for e in estimates) or one
        abs_tol = scale * mpmath.mpf(10) ** (-target)
        stack = [(a, b, e, 0) for (a, b), e in zip(initial, estimates)]
        total, err, panels = [], [], 0
        while stack:
            a, b, whole, depth = stack.pop()
            mid = (a + b) / 2
            left = _gl_panel(f, a, mid, nodes, weights)
            right = _gl_panel(f, mid, b, nodes, weights)
            diff = abs(left + right - whole)
            if diff <= abs_tol * (b - a):
                total.append(left + right)
                err.append(diff)
                panels += 1
            elif depth >= max_depth:
                raise NoConvergence(f"panel [{a}, {b}] did not converge after {depth} bisections")
            else:
                stack.append((a, mid, left, depth + 1))
                stack.append((mid, b, right, depth + 1))
        value = mpmath.fsum(total)
        err_sum = mpmath.fsum(err)
        if err_sum == 0:
            agreed = digits + 10
        else:
            agreed = int(mpmath.floor(-mpmath.log10(err_sum / scale)))
        return OracleResult(+value, min(agreed, digits + 10), panels)


def oracle_integral(F: RationalFunction, digits: int = 40, k: int | None = None) -> OracleResult:
    """Integral of F over the real line by folding and adaptive quadrature."""
    g = fold(F)
    with precision(digits + 10):
        return integrate_interval(g.evaluator(), digits, k)


def residue_integral(F: RationalFunction, digits: int = 40):
    """Integral of F by residues at the (simple) poles in the upper half plane."""
    A = F.denominator.map(to_fraction)
    B = F.numerator.map(to_fraction)
    if gcd(A, A.derivative()).degree > 0:
        raise NotSquarefree("residue_integral needs a squarefree denominator")
    with precision(digits + 20):
        coeffs = [to_bigfloat(c) for c in A.coeffs]
        roots = mpmath.polyroots(coeffs, maxsteps=200 + 4 * digits, extraprec=4 * digits + 50)
        dA = A.derivative()
        total = mpmath.mpc(0)
        for z in roots:
            if mpmath.im(z) > 0:
                total += B.map(to_bigfloat)(z) / dA.map(to_bigfloat)(z)
            elif mpmath.im(z) == 0:
                raise RealPole("denominator has a real root")
        value = mpmath.re(2j * mpmath.pi * total)
    with precision(digits):
        return +value


def reference_integral(F: RationalFunction, digits: int = 40):
    """High-precision reference value, via residues when possible."""
    try:
        return residue_integral(F, digits)
    except NotSquarefree:
        return oracle_integral(F, digits).value
