"""Exact rationals, configurable-precision floats and continued fractions.

Exact values are plain :class:`fractions.Fraction` objects; high precision
floats are :mod:`mpmath` ``mpf`` values evaluated under a decimal-digit
context set with :func:`precision`.
"""

from __future__ import annotations

import contextlib
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

import mpmath

Rational = Fraction
BigFloat = mpmath.mpf

DEFAULT_DIGITS = 50


@contextlib.contextmanager
def precision(digits: int) -> Iterator[int]:
    """Run a block with mpmath working at ``digits`` decimal digits."""
    if digits < 1:
        raise ValueError(f"precision must be positive, got {digits}")
    with mpmath.workdps(digits):
        yield digits


def current_digits() -> int:
    return mpmath.mp.dps


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def to_bigfloat(x) -> mpmath.mpf:
    """Convert an int, Fraction or mpf to an mpf at the current precision."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def is_exact(x) -> bool:
    return isinstance(x, (numbers.Rational,))


def height(x) -> int:
    """max(|numerator|, denominator) of a rational in lowest terms."""
    x = to_fraction(x)
    return max(abs(x.numerator), x.denominator)


@dataclass(frozen=True)
class ContinuedFraction:
    """A finite simple continued fraction ``[q0; q1, q2, ...]``."""

    terms: tuple

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        if not terms:
            raise ValueError("a continued fraction needs at least one term")
        if any(t < 1 for t in terms[1:]):
            raise ValueError("partial quotients after the first must be >= 1")
        object.__setattr__(self, "terms", terms)

    def __len__(self) -> int:
        return len(self.terms)

    def convergents(self) -> Iterator[Fraction]:
        h_prev, h = 1, self.terms[0]
        k_prev, k = 0, 1
        yield Fraction(h, k)
        for q in self.terms[1:]:
            h_prev, h = h, q * h + h_prev
            k_prev, k = k, q * k + k_prev
            yield Fraction(h, k)

    def value(self) -> Fraction:
        return cf_reconstruct(self)

    def __str__(self) -> str:
        head, *tail = self.terms
        if not tail:
            return f"[{head}]"
        return f"[{head}; " + ", ".join(map(str, tail)) + "]"


def _partial_quotients(x: Fraction) -> Iterator[int]:
    num, den = x.numerator, x.denominator
    while den:
        q, r = divmod(num, den)
        yield q
        num, den = den, r


def cf_expand(x, k: Optional[int] = None) -> ContinuedFraction:
    """First ``k`` terms (all terms if ``k`` is None) of the expansion of x."""
    if k is not None and k < 1:
        raise ValueError("k must be >= 1")
    terms = []
    for q in _partial_quotients(to_fraction(x)):
        terms.append(q)
        if k is not None and len(terms) == k:
            break
    return ContinuedFraction(tuple(terms))


def cf_reconstruct(cf) -> Fraction:
    terms: Sequence[int] = cf.terms if isinstance(cf, ContinuedFraction) else tuple(cf)
    if not terms:
        raise ValueError("empty continued fraction")
    value = Fraction(terms[-1])
    for q in reversed(terms[:-1]):
        value = q + 1 / value
    return value


def cf_compress(x, tol) -> Fraction:
    """Return the first convergent of ``x`` lying within ``tol`` of it.

    Convergents are best approximations, so the result also has the smallest
    height among the convergents that meet the tolerance. ``tol == 0`` gives
    ``x`` back unchanged.
    """
    x = to_fraction(x)
    tol = to_fraction(tol)
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    for y in cf_expand(x).convergents():
        if abs(y - x) <= tol:
            return y
    return x  # unreachable: the last convergent is x itself
