"""Sparse multivariate polynomials keyed by exponent vectors.

Used as the coefficient ring when the Landen pipeline runs on indeterminate
coefficients. Coefficients are Python ints; Fractions appear transiently
(e.g. the ``1/2**s`` factor of the numerator step) and are folded back to
ints whenever their denominator is 1.
"""

from __future__ import annotations

import math
import numbers
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

from .errors import NonZeroRemainder

Exps = Tuple[int, ...]


def _tidy(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Exps, object] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, dict) else terms
        clean = {}
        for exps, c in items:
            if c != 0:
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} has arity != {nvars}")
                clean[tuple(exps)] = _tidy(c)
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[index] = 1
        return cls._raw(nvars, {tuple(exps): 1})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    # helpers ----------------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("arity mismatch between multivariate polynomials")
            return other
        if isinstance(other, numbers.Rational):
            return MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, numbers.Rational):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _tidy(v)
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            if other == 0:
                return MultiPoly._raw(self.nvars, {})
            return MultiPoly._raw(self.nvars, {e: _tidy(c * other) for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: _tidy(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = MultiPoly.constant(self.nvars, 1)
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, other):
        """Exact division; raises NonZeroRemainder when other does not divide."""
        if isinstance(other, numbers.Rational):
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e = max(other.terms)
        lead_c = other.terms[lead_e]
        rem = self
        quot: dict = {}
        while rem.terms:
            e = max(rem.terms)
            diff = tuple(a - b for a, b in zip(e, lead_e))
            if min(diff) < 0:
                raise NonZeroRemainder("multivariate division is not exact")
            c = Fraction(rem.terms[e]) / lead_c
            quot[diff] = _tidy(c)
            rem = rem - other * MultiPoly._raw(self.nvars, {diff: _tidy(c)})
        return MultiPoly._raw(self.nvars, quot)

    # inspection -------------------------------------------------------------

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, indices: Sequence[int]) -> set:
        """Set of partial degrees over the given variable indices, per term."""
        return {sum(e[i] for i in indices) for e in self.terms}

    def content(self) -> Fraction:
        """Positive rational gcd of the coefficients (0 for the zero polynomial)."""
        if not self.terms:
            return Fraction(0)
        fr = [Fraction(c) for c in self.terms.values()]
        num = math.gcd(*(c.numerator for c in fr))
        den = math.lcm(*(c.denominator for c in fr))
        return Fraction(num, den)

    def evaluate(self, values: Sequence):
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        powers: list = [dict() for _ in range(self.nvars)]
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    p = cache.get(k)
                    if p is None:
                        p = values[i] ** k
                        cache[k] = p
                    term = term * p
            total = total + term
        return total

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {dict(self.sorted_terms())!r})"

    def format(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.format([f"v{i}" for i in range(self.nvars)])
