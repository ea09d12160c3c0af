"""Multiple-angle cotangent polynomials: cot(m t) = P_m(cot t) / Q_m(cot t)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidOrder
from .upoly import Polynomial


def _pascal_row(m: int) -> list:
    row = [1]
    for _ in range(m):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


@dataclass(frozen=True)
class CotangentPair:
    m: int
    P: Polynomial
    Q: Polynomial

    def R(self, x):
        """The rational map x -> P_m(x) / Q_m(x)."""
        return self.P(x) / self.Q(x)


@lru_cache(maxsize=None)
def build(m: int) -> CotangentPair:
    """Integer polynomials P_m (degree m) and Q_m (degree m - 1).

    P_m collects the even binomials C(m, 2j) with alternating signs on
    x^(m-2j), Q_m the odd ones C(m, 2j+1) on x^(m-2j-1).
    """
    if not isinstance(m, int) or m < 2:
        raise InvalidOrder(f"order m must be an integer >= 2, got {m!r}")
    binom = _pascal_row(m)
    p = [0] * (m + 1)
    q = [0] * m
    for k in range(m + 1):
        # coefficient of x^(m-k) comes from binom(m, k)
        sign = -1 if (k // 2) % 2 else 1
        if k % 2 == 0:
            p[k] = sign * binom[k]
        else:
            q[k - 1] = sign * binom[k]
    return CotangentPair(m, Polynomial(p), Polynomial(q))
