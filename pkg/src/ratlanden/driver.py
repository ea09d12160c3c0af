"""Iterating the Landen map and reading off the integral.

After n steps of order m, ``phi`` (the value of the current iterate at zero)
approximates I / pi with error shrinking like err_{n+1} ~ C err_n^m.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

import mpmath

from .errors import DivergenceSuspected, InsufficientData, PrecisionExhausted, ZeroTrailing
from .landen import (
    RationalFunction,
    from_quadratic_state,
    normalize,
    quadratic_map,
    to_quadratic_state,
    transform,
    validate,
)
from .scalars import DEFAULT_DIGITS, cf_compress, height, precision, to_bigfloat, to_fraction
from .symbolic import LandenMap, apply

MODES = ("exact", "bigfloat")


@dataclass(frozen=True)
class RunConfig:
    """How to run the iteration.

    Exactly one stop rule: a fixed step count ``n`` or a tolerance ``tol`` on
    |phi_n - phi_{n-1}| (a heuristic, not an error bound; capped by
    ``max_steps``). ``compress`` replaces every coefficient by its shortest
    continued-fraction convergent within that tolerance after each step; it
    needs exact mode and implies monic normalisation.
    """

    m: int = 2
    mode: str = "exact"
    digits: int = DEFAULT_DIGITS
    n: Optional[int] = None
    tol: Optional[Fraction] = None
    compress: Optional[Fraction] = None
    normalize: str = "auto"
    max_steps: int = 64
    landen_map: Optional[LandenMap] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if (self.n is None) == (self.tol is None):
            raise ValueError("give exactly one stop rule: n or tol")
        if self.n is not None and self.n < 0:
            raise ValueError("n must be >= 0")
        if self.compress is not None and self.mode != "exact":
            raise ValueError("continued-fraction compression needs exact mode")
        if self.landen_map is not None and self.landen_map.m != self.m:
            raise ValueError("precomputed map has a different order")


@dataclass(frozen=True)
class TraceStep:
    n: int
    coeffs: tuple
    phi: object
    approx: object
    height_max: Optional[int]
    delta: object


@dataclass
class IterationTrace:
    digits: int
    steps: List[TraceStep] = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @property
    def phis(self) -> list:
        return [s.phi for s in self.steps]

    def function(self, n: int, p: int) -> RationalFunction:
        return RationalFunction.from_coeffs(list(self.steps[n].coeffs), p)


@dataclass(frozen=True)
class IntegrationResult:
    phi: object
    approx: object
    digits: int
    trace: IterationTrace
    final: RationalFunction

    def __iter__(self):
        yield self.approx
        yield self.trace


def phi(F: RationalFunction):
    """F(0): trailing numerator coefficient over trailing denominator one."""
    a_p = F.denominator.trailing
    if a_p == 0:
        raise ZeroTrailing("phi is undefined when the denominator vanishes at 0")
    return F.numerator.trailing / a_p


def _max_height(coeffs) -> int:
    return max(height(c) for c in coeffs)


def _step(F: RationalFunction, cfg: RunConfig) -> RationalFunction:
    how = "monic" if cfg.compress is not None else cfg.normalize
    if cfg.landen_map is not None:
        raw = RationalFunction.from_coeffs(apply(cfg.landen_map, F.coeffs()), F.p)
        G = normalize(raw, how)
    else:
        G = transform(F, cfg.m, how)
    if cfg.compress is not None:
        G = G.map(lambda c: cf_compress(c, cfg.compress))
    return G


def integrate(F: RationalFunction, cfg: RunConfig) -> IntegrationResult:
    """Iterate until the stop rule fires; approx = pi * phi.

    In exact mode phi stays rational and pi only enters the rendering.
    """
    exact = cfg.mode == "exact"
    if exact:
        F = validate(F.map(to_fraction), exact=True)
    else:
        validate(F, exact=False)
    if cfg.landen_map is not None and cfg.landen_map.p != F.p:
        raise ValueError(f"precomputed map is for p={cfg.landen_map.p}, integrand has p={F.p}")
    trace = IterationTrace(cfg.digits)
    with precision(cfg.digits):
        if not exact:
            F = normalize(F.to_bigfloat(), "monic")
        if cfg.compress is not None:
            F = normalize(F, "monic")
        limit = cfg.n if cfg.n is not None else cfg.max_steps
        tol = None if cfg.tol is None else to_bigfloat(to_fraction(cfg.tol))
        prev = None
        rising = 0
        n = 0
        while True:
            value = phi(F)
            delta = None if prev is None else abs(value - prev)
            coeffs = tuple(F.coeffs())
            trace.steps.append(
                TraceStep(
                    n=n,
                    coeffs=coeffs,
                    phi=value,
                    approx=mpmath.pi * to_bigfloat(value),
                    height_max=_max_height(coeffs) if exact else None,
                    delta=delta,
                )
            )
            if not exact and n >= 2 and delta > trace.steps[-2].delta:
                rising += 1
                if rising >= 3:
                    raise DivergenceSuspected(f"|phi_n - phi_(n-1)| grew for 3 steps (n={n})")
            elif n >= 2:
                rising = 0
            if n >= limit:
                break
            if tol is not None and delta is not None and to_bigfloat(delta) <= tol:
                break
            prev = value
            F = _step(F, cfg)
            n += 1
        approx = mpmath.pi * to_bigfloat(trace.steps[-1].phi)
    return IntegrationResult(trace.steps[-1].phi, approx, cfg.digits, trace, F)


def relative_errors(trace: IterationTrace, reference) -> list:
    """|pi phi_n - I| / |I| for every step, at the current precision."""
    ref = to_bigfloat(reference)
    return [abs(mpmath.pi * to_bigfloat(s.phi) - ref) / abs(ref) for s in trace.steps]


def estimate_order(trace, reference=None, steps: Optional[Sequence[int]] = None) -> float:
    """Median of log(err_{n+1}) / log(err_n) over consecutive steps.

    ``trace`` is an :class:`IterationTrace` (errors computed against
    ``reference``) or a plain sequence of errors indexed by step. Only pairs
    with 0 < err_n < 1, a nonzero successor and an actual change are used.
    """
    if isinstance(trace, IterationTrace):
        if reference is None:
            raise ValueError("a reference integral is needed to measure errors")
        errors = relative_errors(trace, reference)
    else:
        errors = list(trace)
    idx = list(range(len(errors))) if steps is None else list(steps)
    ratios = []
    for a, b in zip(idx, idx[1:]):
        if b != a + 1 or b >= len(errors):
            continue
        ea, eb = errors[a], errors[b]
        if 0 < ea < 1 and eb > 0 and eb != ea:
            ratios.append(float(mpmath.log(eb) / mpmath.log(ea)))
    if not ratios:
        raise InsufficientData("no usable consecutive error pairs")
    return statistics.median(ratios)


def epsilon_initial_state(eps) -> tuple:
    """Constant-first state (a0, a1, a2, b0) for 1 / ((x - 2)^2 + eps^2)."""
    eps = to_fraction(eps)
    return (4 + eps * eps, Fraction(-4), Fraction(1), Fraction(1))


def epsilon_error(state, eps):
    a0, a1, a2, b0 = state
    return mpmath.sqrt((a0 / b0 - eps) ** 2 + (a1 / b0) ** 2 + (a2 / b0 - eps) ** 2)


def epsilon_study(eps, m: int = 2, n_steps: int = 16, digits: int = DEFAULT_DIGITS) -> list:
    """Errors err_0..err_{n_steps} of the order-m iteration on 1/((x-2)^2+eps^2).

    The iterates b0 / (a0 + a1 x + a2 x^2) have a0/b0 and a2/b0 tending to
    eps and a1/b0 to 0; err_n is the Euclidean distance to that limit.
    Raises PrecisionExhausted once an error falls below what ``digits``
    digits can resolve.
    """
    eps_exact = to_fraction(eps)
    if eps_exact <= 0:
        raise ValueError("eps must be positive")
    with precision(digits):
        e = to_bigfloat(eps_exact)
        state = tuple(to_bigfloat(c) for c in epsilon_initial_state(eps_exact))
        floor = e * mpmath.mpf(10) ** (-(digits - 10))
        errors = [epsilon_error(state, e)]
        for n in range(1, n_steps + 1):
            if m == 2:
                state = quadratic_map(state)
            else:
                G = transform(from_quadratic_state(state), m, "none")
                state = to_quadratic_state(G)
            b0 = state[3]
            state = tuple(c / b0 for c in state)
            err = epsilon_error(state, e)
            if err <= floor:
                raise PrecisionExhausted(
                    f"err_{n} is below the resolution of {digits} digits for eps={eps_exact}"
                )
            errors.append(err)
        return errors
