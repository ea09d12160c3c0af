"""Rational Landen transformations for integrating rational functions.

A rational function F with an even-degree denominator and no real poles is
mapped to a new rational function with the same integral over the real
line. Iterating the map drives F(0) towards the integral divided by pi, with
order-m convergence.
"""

from .cotangent import CotangentPair, build as cotangent_pair
from .driver import IntegrationResult, RunConfig, epsilon_study, estimate_order, integrate, phi
from .landen import RationalFunction, quadratic_map, transform, transform_raw, validate
from .quadrature import fold, oracle_integral, reference_integral, trapezoid
from .symbolic import LandenMap, apply, generate

__all__ = [
    "CotangentPair",
    "IntegrationResult",
    "LandenMap",
    "RationalFunction",
    "RunConfig",
    "apply",
    "cotangent_pair",
    "epsilon_study",
    "estimate_order",
    "fold",
    "generate",
    "integrate",
    "oracle_integral",
    "phi",
    "quadratic_map",
    "reference_integral",
    "transform",
    "transform_raw",
    "trapezoid",
    "validate",
]
