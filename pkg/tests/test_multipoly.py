from fractions import Fraction

import pytest
import sympy

from ratlanden.errors import NonZeroRemainder
from ratlanden.multipoly import MultiPoly

NAMES = ["u", "v", "w"]
U, V, W = (MultiPoly.variable(3, i) for i in range(3))


def as_sympy(f):
    return sympy.sympify(f.format(NAMES)) if not f.is_zero() else sympy.Integer(0)


def test_arithmetic_matches_sympy():
    f = (U + 2 * V) ** 3 - W * U + 5
    g = (V - W) * (U + 1)
    su, sv, sw = sympy.symbols(NAMES)
    sf = (su + 2 * sv) ** 3 - sw * su + 5
    sg = (sv - sw) * (su + 1)
    assert sympy.expand(as_sympy(f * g) - sf * sg) == 0
    assert sympy.expand(as_sympy(f - g) - (sf - sg)) == 0


def test_exact_division_and_remainder():
    f = (U + V) * (V - 2 * W)
    assert f / (U + V) == V - 2 * W
    with pytest.raises(NonZeroRemainder):
        (U * U + 1) / (U + V)


def test_scalar_division_and_content():
    f = 6 * U + 9 * V * W
    assert f.content() == 3
    g = f / 3
    assert g == 2 * U + 3 * V * W
    assert (f / Fraction(3, 2)).content() == 2


def test_evaluate_and_degrees():
    f = U * U * V + 3 * W - 1
    assert f.evaluate([2, 3, Fraction(1, 3)]) == 12
    assert f.total_degree() == 3
    assert (f - f).is_zero() and f - f == 0
    assert len(f) == 3
