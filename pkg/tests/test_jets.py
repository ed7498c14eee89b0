from fractions import Fraction

import pytest
import sympy as sp

from _util import H, germ
from sharksfin.jets import (
    FLOAT,
    CurveJet,
    Jet2,
    JetError,
    MapJet2,
    directional_iterate,
    map_compose_curve,
    partial_derivative,
    series_compose,
    series_elem,
    series_mul,
)
from sharksfin.scalar import Quad

U, V = sp.symbols("u v")


def to_sympy(j: Jet2):
    return sum(sp.Rational(c.numerator, c.denominator) * U ** i * V ** k
               for i, k, c in ((i, k, Fraction(c)) for i, k, c in j.terms()))


def from_sympy(expr, order):
    poly = sp.Poly(sp.expand(expr), U, V)
    table = {}
    for (i, k), c in poly.terms():
        if i + k <= order:
            table[(i, k)] = Fraction(int(c.p), int(c.q))
    return Jet2(order, table)


def test_mul_examples():
    assert series_mul(Jet2(2, {(0, 0): 1, (1, 0): 1}), Jet2(2, {(0, 0): 1, (1, 0): -1})) == Jet2(2, {(0, 0): 1, (2, 0): -1})
    assert series_mul(Jet2(1, {(1, 0): 1}), Jet2(1, {(0, 1): 1})) == Jet2.zero(1)
    s = Jet2(3, {(1, 0): 1, (0, 1): 1})
    assert s * s == Jet2(3, {(2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_compose_examples():
    sq = Jet2(2, {(2, 0): 1})
    inner = germ(2, {(1, 0): 1, (0, 1): 1}, {(0, 1): 1})
    assert series_compose(sq, inner) == Jet2(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    rot = germ(2, {(0, 1): 1}, {(1, 0): -1})
    assert series_compose(Jet2(2, {(1, 1): 1}), rot) == Jet2(2, {(1, 1): -1})


@pytest.mark.parametrize("eps", [1, -1])
@pytest.mark.parametrize("a12,a21", [(1, 0), (0, 1), (Fraction(2, 3), -3)])
def test_quadratic_change_keeps_quadratic_part(eps, a12, a21):
    outer = Jet2(4, {(2, 0): eps * H, (0, 2): H})
    phi = germ(4, {(1, 0): 1, (2, 0): a12 * H, (1, 1): -eps * a21 * H},
               {(0, 1): 1, (1, 1): -a12 * H, (0, 2): eps * a21 * H})
    out = series_compose(outer, phi)
    assert out.homogeneous(2) == outer.homogeneous(2)
    u, v = U, V
    ref = (eps * (u + a12 * u ** 2 / 2 - eps * a21 * u * v / 2) ** 2 / 2
           + (v - a12 * u * v / 2 + eps * a21 * v ** 2 / 2) ** 2 / 2)
    assert out == from_sympy(ref, 4)


def test_elementary_examples():
    assert series_elem("cos", Jet2(4, {(2, 0): 1})) == Jet2(4, {(0, 0): 1, (4, 0): Fraction(-1, 2)})
    s = Jet2(2, {(1, 0): 1, (0, 1): 1})
    assert series_elem("sin", s) == s
    geo = series_elem("inverse", Jet2(3, {(0, 0): 1, (1, 0): -1}))
    assert geo == Jet2(3, {(0, 0): 1, (1, 0): 1, (2, 0): 1, (3, 0): 1})
    r = series_elem("sqrt", Jet2(4, {(0, 0): 4, (1, 0): 4, (2, 0): 1}))
    assert r == Jet2(4, {(0, 0): 2, (1, 0): 1})


def test_elementary_errors():
    with pytest.raises(JetError):
        series_elem("sin", Jet2(2, {(0, 0): 1}))
    with pytest.raises(JetError):
        series_elem("inverse", Jet2(2, {(1, 0): 1}))
    with pytest.raises(JetError):
        series_elem("sqrt", Jet2(2, {(0, 0): 2}))


def test_partial_derivative_examples():
    assert partial_derivative(Jet2(3, {(2, 1): 1}), "u") == Jet2(2, {(1, 1): 2})
    assert partial_derivative(Jet2(2, {(1, 1): 1}), "v") == Jet2(1, {(1, 0): 1})
    assert partial_derivative(Jet2(2, {(0, 0): 7}), "u").is_zero()


def test_truncation_drops_high_degrees():
    a = Jet2(2, {(1, 0): 1, (0, 1): 1})
    assert (a * a * a).is_zero()
    assert Jet2(2, {(3, 0): 1, (1, 0): 2}) == Jet2(2, {(1, 0): 2})


def test_directional_iterate_examples():
    f = germ(4, {(1, 1): 1}, {(2, 0): H, (0, 2): H})
    assert directional_iterate(f, (1, 1), 2) == (2, 2)
    g = germ(4, {(1, 1): 1}, {(2, 0): H, (0, 2): H, (3, 0): Fraction(1, 6)})
    assert directional_iterate(g, (1, 1), 3) == (0, 1)
    assert directional_iterate(g, (0, 0), 2) == (0, 0)


def _sympy_iterate(expr, eta, k):
    for _ in range(k):
        expr = eta[0] * sp.diff(expr, U) + eta[1] * sp.diff(expr, V)
    return expr.subs({U: 0, V: 0})


@pytest.mark.parametrize("seed", range(12))
def test_directional_iterate_matches_symbolic(seed):
    import random

    rng = random.Random(seed)
    table = lambda: {(d - j, j): Fraction(rng.randint(-4, 4), rng.randint(1, 3))  # noqa: E731
                     for d in range(1, 5) for j in range(d + 1)}
    f = germ(4, table(), table())
    eta = (Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
    for k in range(1, 5):
        got = directional_iterate(f, eta, k)
        want = [_sympy_iterate(to_sympy(c), [sp.Rational(e.numerator, e.denominator) for e in eta], k) for c in f]
        assert [sp.Rational(g.numerator, g.denominator) for g in map(Fraction, got)] == want


def test_directional_iterate_quadratic_field():
    f = germ(4, {(1, 1): 1}, {(2, 0): 1, (0, 2): 1})
    eta = (Quad(1), Quad(0, 1, 2))  # (1, sqrt 2)
    x, y = directional_iterate(f, eta, 2)
    assert x == Quad(0, 2, 2)
    assert y == 6


def test_inverse_map_and_identity():
    phi = germ(4, {(1, 0): 2, (0, 1): 1, (2, 0): 1}, {(0, 1): 1, (1, 1): Fraction(1, 3)})
    ident = MapJet2.identity(4)
    assert phi.compose(phi.inverse()) == ident
    assert phi.inverse().compose(phi) == ident


def test_jacobian_determinant():
    f = germ(4, {(1, 1): 1}, {(2, 0): H, (0, 2): H, (3, 0): Fraction(1, 6)})
    assert f.jacobian_det() == Jet2(3, {(0, 2): 1, (2, 0): -1, (3, 0): Fraction(-1, 2)})


def test_curve_composition():
    f = germ(4, {(1, 1): 1}, {(2, 0): 1})
    c = CurveJet(3, [0, 1, 0, 0], [0, 1, 1, 0])
    img = map_compose_curve(f, c, order=4)
    # (t (t + t^2), t^2)
    assert list(img.x[:5]) == [0, 0, 1, 1, 0]
    assert list(img.y[:5]) == [0, 0, 1, 0, 0]


def test_float_and_exact_do_not_mix():
    a = Jet2(2, {(1, 0): 1})
    b = Jet2(2, {(1, 0): 1.0}, kind=FLOAT)
    with pytest.raises(TypeError):
        a + b


def test_compose_order_mismatch():
    with pytest.raises(JetError):
        series_compose(Jet2(3, {(1, 0): 1}), MapJet2.identity(2))
