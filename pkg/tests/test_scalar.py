from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sharksfin.scalar import Quad, conj, norm, sqrt_rational

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
fields = st.sampled_from([2, 3, 5, -1, -3, 6])


@st.composite
def quads(draw, d=None):
    d = draw(fields) if d is None else d
    return Quad(draw(fracs), draw(fracs), d)


def test_sqrt_rational_square_and_nonsquare():
    assert sqrt_rational(Fraction(9, 4)) == Fraction(3, 2)
    r = sqrt_rational(8)
    assert isinstance(r, Quad) and r.d == 2 and r.b == 2
    assert r * r == 8
    i = sqrt_rational(-1)
    assert i * i == -1
    assert sqrt_rational(0) == 0


def test_sqrt_of_fraction_is_reduced():
    r = sqrt_rational(Fraction(5, 12))
    assert r * r == Fraction(5, 12)


@given(fields.flatmap(lambda d: st.tuples(quads(d), quads(d), quads(d))))
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(quads())
def test_conjugation(a):
    assert conj(conj(a)) == a
    assert norm(a) == (a * conj(a)).a
    assert (a * conj(a)).is_rational()


def test_complex_case_encodes_i():
    z = Quad(1, 2, -1)  # 1 + 2i
    assert complex(z) == complex(1, 2)
    assert z.conj() == Quad(1, -2, -1)


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        Quad(0, 1, 2) + Quad(0, 1, 3)


def test_zero_test_is_exact():
    x = Quad(Fraction(1, 3), 0, 5)
    assert not (x - Fraction(1, 3))
    assert Quad(0, Fraction(1, 10 ** 30), 2)
