from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sporadic_sics.golden import PHI, SQRT5, GoldenScalar

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)
scalars = st.builds(GoldenScalar, fractions, fractions)


def test_phi_relations():
    assert PHI * PHI == PHI + 1
    assert SQRT5 * SQRT5 == 5
    assert PHI.inverse() == PHI - 1
    assert PHI**-2 == (PHI**2).inverse()
    assert PHI.conjugate() == 1 - PHI
    assert PHI.norm() == -1


def test_float_and_ordering():
    assert abs(float(PHI) - 1.618033988749895) < 1e-15
    assert GoldenScalar(0, 1) > 2 and GoldenScalar(0, 1) < Fraction(9, 4)
    assert (-PHI).sign() == -1 and GoldenScalar(0).sign() == 0
    assert GoldenScalar(3, -1) > 0  # 3 - sqrt5 > 0
    assert sorted([PHI, GoldenScalar(1), -PHI]) == [-PHI, GoldenScalar(1), PHI]


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        GoldenScalar(0).inverse()
    with pytest.raises(TypeError):
        GoldenScalar.coerce(1.5)


def test_rational_mixing_and_hash():
    assert 2 * PHI == PHI + PHI
    assert 1 - PHI == GoldenScalar(Fraction(1, 2), Fraction(-1, 2))
    assert GoldenScalar(3) == 3 and hash(GoldenScalar(3)) == hash(GoldenScalar(3, 0))
    assert GoldenScalar(3).is_rational() and not PHI.is_rational()


def test_pair_round_trip():
    x = GoldenScalar(Fraction(-7, 3), Fraction(5, 11))
    assert GoldenScalar.from_pair(x.to_pair()) == x


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a
    if b != 0:
        assert (a / b) * b == a
    assert (a * b).norm() == a.norm() * b.norm()


@given(scalars, scalars)
def test_order_matches_float(a, b):
    if abs(float(a) - float(b)) > 1e-9:
        assert (a < b) == (float(a) < float(b))
