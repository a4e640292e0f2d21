from fractions import Fraction

from hypothesis import given, strategies as st

from hypforge.scalar import Scalar

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.builds(Scalar, fracs, fracs, fracs, fracs)


def test_constants():
    assert Scalar.i() * Scalar.i() == Scalar(-1)
    assert Scalar.sqrt2() * Scalar.sqrt2() == Scalar(2)
    assert Scalar.inv_sqrt2() * Scalar.sqrt2() == Scalar(1)


def test_coercion():
    assert Scalar.coerce(3) == Scalar(3)
    assert Scalar.coerce(Fraction(1, 2)) == Scalar(Fraction(1, 2))
    assert Scalar.coerce(Scalar.i()) == Scalar.i()


def test_predicates():
    assert Scalar(2).is_integer()
    assert Scalar(2).as_integer() == 2
    assert not Scalar(0, 1).is_rational()
    assert Scalar(1, 2).is_real()
    assert not Scalar(0, 0, 1).is_real()
    assert Scalar().is_zero()


def test_conjugate_fixes_real_part():
    s = Scalar(1, 2, 3, 4)
    c = s.conjugate()
    assert c == Scalar(1, 2, -3, -4)
    prod = s * c
    assert prod.is_real()


def test_complex_embedding():
    s = Scalar(1, 1, 2, -1)
    z = complex(s)
    assert abs(z.real - (1 + 2 ** 0.5)) < 1e-12
    assert abs(z.imag - (2 - 2 ** 0.5)) < 1e-12


@given(scalars, scalars)
def test_addition_commutes(x, y):
    assert x + y == y + x


@given(scalars, scalars, scalars)
def test_multiplication_associates(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(scalars, scalars, scalars)
def test_distributivity(x, y, z):
    assert x * (y + z) == x * y + x * z


@given(scalars)
def test_inverse(x):
    if not x.is_zero():
        assert x * x.inverse() == Scalar(1)
        assert x / x == Scalar(1)


@given(scalars, scalars)
def test_conjugate_is_multiplicative(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


def test_mixed_number_ops():
    assert 2 * Scalar.sqrt2() == Scalar(0, 2)
    assert Scalar(1) - 2 == Scalar(-1)
    assert 1 - Scalar(2) == Scalar(-1)
    assert 1 / Scalar(0, 1) == Scalar.inv_sqrt2()
