from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gajwb import FieldError, FpElement, PrimeField, RATIONALS, field_from_spec

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=1, max_value=12),
)
f5_elements = st.integers(min_value=0, max_value=4).map(lambda v: FpElement(v, 5))


def test_rational_parsing():
    F = RATIONALS
    assert F.scalar("2/3") == Fraction(2, 3)
    assert F.scalar("-1") == Fraction(-1)
    assert F.scalar(7) == Fraction(7)
    assert F.format(Fraction(-4, 6)) == "-2/3"
    with pytest.raises(FieldError):
        F.scalar(0.5)
    with pytest.raises(FieldError):
        F.scalar("abc")
    with pytest.raises(FieldError):
        F.scalar("1/0")


def test_prime_field_parsing():
    F = PrimeField(5)
    assert F.scalar("2/3") == 4  # 3^-1 = 2 mod 5
    assert F.scalar("-1") == 4
    assert F.scalar(12) == 2
    assert F.format(F.scalar("-1")) == "4"
    with pytest.raises(FieldError):
        F.scalar("1/5")
    with pytest.raises(FieldError):
        F.scalar("x")


def test_prime_field_validation():
    for bad in (2, 3, 4, 9, 1, 0, -5):
        with pytest.raises(FieldError):
            PrimeField(bad)
    assert PrimeField(5).p == 5
    assert PrimeField(101).p == 101


def test_field_from_spec():
    assert field_from_spec("rational") == RATIONALS
    assert field_from_spec("fp:7") == PrimeField(7)
    for bad in ("fp:4", "fp:x", "reals", "fp:"):
        with pytest.raises(FieldError):
            field_from_spec(bad)


def test_fp_arithmetic():
    x = FpElement(3, 5)
    y = FpElement(4, 5)
    assert x + y == 2
    assert x - y == 4
    assert x * y == 2
    assert x / y == 3 * 4  # 4^-1 = 4 mod 5
    assert -x == 2
    assert x**3 == 2
    assert bool(FpElement(0, 5)) is False
    with pytest.raises(ZeroDivisionError):
        x / FpElement(0, 5)
    with pytest.raises(ValueError):
        x + FpElement(1, 7)


@settings(derandomize=True, max_examples=60)
@given(small_rationals, small_rationals)
def test_rational_arithmetic_is_exact(a, b):
    assert a + b - b == a
    if b:
        assert (a / b) * b == a


@settings(derandomize=True, max_examples=60)
@given(f5_elements, f5_elements, f5_elements)
def test_fp_ring_axioms(a, b, c):
    assert a + b - b == a
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
