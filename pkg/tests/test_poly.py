import random
from fractions import Fraction

import pytest

from gajwb import PrimeField, RATIONALS
from gajwb.poly import (
    Poly,
    factor_squarefree_or_irreducible,
    is_square,
    proper_monic_divisors,
    roots,
    squarefree_decomposition,
)


def P(field, *coeffs):
    return Poly(field, coeffs)


def test_str_formatting(F):
    assert str(P(F, 1, 0, 1)) == "x^2 + 1"
    assert str(P(F, 0, -1, 1)) == "x^2 - x"
    assert str(P(F, -1, 1)) == "x - 1"
    assert str(Poly.zero(F)) == "0"
    assert str(P(F, Fraction(1, 2), 0, 0, 1)) == "x^3 + 1/2"


def test_divmod_random(F):
    rng = random.Random(101)
    for _ in range(60):
        f = P(F, *[rng.randint(-4, 4) for _ in range(rng.randint(1, 6))])
        g = P(F, *([rng.randint(-4, 4) for _ in range(rng.randint(0, 3))] + [1]))
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.is_zero or r.degree < g.degree


def test_gcd_and_derivative(F):
    f = P(F, -1, 0, 1)   # x^2 - 1
    g = P(F, 1, 1)       # x + 1
    assert f.gcd(g) == g.monic()
    assert P(F, 0, 0, 1).derivative() == P(F, 0, 2)
    assert Poly.one(F).derivative().is_zero


def test_squarefree_decomposition(F):
    # x^2 (x-1) splits into x with multiplicity 2 and x-1 with multiplicity 1
    f = P(F, 0, 0, -1, 1)
    parts = dict((str(g), m) for g, m in squarefree_decomposition(f))
    assert parts == {"x": 2, "x - 1": 1}


def test_factor_examples(F):
    facs = factor_squarefree_or_irreducible(P(F, 0, 0, -1, 1))
    assert [(str(f.poly), f.multiplicity, f.irreducible) for f in facs] == [
        ("x", 2, True),
        ("x - 1", 1, True),
    ]
    facs = factor_squarefree_or_irreducible(P(F, 1, 0, 1))
    assert [(str(f.poly), f.irreducible) for f in facs] == [("x^2 + 1", True)]
    assert not is_square(F, Fraction(-4))
    assert is_square(F, Fraction(9, 4))
    assert not is_square(F, Fraction(2))


def test_factor_over_prime_field():
    F5 = PrimeField(5)
    # x^2 + 1 = (x - 2)(x - 3) over F_5 since 2^2 = -1
    facs = factor_squarefree_or_irreducible(P(F5, 1, 0, 1))
    assert sorted(str(f.poly) for f in facs) == ["x + 2", "x + 3"]
    assert all(f.irreducible for f in facs)
    # x^2 + 2 has non-square discriminant -8 = 2 mod 5
    facs = factor_squarefree_or_irreducible(P(F5, 2, 0, 1))
    assert [(str(f.poly), f.irreducible) for f in facs] == [("x^2 + 2", True)]
    # degree-4 rootless products are fully resolved by trial division
    quartic = P(F5, 2, 0, 1) * P(F5, 3, 0, 1)
    facs = factor_squarefree_or_irreducible(quartic)
    assert sorted(str(f.poly) for f in facs) == ["x^2 + 2", "x^2 + 3"]
    assert all(f.irreducible for f in facs)


def test_rational_roots(F):
    f = Poly.from_roots(F, [Fraction(2, 3), Fraction(-1)]) * P(F, 1, 0, 1)
    assert roots(f) == [Fraction(-1), Fraction(2, 3)]


def test_fp_roots():
    F5 = PrimeField(5)
    f = Poly.from_roots(F5, [F5.scalar(2), F5.scalar(4)])
    assert [r.val for r in roots(f)] == [2, 4]


def test_rootless_quartic_unresolved_over_rationals(F):
    # (x^2+1)(x^2+2) has no rational roots; left unresolved over the rationals
    f = P(F, 1, 0, 1) * P(F, 2, 0, 1)
    facs = factor_squarefree_or_irreducible(f)
    assert len(facs) == 1 and facs[0].irreducible is None


def test_proper_monic_divisors(F):
    facs = factor_squarefree_or_irreducible(P(F, 0, 0, -1, 1))
    divisors = proper_monic_divisors(facs)
    assert sorted(str(d) for d in divisors) == ["1", "x", "x - 1", "x^2", "x^2 - x"]


def test_factor_zero_rejected(F):
    with pytest.raises(ValueError):
        factor_squarefree_or_irreducible(Poly.zero(F))
