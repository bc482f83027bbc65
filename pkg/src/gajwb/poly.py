"""Dense univariate polynomials over an exact field.

Implements just enough factorization for the workbench's decision procedures:
squarefree splitting, root extraction, and irreducibility certificates for the
low-degree pieces that occur as minimal polynomials of small operators.  Over a
prime field the remaining factors are found by exhaustive trial division, so
factorization is complete for the sizes this tool handles; over the rationals
a rootless remainder of degree >= 4 may be reported as unresolved.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .fields import Field, FpElement, PrimeField, Rationals, Scalar


class Poly:
    """Polynomial with coefficients stored low degree first, normalized."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = [field.scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def from_roots(cls, field, roots):
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, (-field.scalar(r), field.one))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Scalar:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == self.field.one

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.leading
        return Poly(self.field, tuple(c / lead for c in self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return Poly(self.field, tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        z = self.field.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Poly(self.field, tuple(out))

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        return Poly.constant(self.field, self.field.scalar(other))

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(field), self
        quot = [field.zero] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - c * b
        return Poly(field, tuple(quot)), Poly(field, tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, self._coerce(other)
        while not b.is_zero:
            a, b = b, a % b
        if a.is_zero:
            return a
        return a.monic()

    def derivative(self) -> "Poly":
        if self.degree < 1:
            return Poly.zero(self.field)
        return Poly(
            self.field,
            tuple(self.coeffs[i] * i for i in range(1, len(self.coeffs))),
        )

    def __call__(self, value: Scalar) -> Scalar:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            neg = isinstance(c, Fraction) and c < 0
            mag = -c if neg else c
            if k == 0:
                body = str(mag)
            else:
                xk = "x" if k == 1 else f"x^{k}"
                body = xk if mag == self.field.one else f"{mag}*{xk}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


@dataclass(frozen=True)
class PolyFactor:
    """One factor of a factorization; `irreducible` is None when undecided."""

    poly: Poly
    multiplicity: int
    irreducible: bool | None


def squarefree_decomposition(poly: Poly) -> list[tuple[Poly, int]]:
    """Split a monic polynomial into pairwise-coprime squarefree parts.

    Returns [(g_i, m_i)] with poly = prod g_i^m_i and every g_i squarefree.
    Valid in characteristic 0 and in characteristic p > deg(poly).
    """
    if poly.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    f = poly.monic()
    if f.degree < 1:
        return []
    if isinstance(f.field, PrimeField) and f.field.p <= f.degree:
        raise ValueError("squarefree split needs characteristic > degree")
    parts = []
    c = f.gcd(f.derivative())
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            parts.append((z, i))
        w = y
        c = c // y
        i += 1
    check = Poly.one(f.field)
    for g, m in parts:
        check = check * g**m
    assert check == f, "squarefree decomposition failed to reconstruct input"
    return parts


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _rational_roots(poly: Poly) -> list[Fraction]:
    """All rational roots of a polynomial over the rationals."""
    f = poly
    if f.degree < 1:
        return []
    den_lcm = 1
    for c in f.coeffs:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in f.coeffs]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints = ints[1:]
    if not ints or len(ints) == 1:
        return roots
    for p in _int_divisors(ints[0]):
        for q in _int_divisors(ints[-1]):
            if q == 0:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and f(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def roots(poly: Poly) -> list[Scalar]:
    """All roots of `poly` in its ground field, sorted deterministically.

    Over F_p this is a scan of all residues, which is fine for the small
    moduli this workbench is meant for.
    """
    field = poly.field
    if isinstance(field, Rationals):
        return _rational_roots(poly)
    found = [FpElement(v, field.p) for v in range(field.p) if not poly(FpElement(v, field.p))]
    return found


def is_square(field: Field, value: Scalar) -> bool:
    """Whether `value` is a square in the field."""
    if isinstance(field, Rationals):
        v = field.scalar(value)
        if v < 0:
            return False
        return (
            math.isqrt(v.numerator) ** 2 == v.numerator
            and math.isqrt(v.denominator) ** 2 == v.denominator
        )
    v = field.scalar(value)
    if not v:
        return True
    return pow(v.val, (field.p - 1) // 2, field.p) == 1


def _monic_polys(field: PrimeField, degree: int):
    """All monic polynomials of the given degree over F_p, in lexicographic order."""
    residues = [FpElement(v, field.p) for v in range(field.p)]
    for lower in product(residues, repeat=degree):
        yield Poly(field, lower + (field.one,))


def _split_rootless(g: Poly) -> list[tuple[Poly, bool | None]]:
    """Factor a monic squarefree polynomial with no roots in the field.

    Degrees 2 and 3 are irreducible outright.  Over a prime field, higher
    degrees are split by trial division with monic polynomials of degree up
    to deg/2 (complete for small p).  Over the rationals a degree >= 4
    remainder is reported unresolved.
    """
    field = g.field
    out: list[tuple[Poly, bool | None]] = []
    h = g
    if isinstance(field, PrimeField):
        d = 2
        while h.degree >= 4 and d <= h.degree // 2:
            found = False
            for cand in _monic_polys(field, d):
                if cand.divides(h):
                    # no factor of degree < d remains, so cand is irreducible
                    out.append((cand, True))
                    h = h // cand
                    found = True
                    break
            if not found:
                d += 1
        if h.degree >= 1:
            # rootless with no divisor of degree <= deg/2: irreducible
            out.append((h, True))
        return out
    if h.degree in (2, 3):
        if h.degree == 2:
            b, c = h.coeffs[1], h.coeffs[0]
            disc = b * b - 4 * c
            assert not is_square(field, disc), "rootless quadratic with square discriminant"
        return [(h, True)]
    return [(h, None)]


def factor_squarefree_or_irreducible(poly: Poly) -> list[PolyFactor]:
    """Factor a nonzero polynomial as far as the decision procedures need.

    Returns monic factors with multiplicities.  Linear factors are always
    extracted; quadratic and cubic rootless parts are certified irreducible;
    over a prime field everything is resolved by exhaustive trial division,
    while over the rationals a rootless part of degree >= 4 may come back
    with `irreducible=None`.
    """
    if poly.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    field = poly.field
    result: list[PolyFactor] = []
    for part, mult in squarefree_decomposition(poly):
        rs = roots(part)
        h = part
        for r in rs:
            lin = Poly(field, (-r, field.one))
            h = h // lin
            result.append(PolyFactor(lin, mult, True))
        if h.degree >= 1:
            for fac, irr in _split_rootless(h):
                result.append(PolyFactor(fac, mult, irr))
    result.sort(key=lambda pf: (pf.poly.degree, str(pf.poly)))
    return result


def proper_monic_divisors(factors: list[PolyFactor]) -> list[Poly]:
    """All proper monic divisors (excluding the full product) from a factor list.

    Requires every factor to be resolved; used to certify minimality of
    annihilating polynomials.
    """
    if any(f.irreducible is None for f in factors):
        raise ValueError("factor list contains unresolved factors")
    field = factors[0].poly.field
    divisors = [Poly.one(field)]
    for f in factors:
        divisors = [
            d * f.poly**k for d in divisors for k in range(f.multiplicity + 1)
        ]
    full = Poly.one(field)
    for f in factors:
        full = full * f.poly**f.multiplicity
    return [d for d in divisors if d != full]
