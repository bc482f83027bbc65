"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields F_p, p > 3.

Everything downstream (matrices, subspaces, polynomials, algebras) is generic
over these two fields.  All values are canonical -- fractions in lowest terms,
residues in [0, p) -- so equality of derived objects is structural equality.

Prime fields with p in {2, 3} are rejected: the identity-checking machinery
relies on full linearization of an identity that is cubic in one variable,
which is only equivalent to the original identity when the characteristic does
not divide 6 and the field has more than 3 elements.
"""

from fractions import Fraction


class FieldError(ValueError):
    """Unusable field specification or scalar literal."""


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin: these bases decide primality for n < 3.3e24
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FpElement:
    """Residue modulo a prime, always stored reduced to [0, p).

    Supports mixed arithmetic with plain ints (coerced mod p); mixing two
    different moduli is an error.
    """

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other.val
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.val + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.val - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(v - self.val, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.val * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if v % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(self.val * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if self.val == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(v * pow(self.val, -1, self.p), self.p)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0 and self.val == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return FpElement(pow(self.val, n, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        # consistent with int equality above (val is canonical)
        return hash(self.val)

    def __bool__(self):
        return self.val != 0

    def __str__(self):
        return str(self.val)

    def __repr__(self):
        return f"FpElement({self.val}, p={self.p})"


class Rationals:
    """The field of rationals; scalars are `fractions.Fraction` values."""

    kind = "rational"
    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def scalar(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldError(f"not an exact rational: {value!r}") from exc
        raise FieldError(f"not an exact rational: {value!r}")

    def format(self, value) -> str:
        return str(value)

    def spec(self) -> str:
        return "rational"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """F_p for a prime p > 3."""

    kind = "fp"

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError(f"modulus {p!r} is not prime")
        if p <= 3:
            raise FieldError(
                f"prime field F_{p} not supported: need p > 3 so that the "
                "linearized identity checks are equivalent to the originals"
            )
        self.p = p
        self.char = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    def scalar(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise FieldError(f"scalar from F_{value.p} used in F_{self.p}")
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return FpElement(value, self.p)
        if isinstance(value, str):
            s = value.strip()
            try:
                if "/" in s:
                    num, den = s.split("/", 1)
                    d = int(den)
                    if d % self.p == 0:
                        raise FieldError(
                            f"{value!r} has a denominator divisible by {self.p}"
                        )
                    return FpElement(int(num) * pow(d, -1, self.p), self.p)
                return FpElement(int(s), self.p)
            except ValueError as exc:
                raise FieldError(f"not an exact scalar: {value!r}") from exc
        raise FieldError(f"not an exact scalar: {value!r}")

    def format(self, value) -> str:
        return str(self.scalar(value))

    def spec(self) -> str:
        return f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


RATIONALS = Rationals()

Field = Rationals | PrimeField
Scalar = Fraction | FpElement


def field_from_spec(spec: str) -> Field:
    """Parse a field specification string: "rational" or "fp:P"."""
    if not isinstance(spec, str):
        raise FieldError(f"field spec must be a string, got {spec!r}")
    s = spec.strip()
    if s == "rational":
        return RATIONALS
    if s.startswith("fp:"):
        try:
            p = int(s[3:])
        except ValueError as exc:
            raise FieldError(f"bad prime field spec {spec!r}") from exc
        return PrimeField(p)
    raise FieldError(f"unknown field spec {spec!r} (use 'rational' or 'fp:P')")
