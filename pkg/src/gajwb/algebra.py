"""Finite-dimensional commutative algebras given by structure constants.

An algebra is a table b_i * b_j = sum_k c[i][j][k] b_k over an exact field.
Structure constants are supplied for i <= j only and symmetrized on load, so
commutativity is built in.  No associativity of any kind is assumed.
"""

from dataclasses import dataclass

from .errors import InvalidParameters
from .fields import Field, Scalar
from .linalg import Matrix, unit_vector, zero_vector


class Algebra:
    """Commutative algebra over an exact field, immutable after construction."""

    __slots__ = ("field", "dim", "basis_names", "_table", "_gaj_cache")

    def __init__(self, field: Field, basis_names, products):
        """Build from sparse products: {(i, j): coords} given for i <= j.

        Missing pairs multiply to zero.  `coords` is a length-dim vector of
        scalars (anything `field.scalar` accepts).
        """
        names = tuple(basis_names)
        if not names:
            raise ValueError("algebra needs at least one basis element")
        if len(set(names)) != len(names):
            raise ValueError("duplicate basis names")
        n = len(names)
        dense = [[None] * n for _ in range(n)]
        for (i, j), coords in products.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"product index ({i}, {j}) out of range")
            vec = tuple(field.scalar(c) for c in coords)
            if len(vec) != n:
                raise ValueError(f"product ({i}, {j}) has wrong coordinate length")
            for a, b in ((i, j), (j, i)):
                if dense[a][b] is not None and dense[a][b] != vec:
                    raise ValueError(
                        f"conflicting products for basis pair ({names[i]}, {names[j]})"
                    )
                dense[a][b] = vec
        zero = zero_vector(field, n)
        table = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(dense[i][j] or zero) if c)
                for j in range(n)
            )
            for i in range(n)
        )
        self.field = field
        self.dim = n
        self.basis_names = names
        self._table = table
        self._gaj_cache = {}

    def index_of(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise ValueError(f"unknown basis name {name!r}") from None

    def table_coords(self, i: int, j: int) -> tuple:
        """Dense coordinates of b_i * b_j."""
        out = [self.field.zero] * self.dim
        for k, c in self._table[i][j]:
            out[k] = c
        return tuple(out)

    def multiply_coords(self, x: tuple, y: tuple) -> tuple:
        """Bilinear product in coordinates."""
        acc = [self.field.zero] * self.dim
        table = self._table
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, s in row[j]:
                    acc[k] = acc[k] + c * s
        return tuple(acc)

    def element(self, coords) -> "Element":
        """Element from a coordinate sequence or a {name: scalar} mapping."""
        if isinstance(coords, dict):
            vec = [self.field.zero] * self.dim
            for name, c in coords.items():
                vec[self.index_of(name)] = self.field.scalar(c)
            return Element(self, tuple(vec))
        vec = tuple(self.field.scalar(c) for c in coords)
        if len(vec) != self.dim:
            raise ValueError("coordinate vector has wrong length")
        return Element(self, vec)

    def basis_element(self, i) -> "Element":
        if isinstance(i, str):
            i = self.index_of(i)
        return Element(self, unit_vector(self.field, self.dim, i))

    def zero_element(self) -> "Element":
        return Element(self, zero_vector(self.field, self.dim))

    def basis_elements(self) -> list["Element"]:
        return [self.basis_element(i) for i in range(self.dim)]

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and other.field == self.field
            and other.basis_names == self.basis_names
            and other._table == self._table
        )

    def __hash__(self):
        return hash((self.field, self.basis_names, self._table))

    def __repr__(self):
        return f"Algebra(dim {self.dim}, basis {', '.join(self.basis_names)})"


class Element:
    """Element of an algebra, stored as its coordinate vector."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords: tuple):
        self.algebra = algebra
        self.coords = coords

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check_same(self, other):
        if not isinstance(other, Element) or other.algebra != self.algebra:
            raise ValueError("elements of different algebras")

    def __add__(self, other):
        self._check_same(other)
        return Element(
            self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other):
        self._check_same(other)
        return Element(
            self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self):
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_same(other)
            return Element(
                self.algebra, self.algebra.multiply_coords(self.coords, other.coords)
            )
        c = self.algebra.field.scalar(other)
        return Element(self.algebra, tuple(c * a for a in self.coords))

    def __rmul__(self, other):
        c = self.algebra.field.scalar(other)
        return Element(self.algebra, tuple(c * a for a in self.coords))

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.algebra == self.algebra
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for name, c in zip(self.algebra.basis_names, self.coords):
            if not c:
                continue
            if c == self.algebra.field.one:
                parts.append(name)
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts)


@dataclass(frozen=True)
class GajParams:
    """The identity parameters (beta, gamma), validated to be nonzero as a pair."""

    field: Field
    beta: Scalar
    gamma: Scalar

    def __post_init__(self):
        object.__setattr__(self, "beta", self.field.scalar(self.beta))
        object.__setattr__(self, "gamma", self.field.scalar(self.gamma))
        if not self.beta and not self.gamma:
            raise InvalidParameters("(beta, gamma) != (0, 0) is required")

    def __repr__(self):
        return f"GajParams(beta={self.beta}, gamma={self.gamma})"


def multiply(x: Element, y: Element) -> Element:
    """Algebra product; commutative by construction of the table."""
    return x * y


def principal_power(x: Element, n: int) -> Element:
    """Left-nested power: x^1 = x, x^(n+1) = x^n * x."""
    if n < 1:
        raise ValueError("principal powers start at exponent 1")
    out = x
    for _ in range(n - 1):
        out = out * x
    return out


def right_mult_operator(x: Element) -> Matrix:
    """Matrix of y -> y*x in the algebra basis (equals left multiplication)."""
    alg = x.algebra
    cols = [alg.multiply_coords(unit_vector(alg.field, alg.dim, j), x.coords) for j in range(alg.dim)]
    return Matrix(alg.field, [[cols[j][i] for j in range(alg.dim)] for i in range(alg.dim)])


def is_idempotent(e: Element) -> bool:
    """True iff e*e = e and e != 0."""
    return (not e.is_zero) and e * e == e


def fourth_power_defect(x: Element) -> Element:
    """x^2 * x^2 - x^4; nonzero certifies failure of power-associativity."""
    sq = x * x
    return sq * sq - principal_power(x, 4)
