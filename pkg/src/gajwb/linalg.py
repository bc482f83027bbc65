"""Exact matrices, canonical subspaces, and minimal polynomials.

Matrices act on column vectors; entry (i, j) is row i, column j.  Subspaces
are always kept in reduced row-echelon form with leading coefficient 1, so two
equal subspaces are structurally equal tuples.  That canonical form is what
turns the set-level claims ("this product lands in that component") into
decidable equalities.
"""

from .fields import Field, Scalar
from .poly import Poly


def zero_vector(field: Field, n: int) -> tuple:
    return (field.zero,) * n


def unit_vector(field: Field, n: int, i: int) -> tuple:
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_add(u: tuple, v: tuple) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: tuple, v: tuple) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Scalar, u: tuple) -> tuple:
    return tuple(c * a for a in u)


def vec_is_zero(u: tuple) -> bool:
    return not any(u)


class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows):
        data = tuple(tuple(field.scalar(x) for x in row) for row in rows)
        if not data:
            raise ValueError("matrix needs at least one row")
        width = len(data[0])
        if width == 0 or any(len(r) != width for r in data):
            raise ValueError("matrix rows must be nonempty and equal length")
        self.field = field
        self.nrows = len(data)
        self.ncols = width
        self.rows = data

    @classmethod
    def zero(cls, field, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        return cls(field, [[field.zero] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n):
        return cls(
            field,
            [[field.one if i == j else field.zero for j in range(n)] for i in range(n)],
        )

    @classmethod
    def diagonal(cls, field, entries):
        entries = [field.scalar(e) for e in entries]
        n = len(entries)
        return cls(
            field,
            [[entries[i] if i == j else field.zero for j in range(n)] for i in range(n)],
        )

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(
            self.field,
            [vec_add(a, b) for a, b in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(
            self.field,
            [vec_sub(a, b) for a, b in zip(self.rows, other.rows)],
        )

    def __neg__(self):
        return Matrix(self.field, [vec_scale(-self.field.one, r) for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if other.field != self.field:
                raise ValueError("matrices over different fields")
            if self.ncols != other.nrows:
                raise ValueError(
                    f"shape mismatch: {self.nrows}x{self.ncols} times "
                    f"{other.nrows}x{other.ncols}"
                )
            cols = list(zip(*other.rows))
            return Matrix(
                self.field,
                [
                    [
                        sum((a * b for a, b in zip(row, col) if a and b), self.field.zero)
                        for col in cols
                    ]
                    for row in self.rows
                ],
            )
        c = self.field.scalar(other)
        return Matrix(self.field, [vec_scale(c, r) for r in self.rows])

    def __rmul__(self, other):
        c = self.field.scalar(other)
        return Matrix(self.field, [vec_scale(c, r) for r in self.rows])

    def __pow__(self, n: int):
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            raise ValueError("negative matrix power")
        out = Matrix.identity(self.field, self.nrows)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def apply(self, vec) -> tuple:
        """Multiply by a column vector."""
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match matrix width")
        return tuple(
            sum((a * b for a, b in zip(row, vec) if a and b), self.field.zero)
            for row in self.rows
        )

    def flatten(self) -> tuple:
        return tuple(x for row in self.rows for x in row)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        body = "; ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)
        return f"Matrix({body})"

    def _check_same_shape(self, other):
        if not isinstance(other, Matrix) or other.field != self.field:
            raise ValueError("expected a matrix over the same field")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")


def rref(field: Field, rows) -> tuple[list[tuple], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = field.one / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


class Subspace:
    """Subspace of F^n held as a canonical reduced-echelon basis."""

    __slots__ = ("field", "ambient_dim", "basis", "_pivots")

    def __init__(self, field: Field, ambient_dim: int, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        self._pivots = tuple(pivots)

    @classmethod
    def span(cls, field, ambient_dim, vectors):
        vecs = [tuple(field.scalar(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("spanning vector has wrong length")
        basis, pivots = rref(field, vecs)
        return cls(field, ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field, ambient_dim):
        return cls.span(
            field, ambient_dim, [unit_vector(field, ambient_dim, i) for i in range(ambient_dim)]
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce_vector(self, vec) -> tuple:
        """Remainder of vec after elimination against the canonical basis."""
        v = list(vec)
        for row, p in zip(self.basis, self._pivots):
            c = v[p]
            if c:
                for i, b in enumerate(row):
                    if b:
                        v[i] = v[i] - c * b
        return tuple(v)

    def contains_vector(self, vec) -> bool:
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        return vec_is_zero(self.reduce_vector(vec))

    def contains(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains_vector(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if self.is_zero or other.is_zero:
            return Subspace.zero(self.field, self.ambient_dim)
        # w in U cap V  iff  w = sum a_i u_i = sum b_j v_j; solve for (a, b)
        du, dv = self.dim, other.dim
        rows = []
        for coord in range(self.ambient_dim):
            rows.append(
                tuple(self.basis[i][coord] for i in range(du))
                + tuple(-other.basis[j][coord] for j in range(dv))
            )
        ker = kernel(Matrix(self.field, rows))
        vectors = []
        for c in ker.basis:
            w = zero_vector(self.field, self.ambient_dim)
            for i in range(du):
                if c[i]:
                    w = vec_add(w, vec_scale(c[i], self.basis[i]))
            vectors.append(w)
        return Subspace.span(self.field, self.ambient_dim, vectors)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and other.field == self.field
            and other.ambient_dim == self.ambient_dim
            and other.basis == self.basis
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        rows = "; ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.basis)
        return f"Subspace(dim {self.dim} of F^{self.ambient_dim}: {rows})"

    def _check_ambient(self, other):
        if not isinstance(other, Subspace) or other.field != self.field:
            raise ValueError("expected a subspace over the same field")
        if other.ambient_dim != self.ambient_dim:
            raise ValueError(
                f"ambient dimension mismatch: {self.ambient_dim} vs {other.ambient_dim}"
            )


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m v = 0} in canonical form."""
    reduced, pivots = rref(m.field, m.rows)
    field = m.field
    n = m.ncols
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    vectors = []
    for f in free_cols:
        v = [field.zero] * n
        v[f] = field.one
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        vectors.append(tuple(v))
    return Subspace.span(field, n, vectors)


def solve_linear(field: Field, columns, target):
    """One solution x of sum x_j columns[j] = target, or None if inconsistent.

    Free variables are set to zero.
    """
    n = len(target)
    width = len(columns)
    rows = [
        tuple(columns[j][i] for j in range(width)) + (target[i],)
        for i in range(n)
    ]
    reduced, pivots = rref(field, rows)
    if width in pivots:
        return None
    x = [field.zero] * width
    for row, p in zip(reduced, pivots):
        x[p] = row[-1]
    return tuple(x)


def minimal_polynomial(m: Matrix) -> Poly:
    """Least-degree monic annihilator of a square matrix.

    Builds the flattened powers I, m, m^2, ... and stops at the first linear
    dependence; Cayley-Hamilton bounds the degree by the matrix size.
    """
    if not m.is_square:
        raise ValueError("minimal polynomial of a non-square matrix")
    field = m.field
    powers = [Matrix.identity(field, m.nrows).flatten()]
    cur = Matrix.identity(field, m.nrows)
    for d in range(1, m.nrows + 1):
        cur = cur * m
        target = cur.flatten()
        sol = solve_linear(field, powers, target)
        if sol is not None:
            coeffs = [-c for c in sol] + [field.one]
            return Poly(field, coeffs)
        powers.append(target)
    raise AssertionError("no annihilator found below the Cayley-Hamilton bound")


def evaluate_polynomial_at(m: Matrix, poly: Poly) -> Matrix:
    """Exact Horner evaluation of a polynomial at a square matrix."""
    if not m.is_square:
        raise ValueError("polynomial evaluation needs a square matrix")
    out = Matrix.zero(m.field, m.nrows)
    ident = Matrix.identity(m.field, m.nrows)
    for c in reversed(poly.coeffs):
        out = out * m + c * ident
    return out
