"""Exact linear algebra over the rationals.

Everything here is built on Fraction, so results are exact: no tolerances,
no floating point anywhere.  Matrices are small dense immutable arrays;
subspaces are kept in reduced row echelon form so that equality of
subspaces is plain syntactic equality of their canonical bases.
"""

from fractions import Fraction
from typing import Iterable, Sequence

QQ = Fraction

Vector = tuple[QQ, ...]


class DimensionMismatch(ValueError):
    pass


def qq(x) -> QQ:
    """Coerce an int, string like '-3/7', or Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def vector(entries: Iterable) -> Vector:
    return tuple(qq(e) for e in entries)


def zero_vector(n: int) -> Vector:
    return (QQ(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    if not 0 <= i < n:
        raise DimensionMismatch(f"unit vector index {i} out of range for dim {n}")
    return tuple(QQ(1) if j == i else QQ(0) for j in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} != {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} != {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Vector) -> Vector:
    c = qq(c)
    return tuple(c * a for a in v)


def vec_is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


class Matrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        rows = tuple(tuple(qq(e) for e in row) for row in entries)
        if rows:
            width = len(rows[0])
            for row in rows:
                if len(row) != width:
                    raise DimensionMismatch("ragged rows")
        else:
            width = 0
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Vector]) -> "Matrix":
        if not columns:
            return cls([])
        n = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix shapes differ")
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix shapes differ")
        return Matrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.entries])

    def scale(self, c) -> "Matrix":
        c = qq(c)
        return Matrix([[c * a for a in row] for row in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ot = other.transpose().entries
        return Matrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in ot]
                for row in self.entries
            ]
        )

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector length {len(v)} != cols {self.cols}")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def is_zero(self) -> bool:
        return all(all(a == 0 for a in row) for row in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def power(self, k: int) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def rank(self) -> int:
        return sum(1 for row in rref(self).entries if any(a != 0 for a in row))

    def det(self) -> QQ:
        """Determinant by fraction-free-ish Gaussian elimination (exact)."""
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        a = [list(row) for row in self.entries]
        d = QQ(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                return QQ(0)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                d = -d
            d *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                if a[r][col] != 0:
                    f = a[r][col] * inv
                    for c in range(col, n):
                        a[r][c] -= f * a[col][c]
        return d

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix(
            [
                list(self.entries[i]) + [1 if j == i else 0 for j in range(n)]
                for i in range(n)
            ]
        )
        red = rref(aug)
        for i in range(n):
            if red.entries[i][i] != 1:
                raise ZeroDivisionError("matrix is singular")
        return Matrix([row[n:] for row in red.entries])


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form.  Canonical: pivots 1, pivot columns cleared."""
    a = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return Matrix(a)


def pivot_columns(reduced: Matrix) -> tuple[int, ...]:
    """Pivot column indices of a matrix already in RREF."""
    pivots = []
    for row in reduced.entries:
        for j, x in enumerate(row):
            if x != 0:
                pivots.append(j)
                break
    return tuple(pivots)


def nullspace(m: Matrix) -> "Subspace":
    """Kernel of m as a canonical subspace of the domain."""
    red = rref(m)
    pivots = pivot_columns(red)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [QQ(0)] * m.cols
        v[f] = QQ(1)
        for r, p in enumerate(pivots):
            v[p] = -red.entries[r][f]
        basis.append(tuple(v))
    return Subspace.from_vectors(m.cols, basis)


def matrix_is_nilpotent(m: Matrix) -> bool:
    """True iff some power of m is zero.

    Follows the image chain mV, m^2 V, ... starting from the column span,
    which must reach 0 within dim steps; equivalent to the rank of the
    powers dropping to zero, but never forms a dense power explicitly,
    and exploits sparsity of the columns.
    """
    if not m.is_square():
        raise DimensionMismatch("nilpotency of a non-square matrix")
    n = m.rows
    cols: dict[int, list[tuple[int, QQ]]] = {}
    for j in range(n):
        col = [(i, m.entries[i][j]) for i in range(n) if m.entries[i][j] != 0]
        if col:
            cols[j] = col

    def apply_sparse(v: Vector) -> Vector:
        acc = [QQ(0)] * n
        for j, vj in enumerate(v):
            if vj != 0 and j in cols:
                for i, c in cols[j]:
                    acc[i] += vj * c
        return tuple(acc)

    space = Subspace.from_vectors(
        n, [tuple(m.entries[i][j] for i in range(n)) for j in cols]
    )
    for _ in range(n):
        if space.dim == 0:
            return True
        image = [apply_sparse(v) for v in space.basis_vectors()]
        new = Subspace.from_vectors(n, [v for v in image if any(x != 0 for x in v)])
        if new == space:
            return False
        space = new
    return space.dim == 0


class Subspace:
    """Subspace of QQ^n held as an RREF basis; equality is syntactic."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Matrix):
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Vector]) -> "Subspace":
        vecs = [tuple(qq(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatch(
                    f"vector length {len(v)} != ambient dim {ambient_dim}"
                )
        if not vecs:
            return cls(ambient_dim, Matrix([]))
        red = rref(Matrix(vecs))
        rows = [row for row in red.entries if any(x != 0 for x in row)]
        return cls(ambient_dim, Matrix(rows))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix([]))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_vectors(self) -> tuple[Vector, ...]:
        return self.basis.entries

    def pivots(self) -> tuple[int, ...]:
        return pivot_columns(self.basis)

    def reduce(self, v: Vector) -> Vector:
        """Residual of v after reduction by the basis; zero iff v is a member."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(
                f"vector length {len(v)} != ambient dim {self.ambient_dim}"
            )
        res = list(v)
        for row, p in zip(self.basis.entries, self.pivots()):
            f = res[p]
            if f != 0:
                for j in range(self.ambient_dim):
                    res[j] -= f * row[j]
        return tuple(res)

    def contains(self, v: Vector) -> bool:
        return vec_is_zero(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis_vectors())

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of QQ^{self.ambient_dim})"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("subspaces live in different ambient spaces")
    return Subspace.from_vectors(
        a.ambient_dim, list(a.basis_vectors()) + list(b.basis_vectors())
    )


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked coefficient problem."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("subspaces live in different ambient spaces")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    # columns: coefficients on a-basis then b-basis; rows: ambient coordinates
    cols = [v for v in a.basis_vectors()] + [vec_scale(-1, v) for v in b.basis_vectors()]
    ker = nullspace(Matrix.from_columns(cols))
    vecs = []
    for coeff in ker.basis_vectors():
        v = zero_vector(a.ambient_dim)
        for c, bv in zip(coeff[: a.dim], a.basis_vectors()):
            v = vec_add(v, vec_scale(c, bv))
        vecs.append(v)
    return Subspace.from_vectors(a.ambient_dim, vecs)
