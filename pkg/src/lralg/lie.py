"""Finite-dimensional Lie algebras over QQ given by structure constants.

A LieAlgebra stores the full bracket tensor sparsely (both orientations,
so a basis bracket is one dictionary lookup) and is validated at
construction: antisymmetry by construction, the Jacobi identity by an
exhaustive check over basis triples, which suffices by trilinearity.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import (
    QQ,
    Matrix,
    Subspace,
    Vector,
    nullspace,
    qq,
    subspace_sum,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vector,
)

SparseVec = dict[int, QQ]


class LieError(ValueError):
    pass


class IndexOutOfRange(LieError):
    pass


class AntisymmetryConflict(LieError):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"conflicting entries for bracket pair ({i + 1}, {j + 1})")


class JacobiViolation(LieError):
    def __init__(self, i: int, j: int, k: int, residual: Vector):
        self.triple = (i, j, k)
        self.residual = residual
        super().__init__(
            f"Jacobi identity fails on basis triple "
            f"({i + 1}, {j + 1}, {k + 1}); residual {residual}"
        )


class NotAnIdeal(LieError):
    def __init__(self, i: int, witness: Vector):
        self.witness = (i, witness)
        super().__init__(
            f"subspace is not an ideal: bracket with basis vector {i + 1} escapes"
        )


def _densify(n: int, sparse: SparseVec) -> Vector:
    v = [QQ(0)] * n
    for k, c in sparse.items():
        v[k] = c
    return tuple(v)


def _sparsify(v: Vector) -> SparseVec:
    return {k: c for k, c in enumerate(v) if c != 0}


class LieAlgebra:
    """dim + bracket tensor; immutable once built."""

    __slots__ = ("dim", "table", "basis_names")

    def __init__(
        self,
        dim: int,
        table: dict[tuple[int, int], SparseVec],
        basis_names: tuple[str, ...] | None = None,
        _validate: bool = True,
    ):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "basis_names", basis_names)
        if _validate:
            self._check_jacobi()

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @classmethod
    def from_table(
        cls,
        dim: int,
        entries: Iterable[tuple[int, int, Sequence]],
        basis_names: Sequence[str] | None = None,
    ) -> "LieAlgebra":
        """Build from 1-based entries (i, j, vector) with [e_i, e_j] = vector.

        Only one orientation per pair is needed; the other is filled by
        antisymmetry.  Supplying both orientations is allowed when they are
        consistent, otherwise AntisymmetryConflict.
        """
        table: dict[tuple[int, int], SparseVec] = {}
        seen: dict[tuple[int, int], SparseVec] = {}
        for i1, j1, vec in entries:
            i, j = i1 - 1, j1 - 1
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexOutOfRange(
                    f"bracket pair ({i1}, {j1}) out of range for dim {dim}"
                )
            v = tuple(qq(x) for x in vec)
            if len(v) != dim:
                raise IndexOutOfRange(
                    f"bracket value for ({i1}, {j1}) has length {len(v)}, expected {dim}"
                )
            if i == j:
                if not vec_is_zero(v):
                    raise AntisymmetryConflict(i, j)
                continue
            sv = _sparsify(v)
            neg = {k: -c for k, c in sv.items()}
            for key, val in (((i, j), sv), ((j, i), neg)):
                if key in seen and seen[key] != val:
                    raise AntisymmetryConflict(*key)
                seen[key] = val
                if val:
                    table[key] = val
        if basis_names is not None:
            names = tuple(basis_names)
            if len(names) != dim:
                raise IndexOutOfRange("basis_names length differs from dim")
        else:
            names = None
        return cls(dim, table, names)

    def _check_jacobi(self):
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    acc: SparseVec = {}
                    for u, v, w in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self.table.get((u, v))
                        if not inner:
                            continue
                        for m, c in inner.items():
                            outer = self.table.get((m, w))
                            if not outer:
                                continue
                            for t, d in outer.items():
                                acc[t] = acc.get(t, QQ(0)) + c * d
                    if any(c != 0 for c in acc.values()):
                        raise JacobiViolation(i, j, k, _densify(n, acc))

    # -- brackets ------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> SparseVec:
        """[e_i, e_j] (0-based), sparse."""
        return self.table.get((i, j), {})

    def bracket(self, u: Vector, v: Vector) -> Vector:
        """Bracket of two coordinate vectors, by bilinear expansion."""
        n = self.dim
        if len(u) != n or len(v) != n:
            raise IndexOutOfRange("vector length differs from dim")
        acc = [QQ(0)] * n
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                entry = self.table.get((i, j))
                if entry:
                    ab = a * b
                    for k, c in entry.items():
                        acc[k] += ab * c
        return tuple(acc)

    def bracket_sparse(self, u: SparseVec, v: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for i, a in u.items():
            for j, b in v.items():
                entry = self.table.get((i, j))
                if entry:
                    ab = a * b
                    for k, c in entry.items():
                        acc[k] = acc.get(k, QQ(0)) + ab * c
        return {k: c for k, c in acc.items() if c != 0}

    def ad(self, x: Vector) -> Matrix:
        """Matrix of y -> [x, y] in the chosen basis."""
        n = self.dim
        cols = []
        for j in range(n):
            col = [QQ(0)] * n
            for i, a in enumerate(x):
                if a == 0:
                    continue
                entry = self.table.get((i, j))
                if entry:
                    for k, c in entry.items():
                        col[k] += a * c
            cols.append(tuple(col))
        return Matrix.from_columns(cols)

    def ad_basis(self, i: int) -> Matrix:
        return self.ad(tuple(QQ(1) if t == i else QQ(0) for t in range(self.dim)))

    def structure_tensor(self) -> tuple:
        """Dense c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k."""
        n = self.dim
        return tuple(
            tuple(_densify(n, self.table.get((i, j), {})) for j in range(n))
            for i in range(n)
        )

    def __repr__(self):
        return f"LieAlgebra(dim {self.dim})"

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.dim, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.table.items()))))


def lie_from_table(dim, entries, basis_names=None) -> LieAlgebra:
    return LieAlgebra.from_table(dim, entries, basis_names)


def abelian_lie(dim: int) -> LieAlgebra:
    return LieAlgebra(dim, {})


def direct_sum_with_abelian(g: LieAlgebra, extra: int) -> LieAlgebra:
    """g + an abelian complement of dimension extra (brackets unchanged)."""
    n = g.dim
    table = {
        (i, j): dict(v) for (i, j), v in g.table.items()
    }
    return LieAlgebra(n + extra, table, _validate=False)


# -- subspace helpers ----------------------------------------------------


def bracket_subspaces(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """Span of [a, b]."""
    vecs = []
    for u in a.basis_vectors():
        for v in b.basis_vectors():
            vecs.append(g.bracket(u, v))
    return Subspace.from_vectors(g.dim, vecs)


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    n = g.dim
    for v in s.basis_vectors():
        for i in range(n):
            w = g.bracket(tuple(QQ(1) if t == i else QQ(0) for t in range(n)), v)
            if not s.contains(w):
                return False
    return True


# -- series --------------------------------------------------------------


@dataclass(frozen=True)
class SeriesReport:
    """Terms of a subspace series; the last term is repeated once to
    witness stabilization, and dims() drops that repetition."""

    terms: tuple[Subspace, ...]
    stabilized: bool

    def dims(self) -> tuple[int, ...]:
        ds = tuple(t.dim for t in self.terms)
        if self.stabilized and len(ds) >= 2:
            return ds[:-1]
        return ds


def _run_series(first: Subspace, step) -> SeriesReport:
    terms = [first]
    while True:
        nxt = step(terms[-1])
        terms.append(nxt)
        if nxt == terms[-2]:
            return SeriesReport(tuple(terms), True)
        if len(terms) > first.ambient_dim + 2:
            return SeriesReport(tuple(terms), False)


def lower_central_series(g: LieAlgebra) -> SeriesReport:
    """gamma_1 = g, gamma_{i+1} = [g, gamma_i]."""
    full = Subspace.full(g.dim)
    return _run_series(full, lambda s: bracket_subspaces(g, full, s))


def derived_series(g: LieAlgebra) -> SeriesReport:
    """g^(0) = g, g^(i+1) = [g^(i), g^(i)]."""
    full = Subspace.full(g.dim)
    return _run_series(full, lambda s: bracket_subspaces(g, s, s))


def center(g: LieAlgebra) -> Subspace:
    """Kernel of x -> (all brackets [e_i, x])."""
    n = g.dim
    if n == 0:
        return Subspace.zero(0)
    rows = []
    for i in range(n):
        ad_i = g.ad_basis(i)
        rows.extend(ad_i.entries)
    return nullspace(Matrix(rows))


def upper_central_series(g: LieAlgebra) -> SeriesReport:
    """Z_1 = center; Z_{i+1} is the preimage of the center of g / Z_i.

    Computed through explicit quotients; tests cross-check against the
    direct characterization Z_{i+1} = {x : [x, g] inside Z_i}.
    """
    z = center(g)
    terms = [z]
    while True:
        current = terms[-1]
        if current.dim == g.dim:
            nxt = current
        else:
            q, _ = quotient_by_ideal(g, current)
            zq = center(q)
            lifted = [v for v in current.basis_vectors()]
            # pull the quotient center back through a section of proj
            section = _section_of_projection(g.dim, current)
            for w in zq.basis_vectors():
                lifted.append(section.apply(w))
            nxt = Subspace.from_vectors(g.dim, lifted)
        terms.append(nxt)
        if nxt == current:
            return SeriesReport(tuple(terms), True)
        if len(terms) > g.dim + 2:
            return SeriesReport(tuple(terms), False)


def upper_central_series_direct(g: LieAlgebra) -> SeriesReport:
    """Oracle variant: Z_{i+1} = {x : [e_j, x] in Z_i for all j}."""
    n = g.dim
    terms = [center(g)]
    while True:
        current = terms[-1]
        if current.dim == n:
            nxt = current
        else:
            residual = _residual_matrix(current)
            rows = []
            for j in range(n):
                rows.extend((residual @ g.ad_basis(j)).entries)
            nxt = nullspace(Matrix(rows))
        terms.append(nxt)
        if nxt == current:
            return SeriesReport(tuple(terms), True)
        if len(terms) > n + 2:
            return SeriesReport(tuple(terms), False)


def _residual_matrix(s: Subspace) -> Matrix:
    """Matrix of w -> (w reduced by the RREF basis of s)."""
    n = s.ambient_dim
    ident = [[QQ(1) if i == j else QQ(0) for j in range(n)] for i in range(n)]
    for row, p in zip(s.basis.entries, s.pivots()):
        for m in range(n):
            ident[m][p] -= row[m]
    return Matrix(ident)


def _section_of_projection(n: int, ideal: Subspace) -> Matrix:
    """Section sending quotient coordinates back to the non-pivot basis
    vectors of the ambient space (the quotient basis convention)."""
    pivot_set = set(ideal.pivots())
    free = [j for j in range(n) if j not in pivot_set]
    cols = [tuple(QQ(1) if t == f else QQ(0) for t in range(n)) for f in free]
    return Matrix.from_columns(cols)


def quotient_by_ideal(g: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, Matrix]:
    """Quotient Lie algebra and the projection matrix onto it.

    The quotient basis is the image of the standard basis vectors at the
    non-pivot coordinates of the ideal's RREF basis.
    """
    n = g.dim
    if ideal.ambient_dim != n:
        raise IndexOutOfRange("ideal lives in the wrong ambient space")
    for v in ideal.basis_vectors():
        for i in range(n):
            w = g.bracket(tuple(QQ(1) if t == i else QQ(0) for t in range(n)), v)
            if not ideal.contains(w):
                raise NotAnIdeal(i, v)
    residual = _residual_matrix(ideal)
    pivot_set = set(ideal.pivots())
    free = [j for j in range(n) if j not in pivot_set]
    m = len(free)
    proj_rows = [residual.entries[f] for f in free]
    proj = Matrix(proj_rows) if proj_rows else Matrix.zero(0, n)
    table: dict[tuple[int, int], SparseVec] = {}
    for a in range(m):
        for b in range(a + 1, m):
            w = g.bracket_basis(free[a], free[b])
            if not w:
                continue
            img = proj.apply(_densify(n, w))
            sv = _sparsify(img)
            if sv:
                table[(a, b)] = sv
                table[(b, a)] = {k: -c for k, c in sv.items()}
    q = LieAlgebra(m, table, _validate=False)
    return q, proj


# -- classification ------------------------------------------------------


@dataclass(frozen=True)
class SolvabilityReport:
    solvable_class: int | None
    nilpotency_class: int | None
    is_two_step_solvable: bool


def second_derived_is_zero(g: LieAlgebra) -> bool:
    full = Subspace.full(g.dim)
    d1 = bracket_subspaces(g, full, full)
    d2 = bracket_subspaces(g, d1, d1)
    return d2.dim == 0


def classify_solvability(g: LieAlgebra) -> SolvabilityReport:
    ds = derived_series(g)
    d_dims = ds.dims()
    solvable_class = None
    if d_dims[-1] == 0:
        solvable_class = len(d_dims) - 1
    lcs = lower_central_series(g)
    l_dims = lcs.dims()
    nilpotency_class = None
    if l_dims[-1] == 0:
        nilpotency_class = len(l_dims) - 1
    two_step = solvable_class is not None and solvable_class <= 2
    return SolvabilityReport(solvable_class, nilpotency_class, two_step)


def is_two_step_solvable(g: LieAlgebra) -> bool:
    return classify_solvability(g).is_two_step_solvable
