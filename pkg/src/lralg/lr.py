"""LR-algebras: bilinear products whose left and right multiplications
each commute, tied to a Lie algebra by product minus opposite product.

Axioms, for all x, y, z:

    LR1   x(yz) = y(xz)
    LR2   (xy)z = (xz)y
    compat  xy - yx = [x, y]

All checks run over basis tuples, which is equivalent by multilinearity.
The lemma suite re-proves, on a concrete instance, a battery of identities
that hold in every LR-algebra; it is the cross-check used by the catalog
and the structural constraint reductions.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

from .lie import LieAlgebra, SparseVec, _densify, _sparsify, bracket_subspaces
from .linalg import (
    QQ,
    Matrix,
    Subspace,
    Vector,
    matrix_is_nilpotent,
    nullspace,
    qq,
    vec_is_zero,
)


class LRError(ValueError):
    pass


class LR1Violation(LRError):
    def __init__(self, i, j, k, residual):
        self.triple = (i, j, k)
        self.residual = residual
        super().__init__(
            f"left multiplications fail to commute on basis triple "
            f"({i + 1}, {j + 1}, {k + 1}); residual {residual}"
        )


class LR2Violation(LRError):
    def __init__(self, i, j, k, residual):
        self.triple = (i, j, k)
        self.residual = residual
        super().__init__(
            f"right multiplications fail to commute on basis triple "
            f"({i + 1}, {j + 1}, {k + 1}); residual {residual}"
        )


class CompatViolation(LRError):
    def __init__(self, i, j, residual):
        self.pair = (i, j)
        self.residual = residual
        super().__init__(
            f"product does not reproduce the bracket at basis pair "
            f"({i + 1}, {j + 1}); residual {residual}"
        )


@dataclass(frozen=True)
class Violation:
    check: str
    where: tuple
    residual: tuple


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple[Violation, ...]
    counts: dict[str, int]

    def by_check(self, check: str) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.check == check)


class LRAlgebra:
    """Lie algebra plus a product tensor.  Use lr_from_table for the
    validating constructor; this one trusts its input (verify_axioms can
    always be called on the result)."""

    __slots__ = ("g", "table", "complete")

    def __init__(self, g: LieAlgebra, table: dict[tuple[int, int], SparseVec]):
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "complete", self._compute_complete())

    def __setattr__(self, name, value):
        raise AttributeError("LRAlgebra is immutable")

    @property
    def dim(self) -> int:
        return self.g.dim

    def _compute_complete(self) -> bool:
        # Left multiplications commute in a valid instance, so nilpotency
        # of every L(x) follows from nilpotency of the basis operators.
        return all(matrix_is_nilpotent(self.left_mult_basis(i)) for i in range(self.g.dim))

    # -- products ------------------------------------------------------

    def product_basis(self, i: int, j: int) -> SparseVec:
        """e_i . e_j (0-based), sparse."""
        return self.table.get((i, j), {})

    def product(self, u: Vector, v: Vector) -> Vector:
        n = self.dim
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

    def product_sparse(self, u: SparseVec, v: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for i, a in u.items():
            for j, b in v.items():
                entry = self.table.get((i, j))
                if entry:
                    ab = a * b
                    for k, c in entry.items():
                        acc[k] = acc.get(k, QQ(0)) + ab * c
        return {k: c for k, c in acc.items() if c != 0}

    def left_mult(self, x: Vector) -> Matrix:
        """Matrix of y -> x . y."""
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

    def right_mult(self, x: Vector) -> Matrix:
        """Matrix of y -> y . x."""
        n = self.dim
        cols = []
        for j in range(n):
            col = [QQ(0)] * n
            for i, a in enumerate(x):
                if a == 0:
                    continue
                entry = self.table.get((j, i))
                if entry:
                    for k, c in entry.items():
                        col[k] += a * c
            cols.append(tuple(col))
        return Matrix.from_columns(cols)

    def left_mult_basis(self, i: int) -> Matrix:
        n = self.dim
        return Matrix.from_columns(
            [_densify(n, self.table.get((i, j), {})) for j in range(n)]
        )

    def right_mult_basis(self, i: int) -> Matrix:
        n = self.dim
        return Matrix.from_columns(
            [_densify(n, self.table.get((j, i), {})) for j in range(n)]
        )

    def product_tensor(self) -> tuple:
        n = self.dim
        return tuple(
            tuple(_densify(n, self.table.get((i, j), {})) for j in range(n))
            for i in range(n)
        )

    def __repr__(self):
        return f"LRAlgebra(dim {self.dim}, complete={self.complete})"

    def __eq__(self, other):
        return (
            isinstance(other, LRAlgebra)
            and self.g == other.g
            and self.table == other.table
        )


def lr_from_table(
    g: LieAlgebra,
    entries: Iterable[tuple[int, int, Sequence]],
    validate: bool = True,
) -> LRAlgebra:
    """Validating constructor from 1-based (i, j, vector) with e_i.e_j = vector.

    Products are not antisymmetric, so each ordered pair stands on its own;
    pairs not listed multiply to zero.  Raises the typed axiom violation
    carrying the first failing basis tuple and its exact residual; with
    validate=False the table is only checked for shape, so callers can run
    verify_axioms themselves for a full report.
    """
    n = g.dim
    table: dict[tuple[int, int], SparseVec] = {}
    seen: dict[tuple[int, int], SparseVec] = {}
    from .lie import AntisymmetryConflict, IndexOutOfRange

    for i1, j1, vec in entries:
        i, j = i1 - 1, j1 - 1
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(
                f"product pair ({i1}, {j1}) out of range for dim {n}"
            )
        v = tuple(qq(x) for x in vec)
        if len(v) != n:
            raise IndexOutOfRange(
                f"product value for ({i1}, {j1}) has length {len(v)}, expected {n}"
            )
        sv = _sparsify(v)
        if (i, j) in seen and seen[(i, j)] != sv:
            raise AntisymmetryConflict(i, j)
        seen[(i, j)] = sv
        if sv:
            table[(i, j)] = sv
    a = LRAlgebra(g, table)
    if validate:
        report = verify_axioms(a, collect_all=False)
        if not report.ok:
            v = report.violations[0]
            raisers = {
                "left_commute": LR1Violation,
                "right_commute": LR2Violation,
                "compat": CompatViolation,
            }
            raise raisers[v.check](*v.where, v.residual)
    return a


def verify_axioms(a: LRAlgebra, collect_all: bool = True) -> VerificationReport:
    """Check LR1, LR2 and bracket compatibility over all basis tuples."""
    n = a.dim
    g = a.g
    violations: list[Violation] = []
    counts = {"left_commute": 0, "right_commute": 0, "compat": 0}

    def lapply(i: int, v: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for m, c in v.items():
            entry = a.table.get((i, m))
            if entry:
                for k, d in entry.items():
                    acc[k] = acc.get(k, QQ(0)) + c * d
        return acc

    def rapply(v: SparseVec, k: int) -> SparseVec:
        acc: SparseVec = {}
        for m, c in v.items():
            entry = a.table.get((m, k))
            if entry:
                for t, d in entry.items():
                    acc[t] = acc.get(t, QQ(0)) + c * d
        return acc

    def sub(u: SparseVec, v: SparseVec) -> SparseVec:
        acc = dict(u)
        for k, c in v.items():
            acc[k] = acc.get(k, QQ(0)) - c
        return {k: c for k, c in acc.items() if c != 0}

    for i in range(n):
        for j in range(i + 1, n):
            counts["compat"] += 1
            res = sub(
                sub(a.product_basis(i, j), a.product_basis(j, i)),
                g.bracket_basis(i, j),
            )
            if res:
                violations.append(
                    Violation("compat", (i, j), _densify(n, res))
                )
                if not collect_all:
                    return VerificationReport(False, tuple(violations), counts)
            for k in range(n):
                counts["left_commute"] += 1
                res = sub(
                    lapply(i, a.product_basis(j, k)),
                    lapply(j, a.product_basis(i, k)),
                )
                if res:
                    violations.append(
                        Violation("left_commute", (i, j, k), _densify(n, res))
                    )
                    if not collect_all:
                        return VerificationReport(False, tuple(violations), counts)
                counts["right_commute"] += 1
                res = sub(
                    rapply(a.product_basis(k, i), j),
                    rapply(a.product_basis(k, j), i),
                )
                if res:
                    violations.append(
                        Violation("right_commute", (k, i, j), _densify(n, res))
                    )
                    if not collect_all:
                        return VerificationReport(False, tuple(violations), counts)
    return VerificationReport(not violations, tuple(violations), counts)


def is_complete(a: LRAlgebra) -> bool:
    return a.complete


def center(a: LRAlgebra) -> Subspace:
    """Kernel of all L(e_i) - R(e_i); coincides with the Lie center."""
    n = a.dim
    rows = []
    for i in range(n):
        rows.extend((a.left_mult_basis(i) - a.right_mult_basis(i)).entries)
    if not rows:
        return Subspace.full(n)
    return nullspace(Matrix(rows))


def ideal_product(a: LRAlgebra, s: Subspace, t: Subspace) -> Subspace:
    """Span of s . t."""
    vecs = []
    for u in s.basis_vectors():
        for v in t.basis_vectors():
            vecs.append(a.product(u, v))
    return Subspace.from_vectors(a.dim, vecs)


def bracket_span(a: LRAlgebra, s: Subspace, t: Subspace) -> Subspace:
    return bracket_subspaces(a.g, s, t)


def is_two_sided_ideal(a: LRAlgebra, s: Subspace) -> bool:
    """A.s inside s and s.A inside s, checked on basis elements."""
    n = a.dim
    for v in s.basis_vectors():
        sv = _sparsify(v)
        for i in range(n):
            left = a.product_sparse({i: QQ(1)}, sv)
            if left and not s.contains(_densify(n, left)):
                return False
            right = a.product_sparse(sv, {i: QQ(1)})
            if right and not s.contains(_densify(n, right)):
                return False
    return True


_EXHAUSTIVE_4TUPLE_CUTOFF = 20


def lemma_suite(a: LRAlgebra, depth: int | None = None) -> VerificationReport:
    """Re-derive, on this instance, identities valid in every LR-algebra.

    Exact residuals throughout; any nonzero residual is reported with the
    tuple of basis indices (or series indices) that produced it.  For the
    two quartic identities the check runs over a spanning set of the
    product span / derived subalgebra once the dimension makes the raw
    4-tuple loop unreasonable; bilinearity makes that equivalent.
    """
    from .lie import lower_central_series, upper_central_series

    n = a.dim
    g = a.g
    violations: list[Violation] = []
    counts: dict[str, int] = {}

    def note(check: str, where: tuple, residual) -> None:
        violations.append(Violation(check, where, tuple(residual)))

    def bump(check: str, k: int = 1) -> None:
        counts[check] = counts.get(check, 0) + k

    basis = [{i: QQ(1)} for i in range(n)]
    prod = a.product_sparse
    brak = g.bracket_sparse

    def sadd(u: SparseVec, v: SparseVec) -> SparseVec:
        acc = dict(u)
        for k, c in v.items():
            acc[k] = acc.get(k, QQ(0)) + c
        return {k: c for k, c in acc.items() if c != 0}

    # cyclic product identities
    for i in range(n):
        for j in range(n):
            bij = brak(basis[i], basis[j])
            for k in range(n):
                bump("product_cycle_left")
                acc = prod(bij, basis[k])
                acc = sadd(acc, prod(brak(basis[j], basis[k]), basis[i]))
                acc = sadd(acc, prod(brak(basis[k], basis[i]), basis[j]))
                if acc:
                    note("product_cycle_left", (i, j, k), _densify(n, acc))
                bump("product_cycle_right")
                acc = prod(basis[k], bij)
                acc = sadd(acc, prod(basis[i], brak(basis[j], basis[k])))
                acc = sadd(acc, prod(basis[j], brak(basis[k], basis[i])))
                if acc:
                    note("product_cycle_right", (i, j, k), _densify(n, acc))

    # operator identities, applied to basis vectors: for every pair (i, j)
    #   ad([ei,ej]) = [ad ei, L ej] + [L ei, ad ej]
    #   ad([ei,ej]) = -[ad ei, R ej] - [R ei, ad ej]
    def ad_apply(i: int, v: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for m, c in v.items():
            entry = g.table.get((i, m))
            if entry:
                for t, d in entry.items():
                    acc[t] = acc.get(t, QQ(0)) + c * d
        return {k: c for k, c in acc.items() if c != 0}

    def ad_vec_apply(x: SparseVec, v: SparseVec) -> SparseVec:
        acc: SparseVec = {}
        for i, c in x.items():
            part = ad_apply(i, v)
            for t, d in part.items():
                acc[t] = acc.get(t, QQ(0)) + c * d
        return {k: c for k, c in acc.items() if c != 0}

    def lmul(i: int, v: SparseVec) -> SparseVec:
        return prod({i: QQ(1)}, v)

    def rmul(v: SparseVec, i: int) -> SparseVec:
        return prod(v, {i: QQ(1)})

    def sneg(v: SparseVec) -> SparseVec:
        return {k: -c for k, c in v.items()}

    for i in range(n):
        for j in range(n):
            cij = brak(basis[i], basis[j])
            for k in range(n):
                ek = basis[k]
                bump("ad_product_rule_left")
                lhs = ad_vec_apply(cij, ek)
                rhs = ad_apply(i, lmul(j, ek))
                rhs = sadd(rhs, sneg(lmul(j, ad_apply(i, ek))))
                rhs = sadd(rhs, lmul(i, ad_apply(j, ek)))
                rhs = sadd(rhs, sneg(ad_apply(j, lmul(i, ek))))
                res = sadd(lhs, sneg(rhs))
                if res:
                    note("ad_product_rule_left", (i, j, k), _densify(n, res))
                bump("ad_product_rule_right")
                rhs = ad_apply(i, rmul(ek, j))
                rhs = sadd(rhs, sneg(rmul(ad_apply(i, ek), j)))
                rhs = sadd(rhs, rmul(ad_apply(j, ek), i))
                rhs = sadd(rhs, sneg(ad_apply(j, rmul(ek, i))))
                res = sadd(lhs, rhs)
                if res:
                    note("ad_product_rule_right", (i, j, k), _densify(n, res))

    # quartic identities
    if n <= _EXHAUSTIVE_4TUPLE_CUTOFF:
        prods = {
            (i, j): a.product_basis(i, j) for i in range(n) for j in range(n)
        }
        braks = {(i, j): g.bracket_basis(i, j) for i in range(n) for j in range(n)}
        keys = [k for k in prods if prods[k]]
        bkeys = [k for k in braks if braks[k]]
        for (i, j) in keys:
            for (u, v) in keys:
                bump("product_square_commute")
                res = sadd(
                    prod(prods[(i, j)], prods[(u, v)]),
                    sneg(prod(prods[(u, v)], prods[(i, j)])),
                )
                if res:
                    note("product_square_commute", (i, j, u, v), _densify(n, res))
        for (i, j) in bkeys:
            for (u, v) in bkeys:
                bump("derived_brackets_vanish")
                res = brak(braks[(i, j)], braks[(u, v)])
                if res:
                    note("derived_brackets_vanish", (i, j, u, v), _densify(n, res))
    else:
        pspan = Subspace.from_vectors(
            n, [_densify(n, v) for v in (a.product_basis(i, j) for i in range(n) for j in range(n)) if v]
        )
        pb = pspan.basis_vectors()
        for si, u in enumerate(pb):
            for sj, v in enumerate(pb):
                bump("product_square_commute")
                res = sadd(prod(_sparsify(u), _sparsify(v)), sneg(prod(_sparsify(v), _sparsify(u))))
                if res:
                    note("product_square_commute", ("span", si, sj), _densify(n, res))
        dspan = bracket_subspaces(g, Subspace.full(n), Subspace.full(n))
        db = dspan.basis_vectors()
        for si, u in enumerate(db):
            for sj, v in enumerate(db):
                bump("derived_brackets_vanish")
                res = brak(_sparsify(u), _sparsify(v))
                if res:
                    note("derived_brackets_vanish", ("span", si, sj), _densify(n, res))

    # the associated Lie algebra is solvable in two steps
    from .lie import second_derived_is_zero

    bump("two_step_solvable")
    if not second_derived_is_zero(g):
        note("two_step_solvable", (), ())

    # series terms are two-sided ideals
    lcs = lower_central_series(g)
    ucs = upper_central_series(g)
    if depth is None:
        depth = max(len(lcs.terms), len(ucs.terms))
    gammas = lcs.terms[: depth + 1]
    zs = ucs.terms[:depth]
    for idx, s in enumerate(gammas):
        bump("lower_series_two_sided_ideal")
        if not is_two_sided_ideal(a, s):
            note("lower_series_two_sided_ideal", ("gamma", idx + 1), ())
    for idx, s in enumerate(zs):
        bump("upper_series_two_sided_ideal")
        if not is_two_sided_ideal(a, s):
            note("upper_series_two_sided_ideal", ("Z", idx + 1), ())

    # center annihilates the derived subalgebra on both sides
    zc = center(a)
    derived = bracket_subspaces(g, Subspace.full(n), Subspace.full(n))
    bump("center_kills_derived", 2)
    if ideal_product(a, zc, derived).dim != 0:
        note("center_kills_derived", ("left",), ())
    if ideal_product(a, derived, zc).dim != 0:
        note("center_kills_derived", ("right",), ())

    # graded containment: gamma_{i+1} . gamma_{j+1} inside gamma_{i+j+1}
    terms = lcs.terms

    def gamma(k: int) -> Subspace:
        # series is stabilized past its recorded tail
        return terms[min(k - 1, len(terms) - 1)]

    for i in range(1, depth + 1):
        for j in range(1, depth + 1):
            bump("series_product_grading")
            pij = ideal_product(a, gamma(i + 1), gamma(j + 1))
            if not gamma(i + j + 1).contains_subspace(pij):
                note("series_product_grading", (i + 1, j + 1), ())

    # left and right multiplications act as bracket derivations
    for i in range(n):
        for j in range(n):
            for k in range(n):
                bump("left_derivation")
                res = sadd(
                    lmul(i, brak(basis[j], basis[k])),
                    sneg(
                        sadd(
                            brak(lmul(i, basis[j]), basis[k]),
                            brak(basis[j], lmul(i, basis[k])),
                        )
                    ),
                )
                if res:
                    note("left_derivation", (i, j, k), _densify(n, res))
                bump("right_derivation")
                res = sadd(
                    rmul(brak(basis[j], basis[k]), i),
                    sneg(
                        sadd(
                            brak(rmul(basis[j], i), basis[k]),
                            brak(basis[j], rmul(basis[k], i)),
                        )
                    ),
                )
                if res:
                    note("right_derivation", (i, j, k), _densify(n, res))

    return VerificationReport(not violations, tuple(violations), counts)
