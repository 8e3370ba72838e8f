"""Polynomial constraint systems deciding whether a Lie algebra carries
an LR-structure.

A product on a Lie algebra g of dimension n is a tensor of n^3 unknowns

    x[i][j][k] = coefficient of e_j in e_i . e_k

so that the left multiplication by e_i is the matrix L_i with entries
(L_i)[j][k] = x[i][j][k].  The generated system consists of

  * linear rows forcing product-minus-opposite to equal the bracket,
  * quadratic rows forcing the left multiplications to commute,
  * quadratic rows forcing the right multiplications to commute,

and has a solution exactly when an LR-structure exists.

Structural reduction adds linear consequences of the axioms (each row
tagged by the identity it comes from, mirroring the lemma suite), runs
sparse Gaussian elimination, substitutes into the quadratics, and
iterates while new linear rows keep appearing.  The reduced system is
equisolvable with the original one.  Certification feeds the residual
polynomials to the budgeted Groebner engine and reports inconsistency,
possible solvability, or budget exhaustion.
"""

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .lie import LieAlgebra, center as lie_center
from .lie import lower_central_series, upper_central_series
from .linalg import QQ, Matrix, Subspace, Vector, qq
from .lr import LRAlgebra
from .poly import (
    GroebnerResult,
    MissingAssignment,
    Polynomial,
    groebner_basis,
)


class ConstraintError(ValueError):
    pass


class IncompleteAssignment(ConstraintError):
    def __init__(self, var_name: str):
        self.var_name = var_name
        super().__init__(f"assignment is missing a value for {var_name}")


@dataclass
class ConstraintSystem:
    """The raw polynomial system for products on a fixed Lie algebra."""

    g: LieAlgebra
    polys: list[Polynomial]
    tags: list[str]

    @property
    def nvars(self) -> int:
        return self.g.dim ** 3

    def var_index(self, i: int, j: int, k: int) -> int:
        n = self.g.dim
        return (i * n + j) * n + k

    def var_triple(self, v: int) -> tuple[int, int, int]:
        n = self.g.dim
        return v // (n * n), (v // n) % n, v % n

    def var_name(self, v: int) -> str:
        i, j, k = self.var_triple(v)
        return f"x[{i + 1}][{j + 1}][{k + 1}]"

    def used_variables(self) -> set[int]:
        out: set[int] = set()
        for p in self.polys:
            out |= p.variables()
        return out


def _var(system_dim: int, i: int, j: int, k: int) -> int:
    return (i * system_dim + j) * system_dim + k


def generate_lr_system(g: LieAlgebra) -> ConstraintSystem:
    """Compatibility rows, then commuting left multiplications, then
    commuting right multiplications, in a fixed deterministic order."""
    n = g.dim
    polys: list[Polynomial] = []
    tags: list[str] = []

    def add(tag: str, terms: dict):
        p = Polynomial(terms)
        if not p.is_zero():
            polys.append(p)
            tags.append(tag)

    for i in range(n):
        for j in range(i + 1, n):
            cij = g.bracket_basis(i, j)
            for k in range(n):
                terms = {
                    ((_var(n, i, k, j), 1),): QQ(1),
                    ((_var(n, j, k, i), 1),): QQ(-1),
                }
                c = cij.get(k, QQ(0))
                if c:
                    terms[()] = -c
                add("compatibility", terms)

    def q(v1: int, v2: int):
        return ((v1, 2),) if v1 == v2 else tuple(sorted(((v1, 1), (v2, 1))))

    for i in range(n):
        for j in range(i + 1, n):
            for a in range(n):
                for b in range(n):
                    terms: dict = {}
                    for m in range(n):
                        for mono, sign in (
                            (q(_var(n, i, a, m), _var(n, j, m, b)), QQ(1)),
                            (q(_var(n, j, a, m), _var(n, i, m, b)), QQ(-1)),
                        ):
                            s = terms.get(mono, QQ(0)) + sign
                            if s:
                                terms[mono] = s
                            else:
                                terms.pop(mono, None)
                    add("left_commute", terms)
    for i in range(n):
        for j in range(i + 1, n):
            for a in range(n):
                for b in range(n):
                    terms = {}
                    for m in range(n):
                        for mono, sign in (
                            (q(_var(n, m, a, i), _var(n, b, m, j)), QQ(1)),
                            (q(_var(n, m, a, j), _var(n, b, m, i)), QQ(-1)),
                        ):
                            s = terms.get(mono, QQ(0)) + sign
                            if s:
                                terms[mono] = s
                            else:
                                terms.pop(mono, None)
                    add("right_commute", terms)
    return ConstraintSystem(g, polys, tags)


def assignment_from_lr(a: LRAlgebra) -> dict[int, QQ]:
    """Full variable assignment read off an actual product tensor."""
    n = a.dim
    out: dict[int, QQ] = {}
    for i in range(n):
        for k in range(n):
            prod = a.product_basis(i, k)
            for j in range(n):
                out[_var(n, i, j, k)] = prod.get(j, QQ(0))
    return out


def evaluate_candidate(
    system: ConstraintSystem, assignment: Mapping[int, QQ] | LRAlgebra
) -> list[tuple[int, str, QQ]]:
    """Evaluate every constraint at a candidate product.

    The candidate is either a full variable assignment or an LR-algebra
    on the same underlying Lie algebra.  Returns (index, tag, value) for
    each constraint with a nonzero value; raises IncompleteAssignment
    when a needed variable has no value.
    """
    if isinstance(assignment, LRAlgebra):
        if assignment.g != system.g:
            raise ConstraintError(
                "candidate lives on a different Lie algebra than the system"
            )
        assignment = assignment_from_lr(assignment)
    bad = []
    for idx, (p, tag) in enumerate(zip(system.polys, system.tags)):
        try:
            v = p.evaluate(assignment)
        except MissingAssignment as exc:
            raise IncompleteAssignment(system.var_name(exc.var)) from None
        if v != 0:
            bad.append((idx, tag, v))
    return bad


# ---------------------------------------------------------------------------
# structural reduction


STRUCTURAL_RULES = (
    "left_derivation",
    "right_derivation",
    "bracket_product_rule_left",
    "bracket_product_rule_right",
    "left_preserves_lower_central",
    "right_preserves_lower_central",
    "left_preserves_upper_central",
    "right_preserves_upper_central",
    "center_kills_derived_left",
    "center_kills_derived_right",
    "series_product_grading",
)


def _product_linear(n: int, u: Vector, v: Vector) -> list[dict]:
    """Components of u.v as linear forms {var: coeff} in the unknowns."""
    out: list[dict] = [dict() for _ in range(n)]
    for p, cp in enumerate(u):
        if cp == 0:
            continue
        for qx, cq in enumerate(v):
            if cq == 0:
                continue
            c = cp * cq
            for a in range(n):
                w = _var(n, p, a, qx)
                s = out[a].get(w, QQ(0)) + c
                if s:
                    out[a][w] = s
                else:
                    out[a].pop(w, None)
    return out


def _membership_rows(
    vec: list[dict], consts: list[QQ], target: Subspace
) -> list[tuple[dict, QQ]]:
    """Rows forcing an unknown-linear vector into a fixed subspace."""
    n = target.ambient_dim
    rows = []
    if target.dim == n:
        return rows
    basis = target.basis_vectors()
    pivots = target.pivots()
    pivot_set = set(pivots)
    for k in range(n):
        if k in pivot_set:
            continue
        coeffs = dict(vec[k])
        const = consts[k]
        for r, p in enumerate(pivots):
            c = basis[r][k]
            if c == 0:
                continue
            for w, cw in vec[p].items():
                s = coeffs.get(w, QQ(0)) - c * cw
                if s:
                    coeffs[w] = s
                else:
                    coeffs.pop(w, None)
            const -= c * consts[p]
        rows.append((coeffs, const))
    return rows


def _structural_rows(
    g: LieAlgebra, include: Sequence[str]
) -> list[tuple[str, dict, QQ]]:
    n = g.dim
    rows: list[tuple[str, dict, QQ]] = []
    include = set(include)
    zero_consts = [QQ(0)] * n

    def unit(i: int) -> Vector:
        return tuple(QQ(1) if t == i else QQ(0) for t in range(n))

    def emit(tag: str, produced: Iterable[tuple[dict, QQ]]):
        for coeffs, const in produced:
            if coeffs or const:
                rows.append((tag, coeffs, const))

    if "left_derivation" in include or "right_derivation" in include:
        tensor = {
            (j, k): g.bracket_basis(j, k) for j in range(n) for k in range(n)
        }
        for i in range(n):
            for j in range(n):
                for k in range(j + 1, n):
                    cjk = tensor[(j, k)]
                    if "left_derivation" in include:
                        for a in range(n):
                            coeffs: dict = {}

                            def bump(w, c):
                                s = coeffs.get(w, QQ(0)) + c
                                if s:
                                    coeffs[w] = s
                                else:
                                    coeffs.pop(w, None)

                            for m, c in cjk.items():
                                bump(_var(n, i, a, m), c)
                            for m in range(n):
                                c = tensor[(m, k)].get(a, QQ(0))
                                if c:
                                    bump(_var(n, i, m, j), -c)
                                c = tensor[(j, m)].get(a, QQ(0))
                                if c:
                                    bump(_var(n, i, m, k), -c)
                            if coeffs:
                                rows.append(("left_derivation", coeffs, QQ(0)))
                    if "right_derivation" in include:
                        for a in range(n):
                            coeffs = {}

                            def bump(w, c):
                                s = coeffs.get(w, QQ(0)) + c
                                if s:
                                    coeffs[w] = s
                                else:
                                    coeffs.pop(w, None)

                            for m, c in cjk.items():
                                bump(_var(n, m, a, i), c)
                            for m in range(n):
                                c = tensor[(m, k)].get(a, QQ(0))
                                if c:
                                    bump(_var(n, j, m, i), -c)
                                c = tensor[(j, m)].get(a, QQ(0))
                                if c:
                                    bump(_var(n, k, m, i), -c)
                            if coeffs:
                                rows.append(("right_derivation", coeffs, QQ(0)))

    if (
        "bracket_product_rule_left" in include
        or "bracket_product_rule_right" in include
    ):
        ads = [g.ad_basis(i) for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                adc = g.ad(
                    tuple(
                        g.bracket_basis(i, j).get(t, QQ(0)) for t in range(n)
                    )
                )
                ai, aj = ads[i], ads[j]
                if "bracket_product_rule_left" in include:
                    # ad[ei,ej] = [ad_i, L_j] + [L_i, ad_j], entrywise
                    for a in range(n):
                        for b in range(n):
                            coeffs = {}

                            def bump(w, c):
                                s = coeffs.get(w, QQ(0)) + c
                                if s:
                                    coeffs[w] = s
                                else:
                                    coeffs.pop(w, None)

                            for m in range(n):
                                if ai.entries[a][m]:
                                    bump(_var(n, j, m, b), -ai.entries[a][m])
                                if ai.entries[m][b]:
                                    bump(_var(n, j, a, m), ai.entries[m][b])
                                if aj.entries[m][b]:
                                    bump(_var(n, i, a, m), -aj.entries[m][b])
                                if aj.entries[a][m]:
                                    bump(_var(n, i, m, b), aj.entries[a][m])
                            const = adc.entries[a][b]
                            if coeffs or const:
                                rows.append(
                                    ("bracket_product_rule_left", coeffs, const)
                                )
                if "bracket_product_rule_right" in include:
                    # ad[ei,ej] = -[ad_i, R_j] - [R_i, ad_j], entrywise
                    for a in range(n):
                        for b in range(n):
                            coeffs = {}

                            def bump(w, c):
                                s = coeffs.get(w, QQ(0)) + c
                                if s:
                                    coeffs[w] = s
                                else:
                                    coeffs.pop(w, None)

                            for m in range(n):
                                if ai.entries[a][m]:
                                    bump(_var(n, b, m, j), ai.entries[a][m])
                                if ai.entries[m][b]:
                                    bump(_var(n, m, a, j), -ai.entries[m][b])
                                if aj.entries[m][b]:
                                    bump(_var(n, m, a, i), aj.entries[m][b])
                                if aj.entries[a][m]:
                                    bump(_var(n, b, m, i), -aj.entries[a][m])
                            const = adc.entries[a][b]
                            if coeffs or const:
                                rows.append(
                                    ("bracket_product_rule_right", coeffs, const)
                                )

    lcs = lower_central_series(g)
    ucs = upper_central_series(g)

    def gamma(k1: int) -> Subspace:
        terms = lcs.terms
        return terms[min(k1 - 1, len(terms) - 1)]

    series_targets = [("lower", s) for s in lcs.terms[1:]] + [
        ("upper", s) for s in ucs.terms
    ]
    for kind, s in series_targets:
        if s.dim == n:
            continue
        for tagside, left in (
            (f"left_preserves_{kind}_central", True),
            (f"right_preserves_{kind}_central", False),
        ):
            if tagside not in include:
                continue
            for i in range(n):
                for v in s.basis_vectors():
                    vec = (
                        _product_linear(n, unit(i), v)
                        if left
                        else _product_linear(n, v, unit(i))
                    )
                    emit(tagside, _membership_rows(vec, zero_consts, s))

    z = lie_center(g)
    derived = gamma(2)
    zero = Subspace.zero(n)
    if "center_kills_derived_left" in include:
        for zv in z.basis_vectors():
            for dv in derived.basis_vectors():
                vec = _product_linear(n, zv, dv)
                emit(
                    "center_kills_derived_left",
                    _membership_rows(vec, zero_consts, zero),
                )
    if "center_kills_derived_right" in include:
        for zv in z.basis_vectors():
            for dv in derived.basis_vectors():
                vec = _product_linear(n, dv, zv)
                emit(
                    "center_kills_derived_right",
                    _membership_rows(vec, zero_consts, zero),
                )

    if "series_product_grading" in include:
        top = len(lcs.terms) + 1
        for i in range(1, top):
            for j in range(1, top):
                src_a, src_b = gamma(i + 1), gamma(j + 1)
                tgt = gamma(i + j + 1)
                if src_a.dim == 0 or src_b.dim == 0 or tgt.dim == n:
                    continue
                for u in src_a.basis_vectors():
                    for v in src_b.basis_vectors():
                        vec = _product_linear(n, u, v)
                        emit(
                            "series_product_grading",
                            _membership_rows(vec, zero_consts, tgt),
                        )
    return rows


def _linear_parts(p: Polynomial):
    """(coeffs, const) when p has degree <= 1, else None."""
    coeffs = {}
    const = QQ(0)
    for m, c in p.terms.items():
        if m == ():
            const = c
        elif len(m) == 1 and m[0][1] == 1:
            coeffs[m[0][0]] = c
        else:
            return None
    return coeffs, const


def _row_to_poly(coeffs: dict, const: QQ) -> Polynomial:
    return Polynomial.linear(coeffs, const)


class _Eliminator:
    """Sparse Gaussian elimination producing var -> affine expression."""

    def __init__(self):
        self.pivots: dict[int, tuple[dict, QQ]] = {}
        self.order: list[int] = []
        self.contradiction = False

    def add(self, coeffs: dict, const: QQ) -> None:
        if self.contradiction:
            return
        coeffs = dict(coeffs)
        while True:
            hit = None
            for v in coeffs:
                if v in self.pivots:
                    if hit is None or v > hit:
                        hit = v
            if hit is None:
                break
            c = coeffs.pop(hit)
            ec, ek = self.pivots[hit]
            for v2, c2 in ec.items():
                s = coeffs.get(v2, QQ(0)) + c * c2
                if s:
                    coeffs[v2] = s
                else:
                    coeffs.pop(v2, None)
            const += c * ek
        if not coeffs:
            if const != 0:
                self.contradiction = True
            return
        p = max(coeffs)
        cp = coeffs.pop(p)
        expr = {v: -c / cp for v, c in coeffs.items()}
        self.pivots[p] = (expr, -const / cp)
        self.order.append(p)

    def finalize(self) -> dict[int, tuple[dict, QQ]]:
        """Rewrite every pivot expression in terms of free variables only.

        A pivot expression can mention variables that became pivots later;
        walking the insertion order backwards resolves them without cycles.
        """
        done: dict[int, tuple[dict, QQ]] = {}
        for p in reversed(self.order):
            ec, ek = self.pivots[p]
            coeffs = {}
            const = ek
            for v, c in ec.items():
                if v in done:
                    dc, dk = done[v]
                    for v2, c2 in dc.items():
                        s = coeffs.get(v2, QQ(0)) + c * c2
                        if s:
                            coeffs[v2] = s
                        else:
                            coeffs.pop(v2, None)
                    const += c * dk
                else:
                    s = coeffs.get(v, QQ(0)) + c
                    if s:
                        coeffs[v] = s
                    else:
                        coeffs.pop(v, None)
            done[p] = (coeffs, const)
        self.pivots = done
        return done


def _substitute_affine(
    p: Polynomial, elim: dict[int, tuple[dict, QQ]]
) -> Polynomial:
    """Substitute affine expressions into a polynomial of degree <= 2."""
    out: dict = {}

    def bump(mono, c):
        s = out.get(mono, QQ(0)) + c
        if s:
            out[mono] = s
        else:
            out.pop(mono, None)

    def affine(v):
        got = elim.get(v)
        if got is None:
            return ({v: QQ(1)}, QQ(0))
        return got

    for m, c in p.terms.items():
        if m == ():
            bump((), c)
            continue
        if len(m) == 1 and m[0][1] == 1:
            v = m[0][0]
            if v in elim:
                ec, ek = elim[v]
                for v2, c2 in ec.items():
                    bump(((v2, 1),), c * c2)
                if ek:
                    bump((), c * ek)
            else:
                bump(m, c)
            continue
        if len(m) == 1 and m[0][1] == 2:
            v1 = v2 = m[0][0]
        elif len(m) == 2 and m[0][1] == 1 and m[1][1] == 1:
            v1, v2 = m[0][0], m[1][0]
        else:
            return p.substitute(
                {v: Polynomial.linear(e[0], e[1]) for v, e in elim.items()}
            )
        if v1 not in elim and v2 not in elim:
            bump(m, c)
            continue
        a1, k1 = affine(v1)
        a2, k2 = affine(v2)
        for u1, d1 in a1.items():
            for u2, d2 in a2.items():
                mono = ((u1, 2),) if u1 == u2 else tuple(sorted(((u1, 1), (u2, 1))))
                bump(mono, c * d1 * d2)
        if k2:
            for u1, d1 in a1.items():
                bump(((u1, 1),), c * d1 * k2)
        if k1:
            for u2, d2 in a2.items():
                bump(((u2, 1),), c * d2 * k1)
        if k1 and k2:
            bump((), c * k1 * k2)
    q = Polynomial.__new__(Polynomial)
    q.terms = out
    return q


@dataclass
class ReducedSystem:
    system: ConstraintSystem
    added: list[tuple[str, Polynomial]]
    eliminated: dict[int, Polynomial]
    residual: list[Polynomial]
    contradiction: bool
    stats: dict = field(default_factory=dict)

    @property
    def eliminated_count(self) -> int:
        return len(self.eliminated)

    def forced_zero(self) -> list[int]:
        return sorted(v for v, e in self.eliminated.items() if e.is_zero())

    def free_variables(self) -> list[int]:
        used = self.system.used_variables()
        for tag, p in self.added:
            used |= p.variables()
        return sorted(used - set(self.eliminated))

    def expand(self, free_assignment: Mapping[int, QQ]) -> dict[int, QQ]:
        """Assignment for every variable of the system given values for the
        free ones (unmentioned free variables default to zero)."""
        full: dict[int, QQ] = {}
        for v in self.system.used_variables():
            if v not in self.eliminated:
                full[v] = qq(free_assignment.get(v, 0))
        for v, expr in self.eliminated.items():
            full[v] = expr.evaluate(full)
        return full


def structural_reduce(
    system: ConstraintSystem, include: Sequence[str] | None = None
) -> ReducedSystem:
    """Add tagged linear consequences of the axioms, eliminate, iterate.

    Every added row is a proved identity of LR-structures, so the reduced
    system has exactly the same solution set as the generated one.
    """
    include = tuple(include) if include is not None else STRUCTURAL_RULES
    added_raw = _structural_rows(system.g, include)
    added = [(tag, _row_to_poly(coeffs, const)) for tag, coeffs, const in added_raw]

    elim = _Eliminator()
    quads: list[Polynomial] = []
    pending: list[tuple[dict, QQ]] = []
    for p in system.polys:
        lp = _linear_parts(p)
        if lp is None:
            quads.append(p)
        else:
            pending.append(lp)
    for tag, coeffs, const in added_raw:
        pending.append((coeffs, const))

    rounds = 0
    seen_quads: set = set()
    while pending and not elim.contradiction:
        rounds += 1
        pending.sort(key=lambda rc: (len(rc[0]), sorted(rc[0].items())))
        for coeffs, const in pending:
            elim.add(coeffs, const)
            if elim.contradiction:
                break
        pending = []
        if elim.contradiction:
            break
        table = elim.finalize()
        next_quads: list[Polynomial] = []
        for p in quads:
            r = _substitute_affine(p, table)
            if r.is_zero():
                continue
            lp = _linear_parts(r)
            if lp is None:
                if r not in seen_quads:
                    seen_quads.add(r)
                    next_quads.append(r)
            else:
                pending.append(lp)
        quads = next_quads

    table = elim.finalize()
    eliminated = {
        v: Polynomial.linear(ec, ek) for v, (ec, ek) in table.items()
    }
    residual = list(quads)
    if elim.contradiction:
        residual.insert(0, Polynomial.constant(1))
    stats = {
        "rounds": rounds,
        "eliminated": len(eliminated),
        "added_rows": len(added),
        "residual": len(residual),
    }
    return ReducedSystem(system, added, eliminated, residual, elim.contradiction, stats)


# ---------------------------------------------------------------------------
# certification


@dataclass
class CertifyResult:
    status: str  # "inconsistent" | "solutions_may_exist" | "budget_exhausted"
    groebner: GroebnerResult
    trace: list

    @property
    def certified_unsolvable(self) -> bool:
        return self.status == "inconsistent"


def _polys_of(obj) -> list[Polynomial]:
    if isinstance(obj, ReducedSystem):
        return list(obj.residual)
    if isinstance(obj, ConstraintSystem):
        return list(obj.polys)
    return list(obj)


def buchberger_certify(
    obj,
    *,
    max_basis_size: int = 2000,
    max_degree: int | None = None,
    time_budget: float | None = None,
) -> CertifyResult:
    """Certify a system (raw, reduced, or plain polynomial list).

    "inconsistent" comes with the S-pair trace ending in a nonzero
    constant and certifies that no LR-structure exists.  A completed
    basis that is not the unit ideal reports "solutions_may_exist":
    over the rationals nothing stronger is claimed.  Hitting a budget
    reports "budget_exhausted".
    """
    polys = _polys_of(obj)
    trace: list = []
    res = groebner_basis(
        polys,
        max_basis_size=max_basis_size,
        max_degree=max_degree,
        time_budget=time_budget,
        trace=trace,
    )
    if res.status == "complete":
        status = "inconsistent" if res.is_unit_ideal else "solutions_may_exist"
    else:
        status = "budget_exhausted"
    return CertifyResult(status, res, trace)


# ---------------------------------------------------------------------------
# isomorphism search


_FINGERPRINT_KEYS = (
    "dim",
    "complete",
    "lower_central_dims",
    "derived_dims",
    "upper_central_dims",
    "product_span_dims",
    "left_annihilator_dim",
    "right_annihilator_dim",
    "trace_form_rank_ll",
    "trace_form_rank_rr",
    "trace_form_rank_lr",
)


def lr_fingerprint(a: LRAlgebra) -> dict:
    """Basis-independent invariants of an LR-algebra, used to tell
    non-isomorphic structures apart quickly."""
    from .lie import derived_series
    from .lr import ideal_product

    g = a.g
    n = a.dim
    lcs = lower_central_series(g)
    ucs = upper_central_series(g)
    ds = derived_series(g)

    spans = []
    cur = Subspace.full(n)
    while True:
        nxt = ideal_product(a, cur, cur)
        spans.append(nxt.dim)
        if nxt == cur or nxt.dim == 0:
            break
        cur = nxt

    lmats = [a.left_mult_basis(i) for i in range(n)]
    rmats = [a.right_mult_basis(i) for i in range(n)]

    def ann_dim(mats):
        rows = []
        for jj in range(n):
            for kk in range(n):
                rows.append(tuple(mats[i].entries[jj][kk] for i in range(n)))
        return Matrix(rows).rank()

    def tr(m1: Matrix, m2: Matrix) -> QQ:
        return sum(
            (
                m1.entries[r][c] * m2.entries[c][r]
                for r in range(n)
                for c in range(n)
            ),
            QQ(0),
        )

    def form_rank(ms1, ms2) -> int:
        return Matrix(
            [[tr(ms1[i], ms2[j]) for j in range(n)] for i in range(n)]
        ).rank()

    return {
        "dim": n,
        "complete": a.complete,
        "lower_central_dims": lcs.dims(),
        "derived_dims": ds.dims(),
        "upper_central_dims": ucs.dims(),
        "product_span_dims": tuple(spans),
        "left_annihilator_dim": n - ann_dim(lmats),
        "right_annihilator_dim": n - ann_dim(rmats),
        "trace_form_rank_ll": form_rank(lmats, lmats),
        "trace_form_rank_rr": form_rank(rmats, rmats),
        "trace_form_rank_lr": form_rank(lmats, rmats),
    }


@dataclass
class IsoResult:
    status: str  # "found" | "distinguished" | "undecided"
    transform: Matrix | None = None
    invariant: str | None = None
    detail: str = ""


def _is_lr_isomorphism(a1: LRAlgebra, a2: LRAlgebra, t: Matrix) -> bool:
    """Does T carry the first product to the second, T(x.y) = Tx . Ty?"""
    n = a1.dim
    if t.det() == 0:
        return False
    for i in range(n):
        for j in range(n):
            prod1 = tuple(
                a1.product_basis(i, j).get(k, QQ(0)) for k in range(n)
            )
            if t.apply(prod1) != a2.product(t.column(i), t.column(j)):
                return False
    return True


def _det_poly(entries: list[list[Polynomial]]) -> Polynomial:
    """Determinant by expansion over permutations; fine for small sizes."""
    from itertools import permutations

    n = len(entries)
    acc = Polynomial.zero()
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = Polynomial.constant(sign)
        for i in range(n):
            term = term * entries[i][perm[i]]
        acc = acc + term
    return acc


def iso_search(
    a1: LRAlgebra,
    a2: LRAlgebra,
    *,
    max_basis_size: int = 300,
    time_budget: float | None = 30.0,
) -> IsoResult:
    """Decide, when possible, whether two LR-algebras are isomorphic as
    algebras (bracket correspondence follows from the product one).

    Fast path: compare basis-independent invariants; the first one that
    differs settles the question.  Search path: try a family of simple
    invertible maps.  Certificate path (small dimensions): the change of
    basis equations plus an inverted determinant form a polynomial
    system; its inconsistency certifies non-isomorphism.
    """
    f1, f2 = lr_fingerprint(a1), lr_fingerprint(a2)
    for key in _FINGERPRINT_KEYS:
        if f1[key] != f2[key]:
            return IsoResult(
                "distinguished",
                invariant=key,
                detail=f"{key}: {f1[key]} vs {f2[key]}",
            )
    n = a1.dim

    # heuristic search over signed permutation matrices
    if n <= 4:
        from itertools import permutations, product as iproduct

        for perm in permutations(range(n)):
            for signs in iproduct((QQ(1), QQ(-1)), repeat=n):
                t = Matrix(
                    [
                        [signs[j] if perm[j] == i else QQ(0) for j in range(n)]
                        for i in range(n)
                    ]
                )
                if _is_lr_isomorphism(a1, a2, t):
                    return IsoResult("found", transform=t)

    if n > 4:
        return IsoResult("undecided", detail="dimension too large for the certificate system")

    # polynomial certificate: unknown T entries plus a Rabinowitsch variable
    def tv(i, j):
        return i * n + j

    svar = n * n
    polys: list[Polynomial] = []
    for i in range(n):
        for j in range(n):
            p1 = a1.product_basis(i, j)
            for c in range(n):
                terms: dict = {}
                for k2, coeff in p1.items():
                    mono = ((tv(c, k2), 1),)
                    terms[mono] = terms.get(mono, QQ(0)) + coeff
                p = Polynomial(terms)
                rhs = Polynomial.zero()
                for u in range(n):
                    for v in range(n):
                        coeff = a2.product_basis(u, v).get(c, QQ(0))
                        if coeff:
                            rhs = rhs + Polynomial(
                                {
                                    (
                                        ((tv(u, i), 2),)
                                        if tv(u, i) == tv(v, j)
                                        else tuple(
                                            sorted(((tv(u, i), 1), (tv(v, j), 1)))
                                        )
                                    ): coeff
                                }
                            )
                polys.append(p - rhs)
    entries = [
        [Polynomial.variable(tv(i, j)) for j in range(n)] for i in range(n)
    ]
    det = _det_poly(entries)
    polys.append(det * Polynomial.variable(svar) - Polynomial.constant(1))
    cert = buchberger_certify(
        polys, max_basis_size=max_basis_size, time_budget=time_budget
    )
    if cert.status == "inconsistent":
        return IsoResult(
            "distinguished",
            invariant="no_invertible_product_isomorphism",
            detail="change of basis system is inconsistent",
        )
    return IsoResult("undecided", detail=f"certificate {cert.status}")
