"""Lie algebras from structure constants: validation, brackets, series.

The upper central series has two independent implementations (via explicit
quotients and via the direct membership characterization); they are cross
checked here on every algebra this package can construct.
"""

import random
from fractions import Fraction as QQ

import pytest

from lralg.catalog import counterexample_g13, lie_n3, lie_n3_plus_line, lie_n4, lie_r2
from lralg.constructions import free3_lie, free4_two_gen_lie, free_two_step_lie
from lralg.lie import (
    AntisymmetryConflict,
    JacobiViolation,
    LieAlgebra,
    NotAnIdeal,
    abelian_lie,
    bracket_subspaces,
    center,
    classify_solvability,
    derived_series,
    direct_sum_with_abelian,
    is_two_step_solvable,
    lie_from_table,
    lower_central_series,
    quotient_by_ideal,
    second_derived_is_zero,
    upper_central_series,
    upper_central_series_direct,
)
from lralg.linalg import Subspace, vec_add, vec_scale


def e(dim, k, c=1):
    return tuple(QQ(c) if t == k - 1 else QQ(0) for t in range(dim))


def rand_vec(rng, n):
    return tuple(QQ(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n))


ALL_ALGEBRAS = [
    lie_r2(),
    lie_n3(),
    lie_n4(),
    lie_n3_plus_line(),
    abelian_lie(3),
    free_two_step_lie(2),
    free_two_step_lie(3),
    free_two_step_lie(4),
    free3_lie(2),
    free3_lie(3),
    free4_two_gen_lie(),
    counterexample_g13(),
    direct_sum_with_abelian(lie_n4(), 2),
]


def test_from_table_fills_antisymmetric_half():
    g = lie_from_table(3, [(1, 2, e(3, 3))])
    assert g.bracket_basis(1, 0) == {2: QQ(-1)}
    assert g.bracket_basis(0, 1) == {2: QQ(1)}
    assert g.bracket_basis(0, 2) == {}


def test_from_table_rejects_antisymmetry_conflict():
    with pytest.raises(AntisymmetryConflict):
        lie_from_table(3, [(1, 2, e(3, 3)), (2, 1, e(3, 3))])
    # explicitly giving both halves consistently is fine
    g = lie_from_table(3, [(1, 2, e(3, 3)), (2, 1, e(3, 3, -1))])
    assert g.bracket_basis(0, 1) == {2: QQ(1)}


def test_from_table_rejects_diagonal_entry():
    with pytest.raises(AntisymmetryConflict):
        lie_from_table(2, [(1, 1, e(2, 2))])


def test_from_table_rejects_jacobi_violation():
    # [[e3,e1],e2] = e1 here, while the other two cyclic terms vanish
    bad = [(1, 2, e(3, 3)), (1, 3, e(3, 3)), (2, 3, e(3, 1))]
    with pytest.raises(JacobiViolation):
        lie_from_table(3, bad)


def test_explicit_zero_entries_do_not_change_identity():
    plain = lie_from_table(3, [(1, 2, e(3, 3))])
    padded = lie_from_table(3, [(1, 2, e(3, 3)), (1, 3, (QQ(0),) * 3)])
    assert plain == padded
    assert hash(plain) == hash(padded)


def test_zero_then_conflicting_entry_is_caught():
    entries = [(1, 2, (QQ(0),) * 3), (2, 1, e(3, 3))]
    with pytest.raises(AntisymmetryConflict):
        lie_from_table(3, entries)


def test_bracket_bilinear_and_alternating():
    rng = random.Random(314)
    for g in (lie_n4(), free3_lie(3), counterexample_g13()):
        n = g.dim
        for _ in range(10):
            u, v, w = rand_vec(rng, n), rand_vec(rng, n), rand_vec(rng, n)
            c = QQ(rng.randint(-3, 3), 2)
            assert g.bracket(u, u) == (QQ(0),) * n
            assert g.bracket(u, v) == vec_scale(-1, g.bracket(v, u))
            left = g.bracket(vec_add(vec_scale(c, u), v), w)
            right = vec_add(vec_scale(c, g.bracket(u, w)), g.bracket(v, w))
            assert left == right


def test_ad_is_a_representation():
    # ad([x,y]) = ad(x) ad(y) - ad(y) ad(x), the operator form of Jacobi
    rng = random.Random(2718)
    for g in (lie_n4(), free4_two_gen_lie(), counterexample_g13()):
        for _ in range(8):
            x, y = rand_vec(rng, g.dim), rand_vec(rng, g.dim)
            assert g.ad(g.bracket(x, y)) == g.ad(x).commutator(g.ad(y))


def test_series_dims_on_reference_algebras():
    assert derived_series(lie_r2()).dims() == (2, 1, 0)
    assert lower_central_series(lie_n3()).dims() == (3, 1, 0)
    assert upper_central_series(lie_n3()).dims() == (1, 3)
    assert lower_central_series(lie_n4()).dims() == (4, 2, 1, 0)
    assert upper_central_series(lie_n4()).dims() == (1, 2, 4)
    assert lower_central_series(abelian_lie(3)).dims() == (3, 0)


def test_r2_is_solvable_not_nilpotent():
    rep = classify_solvability(lie_r2())
    assert rep.solvable_class == 2
    assert rep.nilpotency_class is None
    assert rep.is_two_step_solvable


def test_free_algebras_have_expected_class():
    assert classify_solvability(free_two_step_lie(3)).nilpotency_class == 2
    assert classify_solvability(free3_lie(3)).nilpotency_class == 3
    assert classify_solvability(free4_two_gen_lie()).nilpotency_class == 4


def test_upper_series_quotient_vs_direct_everywhere():
    for g in ALL_ALGEBRAS:
        via_quotient = upper_central_series(g)
        direct = upper_central_series_direct(g)
        assert via_quotient.dims() == direct.dims(), repr(g)
        assert via_quotient.terms[: len(direct.terms)] == direct.terms[: len(via_quotient.terms)]


def test_center_matches_first_upper_term():
    for g in ALL_ALGEBRAS:
        assert center(g) == upper_central_series(g).terms[0]


def test_bracket_subspaces_of_full_is_derived():
    g = counterexample_g13()
    full = Subspace.full(g.dim)
    assert bracket_subspaces(g, full, full).dim == derived_series(g).dims()[1]


def test_quotient_projection_is_a_homomorphism():
    rng = random.Random(55)
    for g in (lie_n4(), free3_lie(3), counterexample_g13()):
        ideal = bracket_subspaces(g, Subspace.full(g.dim), Subspace.full(g.dim))
        q, proj = quotient_by_ideal(g, ideal)
        assert q.dim == g.dim - ideal.dim
        for _ in range(8):
            x, y = rand_vec(rng, g.dim), rand_vec(rng, g.dim)
            assert proj.apply(g.bracket(x, y)) == q.bracket(proj.apply(x), proj.apply(y))


def test_quotient_rejects_non_ideal():
    g = lie_n3()
    line = Subspace.from_vectors(3, [e(3, 1)])  # span(e1) is not an ideal
    with pytest.raises(NotAnIdeal):
        quotient_by_ideal(g, line)


def test_direct_sum_with_abelian():
    g = direct_sum_with_abelian(lie_n3(), 2)
    assert g.dim == 5
    assert g.bracket_basis(0, 1) == {2: QQ(1)}
    assert g.bracket_basis(0, 3) == {}
    assert center(g).dim == center(lie_n3()).dim + 2


def test_two_step_solvable_agrees_with_second_derived():
    for g in ALL_ALGEBRAS:
        assert is_two_step_solvable(g) == second_derived_is_zero(g)


def test_g13_series_pinned_dims():
    g = counterexample_g13()
    assert lower_central_series(g).dims() == (13, 9, 5, 0)
    assert derived_series(g).dims() == (13, 9, 0)
    assert upper_central_series(g).dims() == (5, 9, 13)
    assert second_derived_is_zero(g)
