"""Polynomial constraint systems for product existence.

The variable x[i][j][k] is the coefficient of e_j in e_i . e_k.  A
product tensor solves the generated system exactly when it is an LR
product compatible with the bracket, so every test here leans on the
known catalog structures as ground truth: generated rows, added
structural rows, elimination expressions, and residuals must all
annihilate them.
"""

import random
from fractions import Fraction as QQ

import pytest

from lralg.catalog import catalog_get, counterexample_g13, lie_n3, lie_n4, lie_r2
from lralg.constraints import (
    STRUCTURAL_RULES,
    ConstraintError,
    ConstraintSystem,
    IncompleteAssignment,
    assignment_from_lr,
    buchberger_certify,
    evaluate_candidate,
    generate_lr_system,
    iso_search,
    lr_fingerprint,
    structural_reduce,
)
from lralg.constructions import free3_lr
from lralg.lie import abelian_lie, lie_from_table
from lralg.lr import LRAlgebra, lr_from_table
from lralg.poly import Polynomial


def test_variable_indexing_round_trip():
    s = generate_lr_system(lie_n3())
    assert s.nvars == 27
    for v in range(s.nvars):
        i, j, k = s.var_triple(v)
        assert s.var_index(i, j, k) == v
    assert s.var_name(0) == "x[1][1][1]"
    assert s.var_name(26) == "x[3][3][3]"


def test_generated_counts():
    for g in (lie_r2(), lie_n3(), lie_n4()):
        n = g.dim
        s = generate_lr_system(g)
        by_tag = {}
        for t in s.tags:
            by_tag[t] = by_tag.get(t, 0) + 1
        # compatibility rows never degenerate: one per pair and coordinate
        assert by_tag["compatibility"] == n * n * (n - 1) // 2
        assert by_tag.get("left_commute", 0) <= n * n * n * (n - 1) // 2
        assert by_tag.get("right_commute", 0) <= n * n * n * (n - 1) // 2
        assert len(s.polys) == len(s.tags)


def test_n3_system_size_is_pinned():
    s = generate_lr_system(lie_n3())
    assert len(s.polys) == 63
    assert s.used_variables() == set(range(27))


def test_catalog_solutions_satisfy_generated_systems():
    cases = [
        ("r2/A1", {}),
        ("r2/A2", {}),
        ("n3/A2", {"beta": QQ(1, 2)}),
        ("n4/A1", {"alpha": 3}),
        ("n3_r/A13", {"alpha": QQ(-1, 2)}),
    ]
    for key, params in cases:
        a = catalog_get(key, params)
        s = generate_lr_system(a.g)
        assert evaluate_candidate(s, a) == [], key


def test_invalid_candidate_produces_residuals():
    g = lie_n3()
    s = generate_lr_system(g)
    bad = lr_from_table(g, [(1, 1, (1, 0, 0))], validate=False)
    offenders = evaluate_candidate(s, bad)
    assert offenders
    tags = {t for _, t, _ in offenders}
    assert "compatibility" in tags
    for idx, tag, value in offenders:
        assert s.tags[idx] == tag
        assert value != 0


def test_evaluate_candidate_input_validation():
    s = generate_lr_system(lie_n3())
    other = lr_from_table(abelian_lie(3), [])
    with pytest.raises(ConstraintError):
        evaluate_candidate(s, other)
    with pytest.raises(IncompleteAssignment):
        evaluate_candidate(s, {0: QQ(1)})


def test_assignment_from_lr_reads_the_tensor():
    a = catalog_get("n3/A3")
    s = generate_lr_system(a.g)
    asg = assignment_from_lr(a)
    assert len(asg) == 27
    # e1.e2 = e3/2 lives at x[1][3][2]
    assert asg[s.var_index(0, 2, 1)] == QQ(1, 2)
    assert asg[s.var_index(1, 2, 0)] == QQ(-1, 2)
    assert evaluate_candidate(s, asg) == []


KNOWN_SOLUTIONS = [
    ("r2/A1", {}),
    ("r2/A2", {}),
    ("r2/A3", {}),
    ("n3/A1", {"alpha": QQ(-2)}),
    ("n3/A3", {}),
    ("n3/A4", {}),
    ("n4/A2", {}),
    ("n4/A5", {"alpha": 1}),
    ("n3_r/A8", {}),
    ("n3_r/A15", {"alpha": 2}),
]


def test_structural_rows_annihilate_known_solutions():
    by_base = {}
    for key, params in KNOWN_SOLUTIONS:
        a = catalog_get(key, params)
        sys_key = key.split("/")[0]
        if sys_key not in by_base:
            by_base[sys_key] = (generate_lr_system(a.g), [])
        by_base[sys_key][1].append((key, a))
    for sys_key, (s, instances) in by_base.items():
        red = structural_reduce(s)
        assert not red.contradiction, sys_key
        assert set(tag for tag, _ in red.added) <= set(STRUCTURAL_RULES)
        for key, a in instances:
            asg = assignment_from_lr(a)
            for tag, p in red.added:
                assert p.evaluate(asg) == 0, (key, tag)
            for v, expr in red.eliminated.items():
                assert expr.evaluate(asg) == asg[v], (key, s.var_name(v))
            for p in red.residual:
                assert p.evaluate(asg) == 0, key


def test_reduction_expand_round_trip():
    a = catalog_get("n3/A2", {"beta": QQ(3)})
    s = generate_lr_system(a.g)
    red = structural_reduce(s)
    asg = assignment_from_lr(a)
    free = {v: asg[v] for v in red.free_variables()}
    rebuilt = red.expand(free)
    for v in s.used_variables():
        assert rebuilt[v] == asg[v], s.var_name(v)


def test_reduction_reports_consistent_stats():
    s = generate_lr_system(lie_n4())
    red = structural_reduce(s)
    assert red.eliminated_count == red.stats["eliminated"]
    assert len(red.residual) == red.stats["residual"]
    assert red.stats["added_rows"] == len(red.added)
    assert red.stats["rounds"] >= 1
    assert not red.contradiction
    # forced-zero variables are a subset of the eliminated ones
    for v in red.forced_zero():
        assert red.eliminated[v] == Polynomial.zero()


def test_rule_subset_is_respected():
    s = generate_lr_system(lie_n3())
    red = structural_reduce(s, include=("left_derivation",))
    assert {tag for tag, _ in red.added} <= {"left_derivation"}


def test_certify_toy_contradiction():
    x = Polynomial.variable(0)
    one = Polynomial.constant(1)
    res = buchberger_certify([x * x, x - one])
    assert res.status == "inconsistent"
    assert res.certified_unsolvable
    assert res.trace
    assert res.trace[-1][-1] == "1"


def test_certify_catalog_systems_stay_open():
    for g in (lie_r2(), lie_n3()):
        s = generate_lr_system(g)
        red = structural_reduce(s)
        res = buchberger_certify(red, time_budget=60.0)
        assert res.status == "solutions_may_exist", g.dim
        assert not res.certified_unsolvable


def test_certify_budget_exhaustion_reported():
    s = generate_lr_system(lie_n3())
    res = buchberger_certify(s, max_basis_size=1)
    assert res.status == "budget_exhausted"
    assert not res.certified_unsolvable


def test_fingerprint_is_basis_independent_data():
    a = catalog_get("n3/A1", {"alpha": 2})
    f = lr_fingerprint(a)
    assert f["dim"] == 3
    assert f["complete"] is True
    assert f["lower_central_dims"] == (3, 1, 0)
    # same algebra, same fingerprint
    assert lr_fingerprint(a) == f


def test_iso_search_finds_self():
    a = catalog_get("n3/A3")
    r = iso_search(a, a)
    assert r.status == "found"
    assert r.transform is not None
    assert r.transform.det() != 0


def test_iso_search_finds_nontrivial_transform():
    # same product pushed through the basis change e3 -> -e3
    g2 = lie_from_table(3, [(1, 2, (0, 0, -1))])
    half = QQ(1, 2)
    a2 = lr_from_table(g2, [(1, 2, (0, 0, -half)), (2, 1, (0, 0, half))])
    a1 = catalog_get("n3/A3")
    r = iso_search(a1, a2)
    assert r.status == "found"
    t = r.transform
    for i in range(3):
        for j in range(3):
            prod1 = tuple(a1.product_basis(i, j).get(k, QQ(0)) for k in range(3))
            assert t.apply(prod1) == a2.product(t.column(i), t.column(j))


def test_iso_search_distinguishes_by_invariant():
    r = iso_search(catalog_get("r2/A1"), catalog_get("r2/A2"))
    assert r.status == "distinguished"
    assert r.invariant == "complete"
    r = iso_search(catalog_get("r2/A1"), catalog_get("r2/A3"))
    assert r.status == "distinguished"
    assert r.invariant == "product_span_dims"


def test_iso_search_certificate_separates_equal_fingerprints():
    a2 = catalog_get("n3/A1", {"alpha": 2})
    a3 = catalog_get("n3/A1", {"alpha": 3})
    assert lr_fingerprint(a2) == lr_fingerprint(a3)
    r = iso_search(a2, a3)
    assert r.status == "distinguished"
    assert r.invariant == "no_invertible_product_isomorphism"


def test_iso_search_undecided_in_high_dimension():
    a = free3_lr(2)
    r = iso_search(a, a)
    assert r.status == "undecided"
