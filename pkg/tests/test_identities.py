import json

import pytest
from hypothesis import given, settings, strategies as st

from fdrtheta.identities import (
    VerificationReport,
    compare,
    fdr_formula,
    h_perp_equal,
    hook_kronecker,
    hook_skew_check,
    hook_skew_sides,
    kron_skew_check,
    kron_skew_rhs,
    main_theorem_check,
    nabla_hk_check,
    theta_direct,
    theta_q0t0,
    theta_recursion_check,
    theta_recursion_sides,
    virtual_hook,
    zero_index_probe,
)
from fdrtheta.kronecker import kronecker
from fdrtheta.partitions import partitions_of
from fdrtheta.symfunc import SymF, convert, e, h, multiply, schur, skew_h, zero

small = st.integers(1, 5).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def hook(b, a):
    return schur((b,) + (1,) * a)


# -- hook formula ----------------------------------------------------------


def test_formula_examples():
    for n in range(1, 7):
        assert fdr_formula(n, 0, 0) == schur((n,))
        for i in range(n):
            assert fdr_formula(n, i, 0) == hook(n - i, i)
    assert fdr_formula(3, 1, 1) == schur((2, 1)) + schur((1, 1, 1))
    assert fdr_formula(3, 1, 1) == kronecker(schur((2, 1)), schur((2, 1))) - kronecker(schur((3,)), schur((3,)))


def test_formula_vanishes_beyond_diagonal():
    for n in range(1, 7):
        for i in range(n + 1):
            for j in range(n + 1):
                if i + j >= n:
                    assert not fdr_formula(n, i, j)


def test_hook_kronecker_zero_marker():
    assert not hook_kronecker(0, 1, 1, 0, 1)
    assert hook_kronecker(2, 0, 1, 1, 2) == schur((1, 1))


def test_virtual_hooks():
    assert virtual_hook(3, 1) == hook(3, 1)
    assert virtual_hook(0, 0) == SymF("s", 0, {(): 1})
    assert virtual_hook(-1, 1) == SymF("s", 0, {(): -1})
    assert not virtual_hook(0, 2)
    assert not virtual_hook(2, -1)
    assert not virtual_hook(-3, 1)
    # e_a h_b = S(b, a) + S(b + 1, a - 1) for every b >= 0, a >= 1
    for a in range(1, 4):
        for b in range(0, 4):
            assert virtual_hook(b, a) + virtual_hook(b + 1, a - 1) == multiply(h(b), e(a))


# -- skewing Kronecker products ---------------------------------------------


def test_kron_skew_examples():
    for n in range(1, 6):
        for j in range(1, n):
            assert kron_skew_rhs((n,), (n,), j) == schur((n - j,))
            expected = schur((n - 1,)) if j == 1 else zero(n - j)
            assert kron_skew_rhs((n,), (n,), j, "e") == expected
    assert kron_skew_rhs((2, 1), (2, 1), 1) == 2 * schur((2,)) + 2 * schur((1, 1))
    both = kronecker(schur((2, 1)), schur((2, 1)))
    assert skew_h(1, both) == kron_skew_rhs((2, 1), (2, 1), 1)


@settings(max_examples=60, deadline=None)
@given(small, small, st.integers(1, 5), st.sampled_from("he"))
def test_kron_skew_property(a, b, j, flavor):
    if sum(a) != sum(b) or j > sum(a):
        return
    assert kron_skew_check(a, b, j, flavor).equal


def test_hook_skew_examples():
    lhs, rhs = hook_skew_sides(1, 1, 0, 1)
    assert lhs == rhs == schur((1,))
    lhs, rhs = hook_skew_sides(1, 1, 1, 5)
    assert not lhs and not rhs
    assert hook_skew_check(1, 1, 1, 1, "telescoped").equal
    # summing r up to j counts the boundary term twice
    assert not hook_skew_check(0, 1, 1, 1, "telescoped-inclusive").equal
    with pytest.raises(ValueError):
        hook_skew_sides(0, 0, 0, 1)
    with pytest.raises(ValueError):
        hook_skew_sides(1, 1, 1, 1, form="other")


@pytest.mark.parametrize("n", range(1, 7))
def test_hook_skew_difference_and_telescoped(n):
    for k in range(n + 1):
        for l in range(n + 1 - k):
            for j in range(1, n + 1):
                assert hook_skew_check(k, l, n - k - l, j).equal
                assert hook_skew_check(k, l, n - k - l, j, "telescoped").equal


# -- Theta values at q = t = 0 ------------------------------------------------


def test_recursion_examples():
    for n in range(1, 7):
        assert theta_q0t0(n, 0, 0) == schur((n,))
    assert theta_q0t0(2, 1, 0) == schur((1, 1))
    assert theta_q0t0(3, 1, 1) == schur((2, 1)) + schur((1, 1, 1))


def test_vanishing_regime_is_flagged():
    value, vanishing = theta_q0t0(3, 2, 1, with_flag=True)
    assert vanishing and not value
    value, vanishing = theta_q0t0(3, 1, 1, with_flag=True)
    assert not vanishing and value
    with pytest.raises(ValueError):
        theta_q0t0(0, 0, 0)
    with pytest.raises(ValueError):
        theta_q0t0(3, 0, 0, convention="other")


@pytest.mark.parametrize("n", range(1, 9))
def test_recursion_equals_formula(n):
    for i in range(n):
        for j in range(n - i):
            assert theta_q0t0(n, i, j) == fdr_formula(n, i, j)


@pytest.mark.parametrize("n", range(1, 5))
def test_recursion_equals_direct_computation(n):
    for i in range(n):
        for j in range(n - i):
            assert theta_q0t0(n, i, j) == theta_direct(n, i, j)


def test_alternative_index_conventions_fail():
    assert any(theta_q0t0(3, i, j, "drop") != theta_direct(3, i, j) for i in range(3) for j in range(3 - i))
    assert any(theta_q0t0(4, i, j, "keep") != theta_direct(4, i, j) for i in range(4) for j in range(4 - i))


def test_theta_symmetry_in_indices():
    for n in range(1, 5):
        for i in range(n):
            for j in range(n - i):
                assert theta_direct(n, i, j) == theta_direct(n, j, i)


def test_zero_index_probe_disagrees():
    report = zero_index_probe(0, 1)
    assert not report.equal
    assert report.lhs == schur((1,))


# -- the q,t recursion ------------------------------------------------------


def test_theta_recursion_examples():
    assert theta_recursion_check(1, 0, 0, 1).equal
    assert theta_recursion_check(1, 1, 0, 1).equal
    lhs, rhs = theta_recursion_sides(4, 1, 1, 1)
    assert not lhs and not rhs
    assert not theta_recursion_check(1, 0, 0, 1, empty_sum="none", variant="printed").equal
    assert not theta_recursion_check(1, 0, 0, 3, empty_sum="constant-only", variant="printed").equal
    with pytest.raises(ValueError):
        theta_recursion_sides(0, 1, 1, 1)


@pytest.mark.parametrize("degree", range(1, 4))
def test_theta_recursion_holds_for_positive_k(degree):
    for m in range(degree + 1):
        for l in range(degree + 1 - m):
            k = degree - m - l
            if k < 1:
                continue
            for j in range(1, degree + 1):
                assert theta_recursion_check(j, m, l, k).equal, (j, m, l, k)


def test_theta_recursion_fails_at_k_zero():
    report = theta_recursion_check(1, 1, 0, 0)
    assert not report.equal
    assert not report.rhs


def test_nabla_hk_examples():
    for params in [(0, 0, 3), (1, 0, 1), (0, 1, 2), (1, 1, 1)]:
        report = nabla_hk_check(*params)
        assert report.equal, report


def test_main_theorem_small():
    assert all(r.equal for r in main_theorem_check(2, ("oracle", "formula")))
    assert all(r.equal for r in main_theorem_check(3, ("formula", "recursion")))
    assert all(r.equal for r in main_theorem_check(4, ("oracle", "formula", "recursion")))
    assert all(r.equal for r in main_theorem_check(3, ("recursion", "direct_qt")))
    with pytest.raises(ValueError):
        main_theorem_check(3, ("formula",))
    with pytest.raises(ValueError):
        main_theorem_check(3, ("formula", "nonsense"))


def test_h_perp_equal():
    assert h_perp_equal(schur((2, 1)), schur((2, 1)))
    assert not h_perp_equal(schur((2,)), schur((1, 1)))


@settings(max_examples=40, deadline=None)
@given(small, st.sampled_from(["m", "e", "h", "p"]))
def test_h_perp_equal_across_bases(lam, basis):
    f = schur(lam) + 3 * schur((sum(lam),))
    assert h_perp_equal(f, convert(f, basis))


def test_report_rendering():
    report = compare("demo", (1, 2), schur((2,)), schur((1, 1)))
    assert not report.equal
    assert str(report) == "demo(1, 2): unequal (s[2]: 1 vs 0)"
    data = json.loads(json.dumps(report.to_json()))
    assert data["verdict"] == "unequal" and data["first_difference"]["lambda"] == [2]
    assert isinstance(compare("demo", (), zero(2), zero(2)), VerificationReport)
