from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from fdrtheta.characters import ClassFunction, character_of, character_table, class_size, mn_character
from fdrtheta.kronecker import (
    class_function_of,
    frobenius_of,
    kronecker,
    kronecker_multiplicity,
    lr_coefficient,
)
from fdrtheta.partitions import Partition, conjugate, partitions_of
from fdrtheta.symfunc import SymF, multiply, schur

small = st.integers(1, 6).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def cycle_type(w):
    seen, lengths = set(), []
    for start in range(len(w)):
        if start in seen:
            continue
        k, x = 0, start
        while x not in seen:
            seen.add(x)
            x = w[x]
            k += 1
        lengths.append(k)
    return Partition(sorted(lengths, reverse=True))


def standard_tableaux(lam):
    """Count standard Young tableaux by removing corners (brute force)."""
    lam = list(lam)
    if sum(lam) == 0:
        return 1
    total = 0
    for i, part in enumerate(lam):
        if part and (i + 1 == len(lam) or lam[i + 1] < part):
            lam[i] -= 1
            total += standard_tableaux([x for x in lam if x])
            lam[i] += 1
    return total


def test_character_examples():
    for n in range(1, 6):
        for mu in partitions_of(n):
            assert mn_character((n,), mu) == 1
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))
    assert mn_character((2, 1), (1, 1, 1)) == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_dimensions_count_standard_tableaux(n):
    for lam in partitions_of(n):
        assert mn_character(lam, (1,) * n) == standard_tableaux(lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_character_table_orthogonality(n):
    table = character_table(n)
    parts = partitions_of(n)
    for a, b in product(range(len(parts)), repeat=2):
        s = sum(class_size(mu) * table[a][c] * table[b][c] for c, mu in enumerate(parts))
        assert s == (factorial(n) if a == b else 0)
    assert sum(class_size(mu) for mu in parts) == factorial(n)


def test_frobenius_examples():
    assert frobenius_of(character_of((3,))) == schur((3,))
    regular = ClassFunction(3, {(1, 1, 1): 6})
    assert frobenius_of(regular) == schur((3,)) + 2 * schur((2, 1)) + schur((1, 1, 1))
    assert not frobenius_of(ClassFunction(3))


def test_permutation_module_by_brute_force():
    # C^3 with S_3 permuting coordinates: trace = number of fixed points
    chi = ClassFunction(3, {cycle_type(w): sum(w[i] == i for i in range(3)) for w in permutations(range(3))})
    assert frobenius_of(chi) == schur((3,)) + schur((2, 1))


def test_kronecker_examples():
    assert kronecker(schur((2, 1)), schur((2, 1))) == schur((3,)) + schur((2, 1)) + schur((1, 1, 1))
    for n in range(1, 6):
        for lam in partitions_of(n):
            assert kronecker(schur((n,)), schur(lam)) == schur(lam)
            assert kronecker(schur((1,) * n), schur(lam)) == schur(conjugate(lam))


def test_kronecker_multiplicity_examples():
    for j in range(1, 5):
        for mu in partitions_of(j):
            assert kronecker_multiplicity((j,), mu, mu) == 1
            assert kronecker_multiplicity((1,) * j, mu, conjugate(mu)) == 1
            for nu in partitions_of(j):
                if nu != mu:
                    assert kronecker_multiplicity((j,), mu, nu) == 0


def test_lr_examples():
    assert lr_coefficient((1,), (2,), (2, 1)) == 1
    assert lr_coefficient((2,), (3,), (5,)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    with pytest.raises(ValueError):
        lr_coefficient((1,), (1,), (3,))


def test_lr_hook_rule():
    """Hooks (j-r,1^r) times (c,1^(n-j-c)) contain (b,1^a) iff c is b-j+r or b-j+r+1."""
    n = 7
    for j in range(1, n):
        for r in range(j):
            for c in range(1, n - j + 1):
                for b in range(1, n + 1):
                    big = (b,) + (1,) * (n - b)
                    got = lr_coefficient((j - r,) + (1,) * r, (c,) + (1,) * (n - j - c), big)
                    assert got == (1 if c in (b - j + r, b - j + r + 1) else 0)


@settings(max_examples=60, deadline=None)
@given(small, small)
def test_kronecker_symmetric_and_dimension(a, b):
    if sum(a) != sum(b):
        return
    x = kronecker(schur(a), schur(b))
    assert x == kronecker(schur(b), schur(a))
    n = sum(a)
    dim = sum(c * mn_character(nu, (1,) * n) for nu, c in x.terms.items())
    assert dim == mn_character(a, (1,) * n) * mn_character(b, (1,) * n)


@settings(max_examples=60, deadline=None)
@given(small)
def test_class_function_round_trip(lam):
    f = schur(lam) + 2 * schur((sum(lam),))
    assert frobenius_of(class_function_of(f)) == f


@pytest.mark.parametrize("total", range(0, 9))
def test_lr_rule_equals_oracle(total):
    for a in range(total + 1):
        for lam, mu in product(partitions_of(a), partitions_of(total - a)):
            prod = multiply(schur(lam), schur(mu))
            for nu in partitions_of(total):
                rule = lr_coefficient(lam, mu, nu, "rule")
                assert rule == lr_coefficient(lam, mu, nu, "oracle") == prod.coefficient(nu)


def test_zero_inputs():
    assert not kronecker(SymF("s", 3, {}), schur((2, 1)))
