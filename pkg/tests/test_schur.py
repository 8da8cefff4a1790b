import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gl11inv.schur import (
    Partition, divide_vandermonde, elementary, hook_schur, lr_coefficient, lr_expansion,
    lr_tableaux_count, partitions, partitions_upto, schur, schur_coefficients,
    vandermonde, zvar,
)
from gl11inv.gl11 import GL11
from gl11inv.superpoly import DivisionError, substitute


def test_partition_normalises():
    lam = Partition((3, 2, 1, 0))
    assert tuple(lam) == (3, 2, 1)
    assert lam.length == 3 and lam.weight == 6
    assert lam.padded(5) == (3, 2, 1, 0, 0)
    with pytest.raises(ValueError):
        Partition((1, -1))
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert sorted(map(tuple, partitions(4, max_len=2))) == [(2, 2), (3, 1), (4,)]


def test_schur_examples(P):
    assert schur((1,), 2) == P("z1 + z2")
    assert schur((2, 1), 2) == P("z1^2*z2 + z1*z2^2")
    assert not schur((1, 1, 1), 2)
    assert schur((), 3) == P("1")


def test_hook_schur():
    assert hook_schur(0, 0, 3) == zvar(1) + zvar(2) + zvar(3)
    assert hook_schur(1, 1, 2) == schur((2, 1), 2)
    assert not hook_schur(0, 2, 2)


def test_elementary(P):
    zs = ["z1", "z2"]
    assert elementary(1, zs) == P("z1 + z2")
    assert elementary(2, zs) == P("z1*z2")
    assert not elementary(3, zs)
    assert elementary(0, zs) == P("1")


def test_vandermonde_division(P):
    v = vandermonde(2)
    assert divide_vandermonde(v * v * P("z1 + z2"), 2, power=2) == P("z1 + z2")
    with pytest.raises(DivisionError):
        divide_vandermonde(P("z1"), 2)


def test_schur_coefficients_recover_combination():
    f = schur((2,), 3) * 3 - schur((1, 1), 3) + schur((2, 1, 1), 3)
    coeffs = schur_coefficients(f, 3)
    got = {tuple(k): v.constant_term() for k, v in coeffs.items() if v}
    assert got == {(2,): 3, (1, 1): -1, (2, 1, 1): 1}


def test_lr_examples():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2,), (1,), (2, 2)) == 0


@pytest.mark.parametrize("lam", [(), (1,), (3, 1), (2, 2, 1)])
def test_lr_unit(lam):
    assert lr_coefficient(lam, (), lam) == 1
    assert lr_coefficient((), lam, lam) == 1


def test_lr_zero_off_weight():
    assert lr_coefficient((1,), (1,), (3,)) == 0


def test_lr_expansion_matches_schur_product():
    mu, nu = (2, 1), (1,)
    n = 4
    lhs = schur(mu, n) * schur(nu, n)
    rhs = sum((schur(lam, n) * c for lam, c in lr_expansion(mu, nu).items()), schur((), n) * 0)
    assert lhs == rhs


_small = st.integers(0, 3).flatmap(lambda k: st.sampled_from(list(partitions(k))))


@settings(max_examples=200, deadline=None)
@given(_small, _small)
def test_lr_bialternant_agrees_with_tableaux(mu, nu):
    for lam in partitions(mu.weight + nu.weight):
        assert lr_coefficient(mu, nu, lam) == lr_tableaux_count(mu, nu, lam)


@settings(max_examples=100, deadline=None)
@given(_small, _small)
def test_lr_is_symmetric(mu, nu):
    for lam in partitions(mu.weight + nu.weight):
        assert lr_coefficient(mu, nu, lam) == lr_coefficient(nu, mu, lam)


def test_partitions_upto():
    got = sorted(tuple(p) for p in partitions_upto(2))
    assert got == [(), (1,), (1, 1), (2,)]


def test_schur_is_symmetric():
    s = schur((3, 1), 3)
    for perm in itertools.permutations((1, 2, 3)):
        mapping = {f"z{i}": zvar(j) for i, j in zip((1, 2, 3), perm)}
        img = substitute(s, lambda k: mapping.get(GL11.name_of(k)))
        assert img == s
