import random
from fractions import Fraction
from math import factorial

import pytest

from gl11inv import invariants as inv
from gl11inv.gl11 import GL11, LoopOperator, act, gen, generator_series, is_invariant, y
from gl11inv.schur import Partition, partitions_upto
from gl11inv.ssvec import symbol
from gl11inv.superpoly import (
    DivisionError, SuperPoly, coefficient_of, exact_divide, split_by, truncate,
)

EMPTY = Partition(())


def test_y_degree():
    assert inv.y_degree(2, (1,)) == 7
    assert inv.y_degree(0, ()) == 0
    assert inv.Y(2, (2, 1)).degree() == inv.y_degree(2, (2, 1))


def test_y_small_cases(P):
    assert inv.Y(0, ()) == SuperPoly.one(GL11)
    for i in range(5):
        assert inv.Y(1, (i,)) == y(i)
    assert inv.Y(2, ()) == P("phi1*phi0*psi1*psi0")
    assert inv.Y(2, ()) == -P("phi0*phi1*psi1*psi0")


def test_y_rejects_long_partition():
    with pytest.raises(ValueError):
        inv.Y(1, (1, 1))


def test_expand_y_product_n1():
    exp = inv.expand_y_product(1, 5)
    for i in range(6):
        assert exp[Partition((i,))] == y(i)


@pytest.mark.parametrize("lam", [lam for lam in partitions_upto(4, max_len=2)])
def test_expand_y_product_n2_matches_lr_formula(lam):
    exp = inv.expand_y_product(2, 6)
    assert exp.get(lam, SuperPoly.zero(GL11)) == inv.Y(2, lam)


def test_y_product_divisible_by_vandermonde_square(P):
    prod = inv.y_product(2, 4)
    exact_divide(prod, P("z1^2 - 2*z1*z2 + z2^2"))


def test_decompose_examples(P):
    assert inv.decompose(y(0)) == {inv.YIndex(1, EMPTY): SuperPoly.one(GL11)}
    assert inv.decompose(y(0) * y(1)) == {}
    # y0*y2 = phi0 phi1 psi1 psi0, which is minus Y(2, empty) in display order
    assert y(0) * y(2) == P("phi0*phi1*psi1*psi0")
    assert inv.decompose(y(0) * y(2)) == {inv.YIndex(2, EMPTY): -SuperPoly.one(GL11)}


def test_decompose_mixed(P):
    got = inv.decompose(P("a0*c0") + y(0))
    assert got == {inv.YIndex(0, EMPTY): P("a0*c0"), inv.YIndex(1, EMPTY): P("1")}


def test_decompose_rejects_outside(P):
    with pytest.raises(inv.NotInSubalgebraError):
        inv.decompose(P("phi0"))
    with pytest.raises(inv.NotInSubalgebraError):
        inv.decompose(P("z1*a0"))
    with pytest.raises(inv.NotInSubalgebraError):
        inv.decompose(P("phi0*psi1"))  # not a y-polynomial


@pytest.mark.parametrize("seed", range(20))
def test_decompose_recovers_random_coefficient(seed):
    rng = random.Random(seed)
    n = rng.choice([0, 1, 2])
    lam = Partition(sorted((rng.randint(0, 2) for _ in range(n)), reverse=True))
    coeff = SuperPoly.zero(GL11)
    for _ in range(3):
        mono = SuperPoly.one(GL11) * rng.randint(-4, 4)
        for _ in range(rng.randint(0, 2)):
            mono = mono * gen(rng.choice("ac"), rng.randint(0, 3))
        coeff = coeff + mono
    got = inv.decompose(inv.Y(n, lam) * coeff)
    want = {inv.YIndex(n, lam): coeff} if coeff else {}
    assert got == want


def test_decomposition_json_shape():
    data = inv.decomposition_to_json(inv.decompose(y(0) * 2))
    assert data == [{"n": 1, "lambda": [], "coefficient": [{"coeff": "2/1", "monomial": []}]}]


def test_t_rational(P):
    assert inv.T_rational(1, 1).to_poly() == P("t0")
    t21 = inv.T_rational(2, 1)
    assert t21.numerator == P("t1 - t0*z2")
    assert t21.factors == {(1, 2): 1}
    with pytest.raises(ValueError):
        inv.T_rational(2, 3)


@pytest.mark.parametrize("n", [2, 3])
def test_t_rational_solves_vandermonde_system(n, P):
    for i in range(n):
        total = None
        for k in range(1, n + 1):
            term = inv.RationalFunctionZ.of(P(f"z{k}") ** i).mul(inv.T_rational(n, k))
            total = term if total is None else total.add(term)
        assert total.to_poly() == P(f"t{i}")


def test_rational_residual_denominator(P):
    r = inv.RationalFunctionZ(P("z1 + z2"), (((1, 2), 1),))
    with pytest.raises(DivisionError):
        r.to_poly()


def test_f_series_n1():
    z_cap, t_cap = 3, 3
    f = inv.F_series(1, z_cap, t_cap)
    a = generator_series("a", "z1", z_cap)
    want = SuperPoly.zero(GL11)
    power = SuperPoly.one(GL11)
    for p in range(t_cap + 1):
        want = want + truncate(power, {"z": z_cap}) * SuperPoly.var(GL11, "t0") ** p \
            * Fraction(1, factorial(p))
        power = power * a
    assert f == want


def test_f_series_without_t():
    assert inv.F_series(2, 4, 0) == SuperPoly.one(GL11)


def test_a_series_trivial():
    assert inv.A_series(0, 3, 3) == SuperPoly.one(GL11)


def test_a_series_n1_constant_term():
    a1 = inv.A_series(1, 4, 2)
    assert coefficient_of(a1, {"t0": 0}, over=["t"]) == generator_series("c", "z1", 4)


@pytest.mark.parametrize("k", range(1, 5))
def test_a_series_n1_matches_closed_form(k):
    z_cap = 3
    a1 = inv.A_series(1, z_cap, k - 1)
    got = coefficient_of(a1, {"t0": k - 1}, over=["t"])
    assert got == inv.aztone(k, "z1", z_cap)


def test_factorization_small():
    assert inv.factorization_check(1, 4, 3)
    assert inv.factorization_check(2, 3, 2)


def test_factorization_n3_small_caps():
    assert inv.factorization_check(3, 1, 1)


def test_a_series_annihilated_by_e12():
    a2 = inv.A_series(2, 2, 3, internal_cap=8)
    for _, coeff in split_by(a2, ["z", "t"]).items():
        assert not act(LoopOperator(1, 2, 0), coeff)


def test_a_series_coefficients_invariant():
    a2 = inv.A_series(2, 2, 3, internal_cap=8)
    for _, coeff in split_by(a2, ["z", "t"]).items():
        assert is_invariant(coeff)


def test_basis_element_trivial():
    assert inv.basis_element(0, (), ()) == SuperPoly.one(GL11)


@pytest.mark.parametrize("k", range(2, 5))
def test_basis_element_n1_is_scaled_symbol(k):
    got = inv.basis_element(1, (), (k - 2,))
    assert got == symbol("h", k) * Fraction(1, factorial(k - 1))


def test_basis_element_leading_component():
    b = inv.basis_element(1, (1,), (0,))
    assert is_invariant(b)
    dec = inv.decompose(b)
    assert dec[inv.YIndex(1, Partition((1,)))] == SuperPoly.one(GL11)


@pytest.mark.parametrize("n,lam,k", [(2, (), (0, 0)), (2, (1,), (1, 0)), (2, (), (0, 1))])
def test_leading_component_law(n, lam, k):
    b = inv.basis_element(n, lam, k)
    assert is_invariant(b)
    dec = inv.decompose(b)
    assert dec[inv.YIndex(n, Partition(lam))] == inv.leading_coefficient(n, k)


def test_basis_element_rejects_bad_input():
    with pytest.raises(ValueError):
        inv.basis_element(1, (1, 1), (0,))
    with pytest.raises(ValueError):
        inv.basis_element(1, (), (0, 0))
    small = inv.TruncatedA.compute(1, 0, 1)
    with pytest.raises(ValueError):
        inv.basis_element(1, (), (3,), series=small)


def test_basis_indices_low_degree():
    counts = {}
    for n, lam, k in inv.basis_indices(4):
        d = inv.basis_degree(n, lam, k)
        counts[d] = counts.get(d, 0) + 1
    # n = 1 only below degree 6: (lambda, k0) with |lambda| + k0 = d - 2
    assert counts == {0: 1, 2: 1, 3: 2, 4: 3}
