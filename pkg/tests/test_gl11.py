from fractions import Fraction
from math import factorial

import pytest

from gl11inv.gl11 import (
    GL11, LoopOperator, act, gen, generator_series, is_invariant, operator_bracket,
    translate, translate_power, weight, y,
)
from gl11inv.superpoly import SuperPoly, linear_combination, multiply


@pytest.mark.parametrize("r,i", [(0, 0), (1, 3), (2, 2), (3, 1), (0, 4)])
def test_e22_lowers_phi(r, i):
    got = act(LoopOperator(2, 2, r), gen("phi", i))
    assert got == (gen("phi", i - r) if i >= r else SuperPoly.zero(GL11))


@pytest.mark.parametrize("j", range(4))
def test_e12_on_a(j):
    assert act(LoopOperator(1, 2, 0), gen("a", j)) == -gen("psi", j)


@pytest.mark.parametrize("r", range(4))
def test_e12_on_phi(r):
    assert act(LoopOperator(1, 2, 0), gen("phi", r)) == gen("c", r)


def test_e12_on_y0(P):
    assert act(LoopOperator(1, 2, 0), y(0)) == P("c0*psi0")


@pytest.mark.parametrize("i,j", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_c_is_central(i, j):
    for r in range(3):
        assert not act(LoopOperator(i, j, r), gen("c", 5))


def test_bad_loop_operator():
    with pytest.raises(ValueError):
        LoopOperator(1, 3, 0)
    with pytest.raises(ValueError):
        LoopOperator(1, 1, -1)


def test_operator_bracket_matches_commutator_on_generators():
    x, z = LoopOperator(1, 2, 0), LoopOperator(2, 1, 1)
    p = gen("a", 2) * gen("phi", 1) + gen("c", 3) * gen("psi", 2)
    lhs = act(x, act(z, p)) + act(z, act(x, p))  # both odd: anticommutator
    rhs = linear_combination(GL11, [(c, act(op, p)) for c, op in operator_bracket(x, z)])
    assert lhs == rhs


def test_translate_examples(P):
    assert translate(P("c0")) == P("c1")
    assert translate(P("a0*c0")) == P("a1*c0 + a0*c1")
    assert translate(P("phi1")) == P("2*phi2")


def test_translates_resum_to_series(P):
    cap = 5
    z = P("z1")
    total = linear_combination(
        GL11, [(Fraction(1, factorial(r)), translate_power(P("a0"), r) * z ** r) for r in range(cap + 1)])
    assert total == generator_series("a", "z1", cap)


def test_generator_series(P):
    assert generator_series("y", "z1", 1) == P("phi0*psi0 + z1*phi0*psi1 + z1*phi1*psi0")
    assert generator_series("c", "z1", 0) == P("c0")
    psi = generator_series("psi", "z1", 4)
    assert not psi * psi
    with pytest.raises(ValueError):
        generator_series("w", "z1", 1)


def test_y_relation(P):
    yz = generator_series("y", "z1", 3)
    phi = generator_series("phi", "z1", 3)
    psi = generator_series("psi", "z1", 3)
    assert yz == multiply(phi, psi, {"z": 3})
    assert not multiply(yz, psi, {"z": 3})


def test_invariance_examples(P):
    assert is_invariant(P("a0*c0 + phi0*psi0"))
    res = is_invariant(P("a0"))
    assert not res
    assert res.operator == LoopOperator(1, 2, 0)
    assert res.witness == -P("psi0")


def test_central_polynomials_are_invariant(P):
    assert is_invariant(P("c0^3*c2 - 5*c1*c4 + 7"))


def test_weight(P):
    assert weight(P("phi0*psi3")) == 0
    assert weight(P("phi0")) == 1
    assert weight(P("psi2")) == -1
    assert weight(SuperPoly.one(GL11)) == 0
    with pytest.raises(ValueError):
        weight(P("phi0 + psi0"))


def test_weight_matches_e22_eigenvalue(P):
    p = P("a1*phi0*phi2*psi1")
    assert act(LoopOperator(2, 2, 0), p) == weight(p) * p
