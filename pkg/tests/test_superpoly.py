from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gl11inv.gl11 import GL11, gen, generator_series
from gl11inv.superpoly import (
    DivisionError, SuperPoly, coefficient_of, derive_even, derive_odd_left,
    exact_divide, from_json, multiply, parse, to_json, to_text, truncate,
)


def test_odd_square_vanishes(P):
    assert not P("psi0") * P("psi0")


def test_koszul_sign_of_reordering(P):
    assert P("phi0*psi1") * P("phi1*psi0") == -P("phi0*phi1*psi1*psi0")


def test_canonical_odd_order_is_phi_then_psi_descending(P):
    assert to_text(P("psi0*psi1*phi1*phi0")) == "1*phi0*phi1*psi1*psi0"


def test_even_variables_commute(P):
    assert (P("a0") + P("c1")) * P("a0") == P("a0^2 + a0*c1")


def test_even_derivative(P):
    assert derive_even(P("a0^2*c1"), "a0") == P("2*a0*c1")
    assert not derive_even(P("a0"), "a1")
    assert derive_even(P("a0*phi0*psi0"), "a0") == P("phi0*psi0")


def test_odd_left_derivative(P):
    assert derive_odd_left(P("phi0*psi0"), "phi0") == P("psi0")
    assert derive_odd_left(P("psi0*phi0"), "phi0") == -P("psi0")
    assert not derive_odd_left(P("phi0*psi0"), "phi1")


def test_exact_divide_difference_of_squares(P):
    assert exact_divide(P("z1^2 - z2^2"), P("z1 - z2")) == P("z1 + z2")


def test_exact_divide_rejects_remainder(P):
    with pytest.raises(DivisionError):
        exact_divide(P("z1 + z2"), P("z1 - z2"))


def test_exact_divide_by_zero(P):
    with pytest.raises(ZeroDivisionError):
        exact_divide(P("z1"), SuperPoly.zero(GL11))


def test_coefficient_extraction(P):
    assert coefficient_of(P("a0 + a1*z1"), {"z1": 1}) == P("a1")
    assert coefficient_of(generator_series("c", "z1", 3), {"z1": 2}) == P("c2")


def test_truncation_by_internal_degree(P):
    p = P("a0 + a0*c0 + a0*c0*c1")
    assert truncate(p, {"internal": 2}) == P("a0 + a0*c0")


def test_capped_multiply_matches_truncated_product(P):
    x = generator_series("a", "z1", 4)
    y = generator_series("c", "z1", 4)
    assert multiply(x, y, {"z": 3}) == truncate(x * y, {"z": 3})


def test_degree_and_parity(P):
    assert P("a2*c0").degree() == 4
    assert SuperPoly.zero(GL11).degree() == -1
    assert P("phi0").parity() == 1
    assert P("phi0*psi0").parity() == 0


def test_mixed_parity_has_no_parity(P):
    with pytest.raises(ValueError):
        P("a0 + phi0").parity()


def test_fraction_coefficients_are_exact(P):
    p = P("1/3*a0") * 3
    assert p == P("a0")
    assert p.terms[next(iter(p.terms))] == 1
    assert (P("a0") / 2).terms == P("1/2*a0").terms
    assert Fraction(1, 2) * P("a0") == P("1/2*a0")


@pytest.mark.parametrize("bad", ["a0**c0", "a0 +", "x7", "phi"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse(GL11, bad)


def test_text_and_json_roundtrip(P):
    p = P("-1/2*phi0*psi0 + 2*a0^2*c1 + 3*z1*t0")
    assert parse(GL11, to_text(p)) == p
    assert from_json(GL11, to_json(p)) == p


def test_zero_prints_as_zero():
    z = SuperPoly.zero(GL11)
    assert parse(GL11, to_text(z)) == z


_names = st.sampled_from(["a0", "a1", "c0", "c2", "phi0", "phi1", "psi0", "psi2"])
_monos = st.lists(_names, min_size=0, max_size=4).map(lambda xs: xs)


def _mono(names):
    out = SuperPoly.one(GL11)
    for n in names:
        out = out * SuperPoly.var(GL11, n)
    return out


_polys = st.lists(st.tuples(st.integers(-3, 3), _monos), max_size=4).map(
    lambda ts: sum((c * _mono(ns) for c, ns in ts), SuperPoly.zero(GL11)))


@settings(max_examples=200, deadline=None)
@given(_polys, _polys, _polys)
def test_multiplication_is_associative_and_distributive(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=200, deadline=None)
@given(_monos, _monos)
def test_supercommutativity(m1, m2):
    x, y = _mono(m1), _mono(m2)
    if not x or not y:
        return
    sign = -1 if x.parity() and y.parity() else 1
    assert x * y == sign * (y * x)


@settings(max_examples=200, deadline=None)
@given(_polys)
def test_roundtrip_property(p):
    assert parse(GL11, to_text(p)) == p
    assert from_json(GL11, to_json(p)) == p


@settings(max_examples=100, deadline=None)
@given(_polys, _polys)
def test_even_derivative_is_leibniz(p, q):
    lhs = derive_even(p * q, "a0")
    assert lhs == derive_even(p, "a0") * q + p * derive_even(q, "a0")


def test_generator_helper():
    assert gen("a", 3) == SuperPoly.var(GL11, "a3")
