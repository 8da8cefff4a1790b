from fractions import Fraction
from math import factorial

import pytest

from gl11inv import ssvec
from gl11inv.gl11 import GL11, generator_series, is_invariant, translate_power
from gl11inv.superpoly import SuperPoly, coefficient_of, to_text


def test_symbols(P):
    assert ssvec.symbol("h", 2) == P("a0*c0 + phi0*psi0")
    assert ssvec.symbol("b", 2) == P("c0^2 - a0*c0 - phi0*psi0")
    assert ssvec.symbol("s", 1) == P("c0")
    assert ssvec.symbol("s", 2) == P("a0^2 - c0^2 + 2*a0*c0 - a0^2 + 2*phi0*psi0")


def test_symbol_rejects_bad_input():
    with pytest.raises(ValueError):
        ssvec.symbol("h", 0)
    with pytest.raises(ValueError):
        ssvec.symbol("q", 2)


@pytest.mark.parametrize("family", ssvec.FAMILIES)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_symbols_are_invariant(family, k):
    assert is_invariant(ssvec.symbol(family, k))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_series_coefficients_are_scaled_translates(k):
    ser = ssvec.series("h", k, 4)
    for r in range(5):
        want = translate_power(ssvec.symbol("h", k), r) * Fraction(1, factorial(r))
        assert coefficient_of(ser, {"z1": r}) == want


def test_series_special_cases():
    assert ssvec.series("h", 1, 3) == generator_series("c", "z1", 3)
    assert ssvec.series("s", 2, 0) == ssvec.symbol("s", 2)


def test_series_rejects_negative_cap():
    with pytest.raises(ValueError):
        ssvec.series("h", 2, -1)


def test_berezinian_coefficients():
    ber = ssvec.berezinian_series(1, 2, 3)
    coeffs = ssvec.u_coefficients(ber, 2)
    assert coeffs[0] == SuperPoly.one(GL11)
    assert coeffs[1] == generator_series("c", "z1", 3)
    assert coeffs[2] == ssvec.series("b", 2, 3)


def test_berezinian_trivial_cap():
    assert ssvec.berezinian_series(1, 0, 3) == SuperPoly.one(GL11)
    with pytest.raises(ValueError):
        ssvec.berezinian_series(2, 1, 1)


def test_newton_series_is_supertrace_powers():
    # -d/du log Ber(1 - uM) = sum_k str(M^k) u^(k-1)
    ns = ssvec.newton_series(3, 2)
    for k in range(1, 4):
        assert coefficient_of(ns, {"u": k - 1}) == ssvec.series("s", k, 2), to_text(ns)
