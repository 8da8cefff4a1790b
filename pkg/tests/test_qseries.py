import pytest
from hypothesis import given, settings, strategies as st

from gl11inv import qseries as Q
from gl11inv.schur import Partition

PLANEP = [1, 1, 3, 6, 12, 21, 38, 63]


def test_pochhammer():
    assert Q.pochhammer(1, 3).coeffs == (1, -1, 0, 0)
    assert Q.pochhammer(2, 3).coeffs == (1, -1, -1, 1)
    assert Q.pochhammer(0, 5) == Q.QSeries.one(5)
    # Euler's pentagonal theorem
    assert Q.pochhammer(Q.INF, 12).coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)


def test_series_arithmetic():
    x = Q.QSeries((1, 2, 3), 2)
    assert (x * x.inverse()) == Q.QSeries.one(2)
    assert (x - x) == Q.QSeries((0, 0, 0), 2)
    assert Q.QSeries.monomial(1, 4).shift(2) == Q.QSeries.monomial(3, 4)
    assert (x ** 2)[2] == 3 + 3 + 4
    assert Q.QSeries.from_json(x.to_json()) == x
    with pytest.raises(ZeroDivisionError):
        Q.QSeries((0, 1), 1).inverse()


def test_planep_and_fermionic():
    assert list(Q.planep_series(7).coeffs) == PLANEP
    assert list(Q.fermionic_series(7).coeffs) == PLANEP
    assert Q.planep_series(0).coeffs == (1,)


@pytest.mark.parametrize("s", range(5))
def test_ids_identity(s):
    assert Q.ids_check(s, 30)


@pytest.mark.parametrize("s", range(5))
def test_auxiliary_identity(s):
    assert Q.auxiliary_check(s, 30)


def test_auxiliary_s0_is_durfee():
    lhs, rhs = Q.auxiliary_sides(0, 20)
    assert lhs == rhs == Q.pochhammer(Q.INF, 20).inverse()


def test_f_mn():
    assert Q.f_mn(1, 1, 12) == Q.planep_series(12)
    assert Q.f_mn(2, 3, 6)[0] == 1
    assert Q.f_mn(1, 2, 8) == Q.pp_series(1, 2, 8)
    assert Q.f_mn(2, 1, 8) == Q.f_mn(1, 2, 8)


def test_enumerate_pp():
    assert Q.enumerate_pp(1, 1, 2) == 3
    assert Q.enumerate_pp(2, 2, 0) == 1
    assert Q.enumerate_pp(1, 1, 7) == 63
    assert sorted(Q.list_pp(1, 1, 2)) == sorted([
        (Partition((2,)),), (Partition((1, 1)),), (Partition((1,)), Partition((1,)))])


def test_enumeration_matches_listing():
    for v in range(7):
        assert Q.enumerate_pp(1, 2, v) == len(Q.list_pp(1, 2, v))


def test_in_hook():
    assert Q.in_hook(Partition((5, 1, 1)), 1, 1)
    assert not Q.in_hook(Partition((2, 2)), 1, 1)
    assert Q.in_hook(Partition((2, 2)), 2, 0)


def test_chi():
    assert Q.chi_mn(1, 1, 4).coeffs == (1, 1, 2, 3, 4)
    assert Q.chi_mn(2, 0, 8) == Q.pochhammer(2, 8).inverse()
    for m in range(1, 4):
        for n in range(1, 4):
            assert Q.chi_recurrence_holds(m, n, 12)
    with pytest.raises(ValueError):
        Q.chi_recurrence_holds(0, 1, 5)


def test_hook_diagram_counts():
    assert Q.count_hook_diagrams(1, 1, 3) == 3
    assert Q.count_hook_diagrams(2, 3, 0) == 1
    for m, n in [(1, 1), (1, 2), (2, 2)]:
        chi = Q.chi_mn(m, n, 10)
        assert list(chi.coeffs) == [Q.count_hook_diagrams(m, n, s) for s in range(11)]


def test_hp_from_basis():
    hp = Q.hp_from_basis(7)
    assert hp[1] == 1
    assert hp[2] == 3
    assert list(hp.coeffs) == PLANEP


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=8).filter(lambda c: c[0] != 0 and abs(c[0]) == 1))
def test_inverse_property(coeffs):
    x = Q.QSeries(tuple(coeffs), len(coeffs) - 1)
    assert x * x.inverse() == Q.QSeries.one(x.order)
