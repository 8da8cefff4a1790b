"""Classical Segal-Sugawara symbols for gl(1|1) and their generating series.

Everything lives in S(g_-); the supermatrix of currents is

    M(z) = [[ a(z),   psi(z)        ],
            [ -phi(z), -(c(z)-a(z)) ]]

with supertrace str X = X11 - X22.  The symbols are the z^0 parts.
"""
from __future__ import annotations

from .gl11 import GL11, gen, generator_series, y
from .superpoly import SuperPoly, multiply, truncate

FAMILIES = ("h", "b", "s")


def _check(family: str, k: int):
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if k < 1:
        raise ValueError("k must be a positive integer")


def _hb(family, k, e11, e22, e21e12, cap=None):
    c = e11 + e22
    if family == "h":
        base, sign = e11, 1
    else:
        base, sign = e22, -1
    head = multiply(_power(base, k - 1, cap), c, cap)
    if k == 1:
        return head
    tail = multiply(_power(base, k - 2, cap), e21e12, cap)
    return head + tail * (sign * (k - 1))


def _power(p, n, cap):
    out = SuperPoly.one(GL11)
    for _ in range(n):
        out = multiply(out, p, cap)
    return out


def current_matrix(z: str | None = None, cap: int = 0):
    """M (at z^0) or M(z) truncated at z^cap, as a 2x2 list."""
    if z is None:
        a, c, phi, psi = gen("a", 0), gen("c", 0), gen("phi", 0), gen("psi", 0)
    else:
        a, c = generator_series("a", z, cap), generator_series("c", z, cap)
        phi, psi = generator_series("phi", z, cap), generator_series("psi", z, cap)
    return [[a, psi], [-phi, a - c]]


def matmul(x, y_, cap=None):
    n = len(x)
    return [[sum((multiply(x[i][l], y_[l][j], cap) for l in range(n)),
                 SuperPoly.zero(GL11)) for j in range(n)] for i in range(n)]


def supertrace_power(m, k: int, cap=None) -> SuperPoly:
    acc = m
    for _ in range(k - 1):
        acc = matmul(acc, m, cap)
    return acc[0][0] - acc[1][1]


def symbol(family: str, k: int) -> SuperPoly:
    """h_kk, b_kk or s_kk as elements of S(g_-)."""
    _check(family, k)
    if family == "s":
        return supertrace_power(current_matrix(), k)
    a, c = gen("a", 0), gen("c", 0)
    return _hb(family, k, a, c - a, y(0))


def series(family: str, k: int, cap: int, z: str = "z1") -> SuperPoly:
    """Generating series of the z-translates of a symbol, up to z^cap."""
    _check(family, k)
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    zc = {"z": cap}
    if family == "s":
        return supertrace_power(current_matrix(z, cap), k, zc)
    a = generator_series("a", z, cap)
    c = generator_series("c", z, cap)
    yz = generator_series("y", z, cap)
    return _hb(family, k, a, c - a, yz, zc)


def _inverse_in_u(x: SuperPoly, u_cap: int, cap) -> SuperPoly:
    """Inverse of an even series with constant term 1 in u (geometric series)."""
    ucoef = x.terms.get(((), ()), 0)
    if ucoef != 1:
        raise ZeroDivisionError("constant term must be 1 to invert")
    n = SuperPoly.one(GL11) - x
    out = SuperPoly.one(GL11)
    power = SuperPoly.one(GL11)
    for _ in range(u_cap):
        power = multiply(power, n, cap)
        if not power:
            break
        out = out + power
    return out


def berezinian_series(sign: int, u_cap: int, z_cap: int, z: str = "z1") -> SuperPoly:
    """Ber(1 + sign*u*M(z)) truncated at u^u_cap and z^z_cap.

    For a (1|1) block matrix Ber X = (X11 - X12 X22^-1 X21) X22^-1.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if u_cap < 0 or z_cap < 0:
        raise ValueError("caps must be nonnegative")
    cap = {"u": u_cap, "z": z_cap}
    u = SuperPoly.var(GL11, "u")
    m = current_matrix(z, z_cap)
    x = [[multiply(u * sign, m[i][j], cap) + (1 if i == j else 0) for j in range(2)]
         for i in range(2)]
    inv22 = _inverse_in_u(x[1][1], u_cap, cap)
    schur = x[0][0] - multiply(multiply(x[0][1], inv22, cap), x[1][0], cap)
    return multiply(schur, inv22, cap)


def u_coefficients(p: SuperPoly, u_cap: int) -> list[SuperPoly]:
    from .superpoly import coefficient_of
    return [coefficient_of(p, {"u": i}) for i in range(u_cap + 1)]


def inverse_series(p: SuperPoly, u_cap: int, z_cap: int) -> SuperPoly:
    return _inverse_in_u(p, u_cap, {"u": u_cap, "z": z_cap})


def newton_series(u_cap: int, z_cap: int, z: str = "z1") -> SuperPoly:
    """-d/du log Ber(1 - u M(z)), truncated at u^(u_cap-1)."""
    from .superpoly import derive_even
    cap = {"u": u_cap, "z": z_cap}
    ber = berezinian_series(-1, u_cap, z_cap, z)
    d = derive_even(ber, "u")
    return -truncate(multiply(d, inverse_series(ber, u_cap, z_cap), cap), {"u": u_cap - 1})

