"""Supersymmetric and affine supersymmetric polynomials, the Chevalley
projection of S(g_-), and the c_0-Laurent cancellation operator."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .gl11 import GL11, gen, generator_series
from .invariants import TruncatedA, basis_element, basis_indices
from .schur import partitions
from .superpoly import (
    EVEN, Alphabet, Family, SuperPoly, apply_derivation, coefficient_of, derive_even,
    linear_combination, multiply, substitute,
)

SUSY = Alphabet("susy", [
    Family("u", 0, EVEN),                     # u1 .. um
    Family("v", 1, EVEN),                     # v1 .. vn
    Family("u", 2, EVEN, arity=2, internal_offset=1),   # u{i}_{r}, degree r+1
    Family("v", 3, EVEN, arity=2, internal_offset=1),
    Family("t", 4, EVEN, arity=0, aux=1),
    Family("z", 5, EVEN, arity=0, aux=1),
])

_U, _V, _UA, _VA = 0, 1, 2, 3


def u(i: int, r: int | None = None) -> SuperPoly:
    """u_i, or the affine variable u_{i r}."""
    return SuperPoly.var(SUSY, f"u{i}" if r is None else f"u{i}_{r}")


def v(j: int, r: int | None = None) -> SuperPoly:
    return SuperPoly.var(SUSY, f"v{j}" if r is None else f"v{j}_{r}")


# ---------------------------------------------------------------------------
# finite supersymmetric polynomials


def _rank_of(p: SuperPoly, rank: int) -> int:
    return max((k[1] for k in p.keys() if k[0] == rank), default=0)


def _swap(p: SuperPoly, name_a: str, name_b: str) -> SuperPoly:
    ka, kb = SUSY.key(name_a), SUSY.key(name_b)
    va, vb = SuperPoly.var(SUSY, name_a), SuperPoly.var(SUSY, name_b)
    return substitute(p, lambda k: vb if k == ka else va if k == kb else None)


def is_supersymmetric(p: SuperPoly, m: int | None = None, n: int | None = None) -> bool:
    """Symmetric in u and in v, and constant in t after u_m = t, v_n = -t.

    ``m`` and ``n`` default to the largest indices present (at least 1).
    """
    m = max(_rank_of(p, _U), 1) if m is None else m
    n = max(_rank_of(p, _V), 1) if n is None else n
    for i in range(1, m):
        if _swap(p, f"u{i}", f"u{i + 1}") != p:
            return False
    for j in range(1, n):
        if _swap(p, f"v{j}", f"v{j + 1}") != p:
            return False
    if m == 0 or n == 0:
        return True
    t = SuperPoly.var(SUSY, "t")
    ku, kv = SUSY.key(f"u{m}"), SUSY.key(f"v{n}")
    s = substitute(p, lambda k: t if k == ku else -t if k == kv else None)
    return not derive_even(s, "t")


def power_sum_susy(m: int, n: int, k: int) -> SuperPoly:
    """u_1^k + ... + u_m^k - (-1)^k (v_1^k + ... + v_n^k)."""
    if k < 1:
        raise ValueError("k must be positive")
    sign = -(-1) ** k
    return linear_combination(SUSY, [(1, u(i) ** k) for i in range(1, m + 1)]
                              + [(sign, v(j) ** k) for j in range(1, n + 1)])


def affinize(p: SuperPoly, r: int) -> SuperPoly:
    """P_r: coefficient of z^r after u_i -> u_i(z), v_j -> v_j(z)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    z = SuperPoly.var(SUSY, "z")

    def image(k):
        if k[0] not in (_U, _V):
            return None
        name = "u" if k[0] == _U else "v"
        return linear_combination(SUSY, [(1, SuperPoly.var(SUSY, f"{name}{k[1]}_{s}") * z ** s)
                                         for s in range(r + 1)])

    return coefficient_of(substitute(p, image, cap={"z": r}), {"z": r})


def affine_generator(m: int, n: int, k: int, r: int) -> SuperPoly:
    """sum_i sum_{r_1+..+r_k=r} u_{i r_1}..u_{i r_k} - (-1)^k (same in v)."""
    return affinize(power_sum_susy(m, n, k), r)


def translate_susy(p: SuperPoly) -> SuperPoly:
    """T: u_{i r} -> (r+1) u_{i r+1}, likewise for v."""
    def image(k):
        if k[0] not in (_UA, _VA):
            return None
        name = "u" if k[0] == _UA else "v"
        return (k[2] + 1) * SuperPoly.var(SUSY, f"{name}{k[1]}_{k[2] + 1}")
    return apply_derivation(p, image, EVEN)


def susy_degree(p: SuperPoly) -> int:
    return p.degree(SUSY.grading("internal"))


# ---------------------------------------------------------------------------
# Chevalley projection


def chevalley(p: SuperPoly) -> SuperPoly:
    """Kill phi_i, psi_i; send a_r -> u_{1r} and c_r - a_r -> v_{1r}."""
    def image(k):
        kind = GL11.family(k).prefix
        r = GL11.index(k)
        if kind == "a":
            return u(1, r)
        if kind == "c":
            return u(1, r) + v(1, r)
        if kind in ("phi", "psi"):
            return SuperPoly.zero(SUSY)
        raise ValueError(f"auxiliary variable {GL11.name_of(k)} has no image")
    return substitute(p, image, target=SUSY)


def seon_series(k: int, z_cap: int) -> SuperPoly:
    """u_1(z)^(k-1) (u_1(z) + v_1(z)) up to z^z_cap."""
    if k < 1:
        raise ValueError("k must be positive")
    z = SuperPoly.var(SUSY, "z")
    cap = {"z": z_cap}
    uz = linear_combination(SUSY, [(1, u(1, s) * z ** s) for s in range(z_cap + 1)])
    vz = linear_combination(SUSY, [(1, v(1, s) * z ** s) for s in range(z_cap + 1)])
    out = uz + vz
    for _ in range(k - 1):
        out = multiply(out, uz, cap)
    return out


# ---------------------------------------------------------------------------
# Laurent polynomials in c_0


_C0 = GL11.key("c0")


def _c0_split(mono):
    evens, odds = mono
    e = 0
    rest = []
    for k, x in evens:
        if k == _C0:
            e = x
        else:
            rest.append((k, x))
    return e, (tuple(rest), odds)


def _with_c0(mono, e):
    evens, odds = mono
    if e:
        evens = tuple(sorted(evens + ((_C0, e),)))
    return (evens, odds)


@dataclass(frozen=True)
class LaurentC0Poly:
    """``numerator * c_0^shift`` with ``shift`` the lowest c_0-exponent.

    The numerator has some term free of c_0 (unless it is zero, in which case
    the shift is 0), so c_0 and c_0^-1 never share a monomial.
    """

    numerator: SuperPoly
    shift: int = 0

    def __post_init__(self):
        num = self.numerator
        if not num:
            object.__setattr__(self, "shift", 0)
            return
        low = min(_c0_split(m)[0] for m in num.terms)
        if low:
            terms = {}
            for m, c in num.terms.items():
                e, rest = _c0_split(m)
                terms[_with_c0(rest, e - low)] = c
            object.__setattr__(self, "numerator", SuperPoly._raw(GL11, terms))
            object.__setattr__(self, "shift", self.shift + low)

    @classmethod
    def of(cls, p: SuperPoly) -> "LaurentC0Poly":
        return cls(p, 0)

    @classmethod
    def c0_power(cls, e: int) -> "LaurentC0Poly":
        return cls(SuperPoly.one(GL11), e)

    def __bool__(self):
        return bool(self.numerator)

    @property
    def lowest_c0_exponent(self) -> int | None:
        return self.shift if self.numerator else None

    def terms(self) -> dict:
        """``{(monomial without c_0, c_0 exponent): coeff}``."""
        out = {}
        for m, c in self.numerator.terms.items():
            e, rest = _c0_split(m)
            out[(rest, e + self.shift)] = c
        return out

    def negative_part(self) -> dict:
        return {k: c for k, c in self.terms().items() if k[1] < 0}

    def __add__(self, other):
        if not isinstance(other, LaurentC0Poly):
            other = LaurentC0Poly.of(other)
        low = min(self.shift, other.shift)
        c0 = gen("c", 0)
        a = self.numerator * c0 ** (self.shift - low)
        b = other.numerator * c0 ** (other.shift - low)
        return LaurentC0Poly(a + b, low)

    def __neg__(self):
        return LaurentC0Poly(-self.numerator, self.shift)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentC0Poly):
            return LaurentC0Poly(self.numerator * other.numerator, self.shift + other.shift)
        if isinstance(other, SuperPoly):
            return LaurentC0Poly(self.numerator * other, self.shift)
        return LaurentC0Poly(self.numerator * other, self.shift)

    __rmul__ = __mul__

    def __str__(self):
        from .superpoly import to_text
        if self.shift == 0:
            return to_text(self.numerator)
        return f"({to_text(self.numerator)})*c0^{self.shift}"

    def to_json(self) -> dict:
        from .superpoly import to_json_obj
        return {"numerator": to_json_obj(self.numerator), "c0_shift": self.shift}


def d_series(order: int) -> list[LaurentC0Poly]:
    """d_0..d_order with c(z) d(z) = 1, by d_r = -c_0^-1 sum_{s>=1} c_s d_{r-s}."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    inv = LaurentC0Poly.c0_power(-1)
    out = [inv]
    for r in range(1, order + 1):
        acc = LaurentC0Poly.of(SuperPoly.zero(GL11))
        for s in range(1, r + 1):
            acc = acc + out[r - s] * gen("c", s)
        out.append(-(acc * inv))
    return out


def d_multinomial(r: int) -> LaurentC0Poly:
    """Closed form: c_0^-1 sum over sum s*alpha_s = r of multinomial * prod (-c_s/c_0)^alpha_s."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    terms = []
    for lam in partitions(r):
        alpha = [0] * (r + 1)
        for part in lam:
            alpha[part] += 1
        total = sum(alpha)
        coeff = factorial(total)
        mono = SuperPoly.one(GL11)
        for s, a in enumerate(alpha):
            if a:
                coeff //= factorial(a)
                mono = mono * gen("c", s) ** a
        terms.append(LaurentC0Poly((-1) ** total * coeff * mono, -1 - total))
    acc = LaurentC0Poly.of(SuperPoly.zero(GL11))
    for t in terms:
        acc = acc + t
    return acc


def _a_top(p: SuperPoly) -> int:
    return max((GL11.index(k) for k in p.keys() if GL11.family(k).prefix == "a"), default=-1)


def _check_ac(p: SuperPoly):
    for k in p.keys():
        if GL11.family(k).prefix not in ("a", "c"):
            raise ValueError(f"expected a polynomial in a_r, c_r; found {GL11.name_of(k)}")


def D_apply(p: SuperPoly) -> LaurentC0Poly:
    """sum_r d_r d/da_r applied to a polynomial in a_r, c_r."""
    _check_ac(p)
    top = _a_top(p)
    ds = d_series(max(top, 0))
    acc = LaurentC0Poly.of(SuperPoly.zero(GL11))
    for r in range(top + 1):
        der = derive_even(p, f"a{r}")
        if der:
            acc = acc + ds[r] * der
    return acc


def cancellation_check(p: SuperPoly) -> bool:
    """True iff D p has no negative powers of c_0."""
    return not D_apply(p).negative_part()


def aff11_generator(k: int, r: int) -> SuperPoly:
    """Coefficient of z^r in a(z)^k c(z): a generator of the (1|1) affine algebra in a, c."""
    if k < 0 or r < 0:
        raise ValueError("k, r must be nonnegative")
    z = "z1"
    cap = {"z": r}
    out = generator_series("c", z, r)
    a = generator_series("a", z, r)
    for _ in range(k):
        out = multiply(out, a, cap)
    return coefficient_of(out, {z: r})


def aff11_products(degree: int) -> list[SuperPoly]:
    """All products of generators a(z)^k c(z)|_{z^r} (degree k+r+1) of total degree ``degree``."""
    return _products(degree, lambda d: [aff11_generator(k, d - 1 - k) for k in range(d)], GL11)


def affine_products(m: int, n: int, degree: int) -> list[SuperPoly]:
    """All products of the generators P_{k,r} (degree k+r) of total degree ``degree``."""
    return _products(degree, lambda d: [affine_generator(m, n, k, d - k) for k in range(1, d + 1)],
                     SUSY)


def _products(degree, gens_of_degree, alphabet):
    gens = [(d, g) for d in range(1, degree + 1) for g in gens_of_degree(d)]
    out = []

    def rec(start, left, acc):
        if left == 0:
            out.append(acc)
            return
        for i in range(start, len(gens)):
            d, g = gens[i]
            if d <= left:
                rec(i, left - d, acc * g)

    rec(0, degree, SuperPoly.one(alphabet))
    return out


# ---------------------------------------------------------------------------
# exact linear algebra over Q


def _matrix(rows: list[dict]):
    cols = sorted({k for r in rows for k in r}, key=repr)
    index = {k: i for i, k in enumerate(cols)}
    data = [[QQ(0)] * len(cols) for _ in rows]
    for i, r in enumerate(rows):
        for k, c in r.items():
            c = Fraction(c)
            data[i][index[k]] = QQ(c.numerator, c.denominator)
    return DomainMatrix(data, (len(rows), len(cols)), QQ), cols


def rank(polys) -> int:
    """Dimension of the span of SuperPolys (or coefficient dicts)."""
    rows = [p.terms if isinstance(p, SuperPoly) else p for p in polys]
    rows = [r for r in rows if r]
    if not rows:
        return 0
    return _matrix(rows)[0].rank()


# ---------------------------------------------------------------------------
# injectivity of the Chevalley projection on the invariant basis


@dataclass
class InjectivityReport:
    degree_cap: int
    per_degree: dict = field(default_factory=dict)   # N -> (rank, count)

    @property
    def full_rank(self) -> bool:
        return all(r == c for r, c in self.per_degree.values())

    def __bool__(self):
        return self.full_rank

    def ranks(self) -> list[int]:
        return [self.per_degree[N][0] for N in sorted(self.per_degree)]

    def to_json(self) -> dict:
        return {"degree_cap": self.degree_cap, "full_rank": self.full_rank,
                "per_degree": {str(N): {"rank": r, "count": c}
                               for N, (r, c) in sorted(self.per_degree.items())}}


def invariant_basis(degree_cap: int) -> dict:
    """{degree: [basis element times c-monomial, ...]} for degrees <= degree_cap."""
    from .invariants import basis_degree
    by_deg: dict = {}
    series = {}
    for n, lam, k in basis_indices(degree_cap):
        if n not in series and n > 0:
            room = degree_cap - n * (n + 1)
            series[n] = TruncatedA.compute(n, room, n + room, degree_cap)
        el = basis_element(n, lam, k, series.get(n))
        by_deg.setdefault(basis_degree(n, lam, k), []).append(el)
    out = {N: [] for N in range(degree_cap + 1)}
    for d, els in by_deg.items():
        for e in range(degree_cap + 1 - d):
            for part in partitions(e):
                cm = SuperPoly.one(GL11)
                for p in part:
                    cm = cm * gen("c", p - 1)
                for el in els:
                    out[d + e].append(el * cm)
    return out


def injectivity_spotcheck(degree_cap: int) -> InjectivityReport:
    """Rank of the Chevalley images of the invariant basis, degree by degree."""
    if degree_cap < 0:
        raise ValueError("degree_cap must be nonnegative")
    report = InjectivityReport(degree_cap)
    for N, els in invariant_basis(degree_cap).items():
        report.per_degree[N] = (rank([chevalley(e) for e in els]), len(els))
    return report


# ---------------------------------------------------------------------------
# conjecture probes


def _monomials_ac(degree: int) -> list[SuperPoly]:
    """All monomials in a_r, c_r of internal degree ``degree``."""
    gens = [g for d in range(1, degree + 1) for g in (gen("a", d - 1), gen("c", d - 1))]
    degs = [GL11.spec(next(iter(g.keys()))).degree_internal for g in gens]
    out = []

    def rec(start, left, acc):
        if left == 0:
            out.append(acc)
            return
        for i in range(start, len(gens)):
            if degs[i] <= left:
                rec(i, left - degs[i], acc * gens[i])

    rec(0, degree, SuperPoly.one(GL11))
    return out


def cancellation_kernel_dim(degree: int) -> int:
    """Dimension of the degree-N polynomials P in a_r, c_r with D P free of c_0^-1."""
    monos = _monomials_ac(degree)
    rows = [D_apply(mq).negative_part() for mq in monos]
    return len(monos) - rank(rows)


def probe_canc_3_4(max_degree: int = 4) -> dict:
    """Compare the cancellation kernel with the span of generator products per degree."""
    checked, counter = [], []
    for N in range(max_degree + 1):
        kernel = cancellation_kernel_dim(N)
        span = rank(aff11_products(N))
        checked.append({"degree": N, "kernel_dim": kernel, "span_dim": span})
        if kernel != span:
            counter.append({"degree": N, "kernel_dim": kernel, "span_dim": span})
    return _report("canc_3_4", {"max_degree": max_degree}, checked, counter)


def probe_hp_3_2(m: int = 1, n: int = 1, max_degree: int = 6) -> dict:
    """dim of the generator-product span per degree against f_mn."""
    from .qseries import f_mn
    f = f_mn(m, n, max_degree)
    checked, counter = [], []
    for N in range(max_degree + 1):
        dim = rank(affine_products(m, n, N))
        checked.append({"degree": N, "dim": dim, "f_mn": f[N]})
        if dim != f[N]:
            counter.append({"degree": N, "dim": dim, "f_mn": f[N]})
    return _report("hp_3_2", {"m": m, "n": n, "max_degree": max_degree}, checked, counter)


def probe_chev_4_4(m: int = 1, n: int = 1, max_degree: int = 6) -> dict:
    """Chevalley image of the invariants against the affine supersymmetric span."""
    if (m, n) != (1, 1):
        raise ValueError("only gl(1|1) invariants are implemented")
    basis = invariant_basis(max_degree)
    checked, counter = [], []
    for N in range(max_degree + 1):
        images = [chevalley(e) for e in basis[N]]
        aff = affine_products(1, 1, N)
        r_img, r_aff, r_all = rank(images), rank(aff), rank(images + aff)
        row = {"degree": N, "image_rank": r_img, "basis_size": len(images),
               "affine_dim": r_aff, "joint_rank": r_all}
        checked.append(row)
        if not (r_img == len(images) == r_aff == r_all):
            counter.append(row)
    return _report("chev_4_4", {"m": m, "n": n, "max_degree": max_degree}, checked, counter)


def _report(name, params, checked, counter) -> dict:
    return {"conjecture": name, "params": params, "checked_range": checked,
            "counterexamples": counter}


PROBES = {"canc_3_4": probe_canc_3_4, "hp_3_2": probe_hp_3_2, "chev_4_4": probe_chev_4_4}


def conjecture_probe(kind: str, **params) -> dict:
    try:
        fn = PROBES[kind]
    except KeyError:
        raise ValueError(f"unknown probe {kind!r}; choose from {sorted(PROBES)}") from None
    return fn(**params)
