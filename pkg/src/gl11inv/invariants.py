"""The Y-basis of S°, the F and A series, and the explicit invariant basis.

Truncation of the A series uses an auxiliary *weight* grading: z_k has
weight 1 and t_i has weight i.  Every T_n^(k) is then homogeneous of weight
0, so all factors of A have nonnegative weight and truncating each product
by weight is exact.  On a term of A::

    internal degree = weight + t-degree + n

so an internal-degree bound D caps the weight at D - n.  In F the factor
indexed by j contributes a_{n+j} times a weight n+j polynomial, hence only
j <= W - n matter for a weight bound W.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import NamedTuple

from .gl11 import GL11, gen, generator_series, weight as e22_weight
from .schur import (
    EMPTY, Partition, _single_coefficient, divide_vandermonde, elementary, hook_schur,
    linear_factor, lr_coefficient, partitions, schur_coefficients,
)
from .superpoly import (
    DivisionError, Grading, SuperPoly, coefficient_of, exact_divide, filter_terms,
    linear_combination, multiply, power_series_exp, split_by, substitute, to_json_obj, to_text,
    truncate,
)

_Z_RANK = GL11.key("z1")[0]
_T_RANK = GL11.key("t0")[0]
_A_RANK = GL11.key("a0")[0]
_C_RANK = GL11.key("c0")[0]
_PHI_RANK = GL11.key("phi0")[0]
_PSI_RANK = GL11.key("psi0")[0]


def _weight_of(key) -> int:
    if key[0] == _Z_RANK:
        return 1
    if key[0] == _T_RANK:
        return key[1]
    return 0


WEIGHT = Grading("weight", _weight_of)
ZDEG = GL11.grading("z")
TDEG = GL11.grading("t")


class YIndex(NamedTuple):
    n: int
    lam: Partition


def y_degree(n: int, lam) -> int:
    """Internal degree of Y^(n)_lambda: |lambda| + n(n+1)."""
    return Partition(lam).weight + n * (n + 1)


# ---------------------------------------------------------------------------
# Y^(n)_lambda


def _ordered_product(factors) -> SuperPoly:
    out = SuperPoly.one(GL11)
    for f in factors:
        out = out * f
    return out


def _odd_block(kind: str, part: Partition, n: int) -> SuperPoly:
    """kind_{p1+n-1} ... kind_{pn} in that (display) order."""
    idx = [p + n - 1 - i for i, p in enumerate(part.padded(n))]
    return _ordered_product(gen(kind, i) for i in idx)


def Y(n: int, lam) -> SuperPoly:
    """Y^(n)_lambda = sum c^lambda_{mu nu} phi_{mu+delta} psi_{nu+delta}."""
    lam = Partition(lam)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(lam) > n:
        raise ValueError(f"partition {tuple(lam)} has more than {n} parts")
    return _Y(n, lam)


@lru_cache(maxsize=None)
def _Y(n: int, lam: Partition) -> SuperPoly:
    terms = []
    for wm in range(lam.weight + 1):
        for mu in partitions(wm, max_len=n):
            if not lam.contains(mu):
                continue
            for nu in partitions(lam.weight - wm, max_len=n):
                c = lr_coefficient(mu, nu, lam)
                if c:
                    terms.append((c, _odd_block("phi", mu, n) * _odd_block("psi", nu, n)))
    return linear_combination(GL11, terms)


def y_product(n: int, z_cap: int) -> SuperPoly:
    """y(z1)...y(zn) truncated at total z-degree z_cap."""
    out = SuperPoly.one(GL11)
    for k in range(1, n + 1):
        out = multiply(out, generator_series("y", f"z{k}", z_cap), {"z": z_cap})
    return out


def expand_y_product(n: int, z_cap: int) -> dict:
    """Schur coefficients of y(z1)...y(zn) / prod_{i != j}(z_i - z_j).

    The product is truncated at z-degree ``z_cap``, so the quotient is exact
    up to degree ``z_cap - n(n-1)``; coefficients are returned for all
    partitions up to that size.  A failed division raises DivisionError.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    top = z_cap - n * (n - 1)
    if top < 0:
        return {}
    quotient = divide_vandermonde(y_product(n, z_cap), n, power=2)
    if (n * (n - 1) // 2) % 2:
        quotient = -quotient
    return schur_coefficients(quotient, n, degrees=range(top + 1))


# ---------------------------------------------------------------------------
# decomposition over H = Q[a_i, c_i]


class NotInSubalgebraError(ValueError):
    pass


def decompose(p: SuperPoly) -> dict:
    """Coefficients P with p = sum P[(n, lambda)] * Y^(n)_lambda, P in Q[a_i, c_i].

    Only Y^(n)_mu contains phi_{mu+delta} psi_delta (its coefficient there is
    (-1)^(n(n-1)/2) from reordering the phi block), so each coordinate is read
    off one monomial and the result is checked by reconstruction.
    """
    for mono in p.terms:
        for k, _ in mono[0]:
            if k[0] not in (_A_RANK, _C_RANK):
                raise NotInSubalgebraError(f"variable {GL11.name_of(k)} is not a generator of H")
    try:
        if e22_weight(p) != 0:
            raise NotInSubalgebraError("nonzero E22[0]-weight")
    except ValueError as exc:
        raise NotInSubalgebraError(str(exc)) from None
    coords: dict = {}
    for (evens, odds), c in p.terms.items():
        n = len(odds) // 2
        phis = [GL11.index(k) for k in odds[:n]]
        psis = [GL11.index(k) for k in odds[n:]]
        if len(odds) != 2 * n or any(k[0] != _PHI_RANK for k in odds[:n]):
            continue
        if psis != list(range(n - 1, -1, -1)):
            continue
        desc = sorted(phis, reverse=True)
        lam = Partition(x - (n - 1 - i) for i, x in enumerate(desc))
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        key = YIndex(n, lam)
        coords.setdefault(key, {})[(evens, ())] = sign * c
    result = {k: SuperPoly(GL11, v) for k, v in sorted(coords.items())}
    if reconstruct(result) != p:
        raise NotInSubalgebraError("element is not in the span of the Y basis over H")
    return result


def reconstruct(decomposition: dict) -> SuperPoly:
    return linear_combination(
        GL11, [(1, multiply(coeff, Y(n, lam))) for (n, lam), coeff in decomposition.items()])


def decomposition_to_json(decomposition: dict) -> list:
    return [{"n": n, "lambda": list(lam), "coefficient": to_json_obj(coeff)}
            for (n, lam), coeff in decomposition.items()]


# ---------------------------------------------------------------------------
# rational functions with linear denominators


def _factor_weight(grading: Grading, i: int, j: int) -> int:
    wi, wj = grading.var(GL11.key(f"z{i}")), grading.var(GL11.key(f"z{j}"))
    if wi != wj:
        raise ValueError(f"z{i} - z{j} is not homogeneous for {grading!r}")
    return wi


@dataclass(frozen=True)
class RationalFunctionZ:
    """``numerator / prod (z_i - z_j)^m`` over pairs i < j."""

    numerator: SuperPoly
    denominator: tuple = ()  # sorted ((i, j), multiplicity) pairs

    @classmethod
    def of(cls, p: SuperPoly) -> "RationalFunctionZ":
        return cls(p, ())

    @property
    def factors(self) -> dict:
        return dict(self.denominator)

    def denominator_poly(self) -> SuperPoly:
        out = SuperPoly.one(GL11)
        for (i, j), m in self.denominator:
            out = out * linear_factor(i, j) ** m
        return out

    def _den_weight(self, grading: Grading) -> int:
        return sum(m * _factor_weight(grading, i, j) for (i, j), m in self.denominator)

    def _num_cap(self, cap):
        if not cap:
            return None
        out = {}
        for g, bound in cap.items():
            g = GL11.grading(g) if isinstance(g, str) else g
            out[g] = bound + self._den_weight(g)
        return out

    def truncate(self, cap) -> "RationalFunctionZ":
        """Drop terms whose weight (numerator minus denominator) exceeds cap."""
        return RationalFunctionZ(truncate(self.numerator, self._num_cap(cap)), self.denominator)

    def mul(self, other: "RationalFunctionZ", cap=None) -> "RationalFunctionZ":
        den = dict(self.denominator)
        for f, m in other.denominator:
            den[f] = den.get(f, 0) + m
        res = RationalFunctionZ(SuperPoly.zero(GL11), tuple(sorted(den.items())))
        num = multiply(self.numerator, other.numerator, res._num_cap(cap))
        return RationalFunctionZ(num, res.denominator)

    __mul__ = mul

    def add(self, other: "RationalFunctionZ") -> "RationalFunctionZ":
        a, b = self.factors, other.factors
        common = {f: max(a.get(f, 0), b.get(f, 0)) for f in set(a) | set(b)}

        def lift(x, own):
            num = x.numerator
            for (i, j), m in common.items():
                extra = m - own.get((i, j), 0)
                if extra:
                    num = num * linear_factor(i, j) ** extra
            return num

        return RationalFunctionZ(lift(self, a) + lift(other, b),
                                 tuple(sorted((f, m) for f, m in common.items() if m)))

    __add__ = add

    def collapse(self) -> "RationalFunctionZ":
        """Cancel linear factors of the denominator that divide the numerator."""
        num = self.numerator
        den = {}
        for (i, j), m in self.denominator:
            left = m
            while left and num:
                try:
                    num = exact_divide(num, linear_factor(i, j))
                except DivisionError:
                    break
                left -= 1
            if not num:
                left = 0
            if left:
                den[(i, j)] = left
        return RationalFunctionZ(num, tuple(sorted(den.items())))

    def to_poly(self) -> SuperPoly:
        """Collapse to a polynomial, raising DivisionError on a residual denominator."""
        r = self.collapse()
        if r.denominator:
            raise DivisionError(f"residual denominator {r.denominator}")
        return r.numerator


def T_rational(n: int, k: int) -> RationalFunctionZ:
    """T_n^(k) = sum_m (-1)^m t_{n-1-m} e_m(z without z_k) / prod_{l != k}(z_k - z_l)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    others = [l for l in range(1, n + 1) if l != k]
    num = linear_combination(GL11, [
        ((-1) ** m, SuperPoly.var(GL11, f"t{n - 1 - m}") * elementary(m, others))
        for m in range(n)])
    den = []
    sign = 1
    for l in others:
        if l < k:
            sign = -sign  # z_k - z_l = -(z_l - z_k)
            den.append(((l, k), 1))
        else:
            den.append(((k, l), 1))
    return RationalFunctionZ(num * sign, tuple(sorted(den)))


# ---------------------------------------------------------------------------
# F and A series


def _hook_combination(n: int, j: int) -> SuperPoly:
    """t_{n-1} s_(j+1) - t_{n-2} s_(j+1,1) + ... + (-1)^(n-1) t_0 s_(j+1,1^(n-1))."""
    return linear_combination(GL11, [
        ((-1) ** m, SuperPoly.var(GL11, f"t{n - 1 - m}") * hook_schur(j, m, n))
        for m in range(n)])


def _f_exponent(n: int, weight_cap: int) -> SuperPoly:
    # (1 - d_i^{-1} X)^{-1} 1 = sum_p X^p a_i^p / p!, so the product is exp(sum a_i X_i)
    terms = [(1, gen("a", i) * SuperPoly.var(GL11, f"t{i}")) for i in range(n)]
    for j in range(max(weight_cap - n + 1, 0)):
        terms.append((1, gen("a", n + j) * _hook_combination(n, j)))
    return linear_combination(GL11, terms)


def _caps(n: int, z_cap: int, t_cap: int, internal_cap: int | None):
    w = z_cap + max(n - 1, 0) * t_cap
    if internal_cap is not None:
        w = min(w, internal_cap - n)
    cap = {WEIGHT: w, TDEG: t_cap}
    if internal_cap is not None:
        cap[GL11.grading("internal")] = internal_cap
    return w, cap


def F_series(n: int, z_cap: int, t_cap: int, internal_cap: int | None = None) -> SuperPoly:
    """F(z1..zn; t0..t_{n-1}) up to z-degree z_cap and t-degree t_cap."""
    if z_cap < 0 or t_cap < 0:
        raise ValueError("caps must be nonnegative")
    if n == 0:
        return SuperPoly.one(GL11)
    w, cap = _caps(n, z_cap, t_cap, internal_cap)
    if w < 0:
        return SuperPoly.zero(GL11)
    f = power_series_exp(truncate(_f_exponent(n, w), cap), cap)
    return filter_terms(f, lambda m: ZDEG(m) <= z_cap)


def _prefactor(n: int, k: int, w: int) -> RationalFunctionZ:
    """c(z_k) + y(z_k) T_n^(k) over the common denominator of T_n^(k)."""
    z = f"z{k}"
    tk = T_rational(n, k)
    num = generator_series("c", z, w) * tk.denominator_poly() + \
        generator_series("y", z, w) * tk.numerator
    return RationalFunctionZ(num, tk.denominator)


def A_series(n: int, z_cap: int, t_cap: int, internal_cap: int | None = None) -> SuperPoly:
    """A(z1..zn; t0..t_{n-1}) = prod_k (c(z_k) + y(z_k) T_n^(k)) F, truncated.

    Returned up to z-degree z_cap and t-degree t_cap (and internal degree
    ``internal_cap`` if given).  The denominators collapse by exact division;
    a leftover denominator raises DivisionError.
    """
    if z_cap < 0 or t_cap < 0:
        raise ValueError("caps must be nonnegative")
    if n == 0:
        return SuperPoly.one(GL11)
    w, cap = _caps(n, z_cap, t_cap, internal_cap)
    if w < 0:
        return SuperPoly.zero(GL11)
    acc = RationalFunctionZ.of(F_series_weighted(n, w, cap))
    for k in range(1, n + 1):
        acc = acc.mul(_prefactor(n, k, w).truncate(cap), cap)
    poly = acc.to_poly()
    return filter_terms(poly, lambda m: ZDEG(m) <= z_cap)


def F_series_weighted(n: int, w: int, cap) -> SuperPoly:
    return power_series_exp(truncate(_f_exponent(n, w), cap), cap)


def aztone(k: int, z: str, z_cap: int) -> SuperPoly:
    """(a(z)^(k-1) c(z) + (k-1) a(z)^(k-2) y(z)) / (k-1)!, up to z^z_cap."""
    if k < 1:
        raise ValueError("k must be positive")
    cap = {"z": z_cap}
    a = generator_series("a", z, z_cap)
    c = generator_series("c", z, z_cap)
    yz = generator_series("y", z, z_cap)
    head = multiply(a ** (k - 1), c, cap)
    if k >= 2:
        head = head + multiply(a ** (k - 2), yz, cap) * (k - 1)
    return truncate(head, cap) * Fraction(1, factorial(k - 1))


# ---------------------------------------------------------------------------
# factorization A(z; t) = prod_k A(z_k; T_n^(k))


@dataclass(frozen=True)
class FactorizationResult:
    holds: bool
    monomial: str | None = None
    lhs: SuperPoly | None = None
    rhs: SuperPoly | None = None

    def __bool__(self):
        return self.holds


def _rename_z(p: SuperPoly, k: int) -> SuperPoly:
    if k == 1:
        return p
    zk = SuperPoly.var(GL11, f"z{k}")
    return substitute(p, lambda key: zk if key == GL11.key("z1") else None)


def factorization_check(n: int, z_cap: int, t_cap: int) -> FactorizationResult:
    """Compare A(z; t) with prod_k A(z_k; T_n^(k)) up to z-degree and t-degree caps."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lhs = A_series(n, z_cap, t_cap)
    w = z_cap + (n - 1) * t_cap
    cap = {WEIGHT: w, TDEG: t_cap}
    single = A_series(1, w, t_cap)
    rhs = RationalFunctionZ.of(SuperPoly.one(GL11))
    for k in range(1, n + 1):
        ak = _rename_z(single, k)
        tk = T_rational(n, k)
        power = RationalFunctionZ.of(SuperPoly.one(GL11))
        factor = None
        for p in range(t_cap + 1):
            coeff = coefficient_of(ak, {"t0": p})
            term = RationalFunctionZ.of(coeff).mul(power, cap)
            factor = term if factor is None else factor.add(term)
            power = power.mul(tk, cap)
        rhs = rhs.mul(factor, cap)
    # Cross-multiplied comparison: both sides are exact up to z-degree
    # z_cap + deg(den) because the denominator is homogeneous in z.
    den = rhs.denominator_poly()
    top = z_cap + den.degree(ZDEG)
    keep = lambda m: ZDEG(m) <= top and TDEG(m) <= t_cap  # noqa: E731
    if filter_terms(rhs.numerator, keep) == filter_terms(multiply(lhs, den), keep):
        return FactorizationResult(True)
    rhs_poly = filter_terms(rhs.to_poly(), lambda m: ZDEG(m) <= z_cap and TDEG(m) <= t_cap)
    for sel, _ in sorted(split_by(lhs - rhs_poly, ["z", "t"]).items()):
        aux = {GL11.name_of(k): e for k, e in sel}
        return FactorizationResult(
            False, to_text(SuperPoly._raw(GL11, {(sel, ()): 1})),
            coefficient_of(lhs, aux, ["z", "t"]), coefficient_of(rhs_poly, aux, ["z", "t"]))
    return FactorizationResult(False)


# ---------------------------------------------------------------------------
# basis elements


@dataclass
class TruncatedA:
    """A_series output together with the caps it is exact for."""

    n: int
    z_cap: int
    t_cap: int
    internal_cap: int | None
    poly: SuperPoly = field(repr=False)

    @classmethod
    def compute(cls, n, z_cap, t_cap, internal_cap=None):
        return cls(n, z_cap, t_cap, internal_cap, A_series(n, z_cap, t_cap, internal_cap))


def basis_degree(n: int, lam, k) -> int:
    return y_degree(n, lam) + sum((i + 1) * e for i, e in enumerate(k))


def basis_element(n: int, lam, k=(), series: TruncatedA | None = None) -> SuperPoly:
    """Coefficient of t_0^k0 ... t_{n-1}^(k_{n-1}+n) s_lambda(z) in A(z1..zn; t).

    Its leading component is Y^(n)_lambda a_0^k0 ... a_{n-1}^k_{n-1} / prod k_i!.
    """
    lam = Partition(lam)
    k = tuple(k)
    if len(lam) > n:
        raise ValueError(f"partition {tuple(lam)} has more than {n} parts")
    if len(k) != n or any(e < 0 for e in k):
        raise ValueError(f"need {n} nonnegative exponents")
    if n == 0:
        return SuperPoly.one(GL11)
    texp = list(k)
    texp[-1] += n
    t_deg = sum(texp)
    deg = basis_degree(n, lam, k)
    if series is None:
        series = TruncatedA.compute(n, lam.weight, t_deg, deg)
    else:
        if series.n != n:
            raise ValueError("series computed for a different n")
        if series.z_cap < lam.weight or series.t_cap < t_deg or \
                (series.internal_cap is not None and series.internal_cap < deg):
            raise ValueError(
                f"insufficient caps: need z>={lam.weight}, t>={t_deg}, internal>={deg}")
    coeff = coefficient_of(series.poly, {f"t{i}": e for i, e in enumerate(texp)}, over=["t"])
    coeff = filter_terms(coeff, lambda m: ZDEG(m) == lam.weight)
    return _single_coefficient(coeff, n, lam)


def basis_indices(max_degree: int):
    """All (n, lambda, k) with basis_degree <= max_degree, by increasing n."""
    out = []
    n = 0
    while n * (n + 1) <= max_degree:
        room = max_degree - n * (n + 1)
        for size in range(room + 1):
            for lam in partitions(size, max_len=n):
                for k in _exponent_vectors(n, room - size):
                    out.append((n, lam, k))
        n += 1
    return out


def _exponent_vectors(n: int, budget: int):
    """Vectors k of length n with sum (i+1) k_i <= budget."""
    if n == 0:
        yield ()
        return

    def rec(i, left):
        if i == n:
            yield ()
            return
        for e in range(left // (i + 1) + 1):
            for rest in rec(i + 1, left - e * (i + 1)):
                yield (e,) + rest
    yield from rec(0, budget)


def leading_coefficient(n: int, k) -> SuperPoly:
    """a_0^k0 ... a_{n-1}^k_{n-1} / prod k_i!."""
    out = SuperPoly.one(GL11)
    for i, e in enumerate(k):
        out = out * gen("a", i) ** e * Fraction(1, factorial(e))
    return out


__all__ = [
    "A_series", "EMPTY", "F_series", "FactorizationResult", "NotInSubalgebraError",
    "RationalFunctionZ", "T_rational", "TruncatedA", "Y", "YIndex", "aztone", "basis_degree",
    "basis_element", "basis_indices", "decompose", "decomposition_to_json", "expand_y_product",
    "factorization_check", "leading_coefficient", "reconstruct", "y_degree", "y_product",
]
