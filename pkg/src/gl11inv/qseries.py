"""Truncated integer q-series, the generating functions built from them,
and brute-force enumerators used as independent oracles."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .schur import Partition, partitions

INF = math.inf


@dataclass(frozen=True)
class QSeries:
    """c_0 + c_1 q + ... + c_D q^D, exact modulo q^(D+1)."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        c = tuple(int(x) for x in self.coeffs[: self.order + 1])
        object.__setattr__(self, "coeffs", c + (0,) * (self.order + 1 - len(c)))

    @classmethod
    def monomial(cls, k: int, order: int, c: int = 1) -> "QSeries":
        out = [0] * (order + 1)
        if 0 <= k <= order:
            out[k] = c
        return cls(tuple(out), order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.monomial(0, order)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _other(self, other) -> "QSeries":
        if isinstance(other, int):
            return QSeries.monomial(0, self.order, other)
        return other

    def __add__(self, other):
        other = self._other(other)
        d = min(self.order, other.order)
        return QSeries(tuple(self[i] + other[i] for i in range(d + 1)), d)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(tuple(-x for x in self), self.order)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(tuple(other * x for x in self), self.order)
        d = min(self.order, other.order)
        out = [0] * (d + 1)
        for i, a in enumerate(self.coeffs[: d + 1]):
            if a:
                for j in range(d + 1 - i):
                    out[i + j] += a * other[j]
        return QSeries(tuple(out), d)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QSeries":
        """q^k times self."""
        if k < 0:
            raise ValueError("negative shift")
        return QSeries((0,) * k + self.coeffs, self.order)

    def inverse(self) -> "QSeries":
        if self[0] not in (1, -1):
            raise ZeroDivisionError("constant term must be a unit")
        u = self[0]
        out = [0] * (self.order + 1)
        out[0] = u
        for n in range(1, self.order + 1):
            s = sum(self[i] * out[n - i] for i in range(1, n + 1))
            out[n] = -u * s
        return QSeries(tuple(out), self.order)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QSeries.one(self.order)
        for _ in range(n):
            out = out * self
        return out

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "QSeries":
        return cls(tuple(obj["coefficients"]), obj["order"])


def pochhammer(k, order: int) -> QSeries:
    """(q)_k = prod_{i=1}^k (1 - q^i); k = INF uses the factors with i <= order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    top = order if k == INF else int(k)
    if top < 0:
        raise ValueError("k must be nonnegative")
    return _pochhammer(min(top, order) if k == INF else top, order)


@lru_cache(maxsize=None)
def _pochhammer(k: int, order: int) -> QSeries:
    out = [0] * (order + 1)
    out[0] = 1
    for i in range(1, k + 1):
        # multiply by (1 - q^i) in place, from the top down
        for n in range(order, i - 1, -1):
            out[n] -= out[n - i]
    return QSeries(tuple(out), order)


def _inv_poch(k, order):
    return pochhammer(k, order).inverse()


def planep_series(order: int) -> QSeries:
    """(q)_inf^-2 sum_k (-1)^k q^((k^2+k)/2)."""
    acc = QSeries.one(order) * 0
    k = 0
    while (k * k + k) // 2 <= order:
        acc = acc + QSeries.monomial((k * k + k) // 2, order, (-1) ** k)
        k += 1
    return acc * _inv_poch(INF, order) ** 2


def fermionic_series(order: int) -> QSeries:
    """(q)_inf^-1 sum_k q^(k^2+k) / (q)_k^2."""
    acc = QSeries.one(order) * 0
    k = 0
    while k * k + k <= order:
        acc = acc + (_inv_poch(k, order) ** 2).shift(k * k + k)
        k += 1
    return acc * _inv_poch(INF, order)


def ids_sides(s: int, order: int) -> tuple[QSeries, QSeries]:
    """Both sides of the shifted fermionic identity with parameter s."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    lhs = QSeries.one(order) * 0
    k = 0
    while k * k + k <= order:
        lhs = lhs + (_inv_poch(k, order) ** 2).shift(k * k + k)
        k += 1
    head = QSeries.one(order) * 0
    for k in range(s):
        e = (k * k + k) // 2
        if e <= order:
            head = head + QSeries.monomial(e, order, (-1) ** k)
    lhs = lhs - head * _inv_poch(INF, order)
    # both exponents below increase with k once k >= s
    rhs = QSeries.one(order) * 0
    k = s
    while (e := k * k - (s - 1) * k + (s * s - s) // 2) <= order:
        rhs = rhs + (_inv_poch(k, order) * _inv_poch(k - s, order)).shift(e)
        k += 1
    return lhs, rhs * (-1) ** s


def auxiliary_sides(s: int, order: int) -> tuple[QSeries, QSeries]:
    """1/(q)_inf against sum_{k>=s} q^(k(k-s)) / ((q)_k (q)_(k-s))."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    rhs = QSeries.one(order) * 0
    k = s
    while k * (k - s) <= order:
        rhs = rhs + (_inv_poch(k, order) * _inv_poch(k - s, order)).shift(k * (k - s))
        k += 1
    return _inv_poch(INF, order), rhs


def ids_check(s: int, order: int) -> bool:
    lhs, rhs = ids_sides(s, order)
    return lhs == rhs


def auxiliary_check(s: int, order: int) -> bool:
    lhs, rhs = auxiliary_sides(s, order)
    return lhs == rhs


def f_mn(m: int, n: int, order: int) -> QSeries:
    """Generating function of plane partitions over the (m, n)-hook.

    The alternating sum is stated for n >= m >= 1; other orders use the
    symmetry of the hook under transposition.
    """
    if m > n:
        m, n = n, m
    if m < 1:
        raise ValueError("need m, n >= 1")
    total = [0] * (order + 1)

    def term(ks):
        full = list(ks) + [0] * (n - m)
        # k (k + 2i + 1) is always even
        e = sum(k * (k + 2 * i + 1) for i, k in enumerate(ks)) // 2
        if e > order:
            return
        series = QSeries.monomial(e, order, (-1) ** sum(ks))
        for i in range(m):
            for j in range(i + 1, m):
                series = series * _one_minus(ks[i] - ks[j] + j - i, order)
        for i in range(n):
            for j in range(i + 1, n):
                series = series * _one_minus(full[i] - full[j] + j - i, order)
        for x in range(order + 1):
            total[x] += series[x]

    def rec(prefix, bound):
        if len(prefix) == m:
            term(prefix)
            return
        for k in range(bound + 1):
            rec(prefix + [k], k)

    # the exponent is at least (k_1^2 + k_1)/2, so k_1 is bounded
    top = 0
    while (top + 1) * (top + 2) // 2 <= order:
        top += 1
    rec([], top)
    return QSeries(tuple(total), order) * _inv_poch(INF, order) ** (m + n)


def _one_minus(e: int, order: int) -> QSeries:
    if e <= 0:
        raise ValueError("nonpositive exponent in a difference product")
    return QSeries.one(order) - QSeries.monomial(e, order)


# ---------------------------------------------------------------------------
# plane partitions over a hook


def in_hook(lam: Partition, m: int, n: int) -> bool:
    """No box at (m+1, n+1): fewer than m+1 rows have length at least n+1."""
    return len(lam) <= m or lam[m] <= n


def subpartitions(lam: Partition):
    """All nonempty partitions mu contained in lambda."""
    lam = tuple(lam)

    def rec(i, cap):
        if i == len(lam):
            yield ()
            return
        for p in range(min(lam[i], cap), -1, -1):
            if p == 0:
                yield ()
                continue
            for rest in rec(i + 1, p):
                yield (p,) + rest

    for mu in rec(0, lam[0] if lam else 0):
        if mu:
            yield Partition(mu)


@lru_cache(maxsize=None)
def _stacks(top: Partition, remaining: int) -> int:
    """Chains top ⊇ mu_2 ⊇ ... of nonempty layers below top using exactly ``remaining`` boxes."""
    if remaining == 0:
        return 1
    total = 0
    for mu in subpartitions(top):
        if mu.weight <= remaining:
            total += _stacks(mu, remaining - mu.weight)
    return total


def enumerate_pp(m: int, n: int, volume: int) -> int:
    """Number of plane partitions over the (m, n)-hook with ``volume`` cubes."""
    if volume < 0:
        raise ValueError("volume must be nonnegative")
    if volume == 0:
        return 1
    total = 0
    for size in range(1, volume + 1):
        for lam in partitions(size):
            if in_hook(lam, m, n):
                total += _stacks(lam, volume - size)
    return total


def list_pp(m: int, n: int, volume: int) -> list[tuple[Partition, ...]]:
    """The plane partitions themselves, as tuples of layers (small volumes only)."""
    out = []

    def below(top, remaining, chain):
        if remaining == 0:
            out.append(tuple(chain))
            return
        for mu in subpartitions(top):
            if mu.weight <= remaining:
                below(mu, remaining - mu.weight, chain + [mu])

    if volume == 0:
        return [()]
    for size in range(1, volume + 1):
        for lam in partitions(size):
            if in_hook(lam, m, n):
                below(lam, volume - size, [lam])
    return out


def pp_series(m: int, n: int, order: int) -> QSeries:
    return QSeries(tuple(enumerate_pp(m, n, v) for v in range(order + 1)), order)


# ---------------------------------------------------------------------------
# hook diagrams


def chi_mn(m: int, n: int, order: int) -> QSeries:
    """sum_{k <= min(m,n)} q^((m-k)(n-k)) / ((q)_(m-k) (q)_(n-k))."""
    if m < 0 or n < 0:
        raise ValueError("m, n must be nonnegative")
    acc = QSeries.one(order) * 0
    for k in range(min(m, n) + 1):
        e = (m - k) * (n - k)
        if e <= order:
            acc = acc + (_inv_poch(m - k, order) * _inv_poch(n - k, order)).shift(e)
    return acc


def chi_recurrence_holds(m: int, n: int, order: int) -> bool:
    """chi_{m,n} = chi_{m-1,n-1} + q^(mn) / ((q)_m (q)_n) for m, n >= 1."""
    if m < 1 or n < 1:
        raise ValueError("recurrence needs m, n >= 1")
    rhs = chi_mn(m - 1, n - 1, order)
    if m * n <= order:
        rhs = rhs + (_inv_poch(m, order) * _inv_poch(n, order)).shift(m * n)
    return chi_mn(m, n, order) == rhs


def count_hook_diagrams(m: int, n: int, size: int) -> int:
    if size < 0:
        raise ValueError("size must be nonnegative")
    return sum(1 for lam in partitions(size) if in_hook(lam, m, n))


# ---------------------------------------------------------------------------
# Hilbert-Poincare series from the invariant basis


def hp_from_basis(order: int) -> QSeries:
    """Count basis elements (n, lambda, k) times c-monomials degree by degree.

    The basis element indexed by (n, lambda, k) has degree
    |lambda| + n(n+1) + sum (i+1) k_i, and c_i has degree i+1, so c-monomials
    of degree N are counted by partitions of N.
    """
    from .invariants import basis_degree, basis_indices

    base = Counter(basis_degree(n, lam, k) for n, lam, k in basis_indices(order))
    cmono = [sum(1 for _ in partitions(d)) for d in range(order + 1)]
    out = [0] * (order + 1)
    for d, cnt in base.items():
        for e in range(order + 1 - d):
            out[d + e] += cnt * cmono[e]
    return QSeries(tuple(out), order)
