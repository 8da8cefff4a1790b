"""Partitions, Schur polynomials and Littlewood-Richardson coefficients.

Polynomials in z1..zn are SuperPolys over the gl(1|1) alphabet, so they mix
freely with the series of the invariant-basis module.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

from .gl11 import GL11
from .superpoly import SuperPoly, exact_divide, linear_combination, multiply, split_by


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"{parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def padded(self, n: int) -> tuple:
        if len(self) > n:
            raise ValueError(f"{tuple(self)} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


EMPTY = Partition()


def partitions(n: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions(n - first, rest_len, first):
            yield Partition((first,) + tuple(rest))


def partitions_upto(n: int, max_len: int | None = None) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions(k, max_len)


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, cyc = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cyc += 1
        if cyc % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def signed_permutations(n: int):
    return tuple((p, _perm_sign(p)) for p in permutations(range(n)))


def zkey(i: int):
    return GL11.key(f"z{i}")


def zvar(i: int) -> SuperPoly:
    return SuperPoly.var(GL11, f"z{i}")


def z_monomial(exps) -> SuperPoly:
    """z1^e1 ... zn^en."""
    evens = tuple((zkey(i + 1), e) for i, e in enumerate(exps) if e)
    return SuperPoly._raw(GL11, {(evens, ()): 1})


def alternant(exps, n: int) -> SuperPoly:
    """det[z_j^{exps_i}] for i, j = 1..n."""
    terms = {}
    for perm, sign in signed_permutations(n):
        evens = tuple(sorted((zkey(perm[i] + 1), e) for i, e in enumerate(exps) if e))
        m = (evens, ())
        terms[m] = terms.get(m, 0) + sign
    return SuperPoly(GL11, terms)


def linear_factor(i: int, j: int) -> SuperPoly:
    """z_i - z_j."""
    return zvar(i) - zvar(j)


def vandermonde(n: int) -> SuperPoly:
    return alternant(tuple(range(n - 1, -1, -1)), n)


def divide_vandermonde(p: SuperPoly, n: int, power: int = 1) -> SuperPoly:
    """Exact division by prod_{i<j}(z_i - z_j)^power, one linear factor at a time."""
    for _ in range(power):
        for i, j in combinations(range(1, n + 1), 2):
            p = exact_divide(p, linear_factor(i, j))
    return p


def schur(lam, n: int, cap: int | None = None) -> SuperPoly:
    """s_lambda(z1..zn) as a ratio of alternants; 0 if lambda has more than n parts."""
    lam = Partition(lam)
    if len(lam) > n or (cap is not None and lam.weight > cap):
        return SuperPoly.zero(GL11)
    return _schur(lam, n)


@lru_cache(maxsize=None)
def _schur(lam: Partition, n: int) -> SuperPoly:
    if n == 0:
        return SuperPoly.one(GL11)
    exps = tuple(p + n - 1 - i for i, p in enumerate(lam.padded(n)))
    return divide_vandermonde(alternant(exps, n), n)


def hook_schur(j: int, k: int, n: int) -> SuperPoly:
    """s_{(j+1, 1^k)}(z1..zn)."""
    return schur((j + 1,) + (1,) * k, n)


def elementary(k: int, variables) -> SuperPoly:
    """e_k of the given z-variable names (or indices)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    names = [v if isinstance(v, str) else f"z{v}" for v in variables]
    terms = [(1, _prod(names_sub)) for names_sub in combinations(names, k)]
    return linear_combination(GL11, terms)


def _prod(names) -> SuperPoly:
    out = SuperPoly.one(GL11)
    for nm in names:
        out = out * SuperPoly.var(GL11, nm)
    return out


# ---------------------------------------------------------------------------
# Schur expansion


def schur_coefficients(f: SuperPoly, n: int, degrees=None) -> dict:
    """Expand a symmetric polynomial in z1..zn over the Schur basis.

    The coefficient of s_lambda is that of z^(lambda+delta) in f * a_delta,
    read off as sum_sigma sgn(sigma) [z^(lambda + delta - sigma(delta))] f.
    Coefficients may involve non-z variables.  Returns {Partition: SuperPoly}.
    """
    by_exp = _z_exponent_table(f, n)
    if degrees is None:
        degrees = sorted({sum(e) for e in by_exp})
    out = {}
    for d in degrees:
        for lam in partitions(d, max_len=n):
            val = _antisymmetrized(by_exp, n, lam)
            if val:
                out[lam] = val
    return out


def _z_exponent_table(f: SuperPoly, n: int) -> dict:
    zpos = {zkey(i + 1): i for i in range(n)}
    by_exp = {}
    for sel, coeff in split_by(f, ["z"]).items():
        exps = [0] * n
        for k, e in sel:
            if k not in zpos:
                raise ValueError(f"variable {GL11.name_of(k)} outside z1..z{n}")
            exps[zpos[k]] = e
        by_exp[tuple(exps)] = coeff
    return by_exp


def _antisymmetrized(by_exp: dict, n: int, lam: Partition) -> SuperPoly:
    delta = tuple(range(n - 1, -1, -1))
    target = [x + y for x, y in zip(lam.padded(n), delta)]
    parts = []
    for perm, sign in signed_permutations(n):
        alpha = tuple(target[i] - delta[perm[i]] for i in range(n))
        c = by_exp.get(alpha)
        if c is not None:
            parts.append((sign, c))
    return linear_combination(GL11, parts)


def _single_coefficient(f: SuperPoly, n: int, lam: Partition) -> SuperPoly:
    return _antisymmetrized(_z_exponent_table(f, n), n, Partition(lam))


# ---------------------------------------------------------------------------
# Littlewood-Richardson


@lru_cache(maxsize=None)
def lr_expansion(mu, nu) -> dict:
    """{lambda: c^lambda_{mu nu}} from s_mu s_nu in l(mu)+l(nu) variables."""
    mu, nu = Partition(mu), Partition(nu)
    n = len(mu) + len(nu)
    if n == 0:
        return {EMPTY: 1}
    prod = multiply(schur(mu, n), schur(nu, n))
    coeffs = schur_coefficients(prod, n, degrees=[mu.weight + nu.weight])
    return {lam: c.constant_term() for lam, c in coeffs.items()}


def lr_coefficient(mu, nu, lam) -> int:
    """c^lambda_{mu nu}: coefficient of s_lambda in s_mu s_nu."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if lam.weight != mu.weight + nu.weight or len(lam) > len(mu) + len(nu):
        return 0
    if not (lam.contains(mu) and lam.contains(nu)):
        return 0
    return _lr_single(mu, nu, lam)


@lru_cache(maxsize=None)
def _lr_single(mu, nu, lam) -> int:
    # Schur polynomials with at most n parts stay independent in n variables,
    # so l(lambda) variables are enough to isolate this coefficient.
    n = len(lam)
    if n == 0:
        return 1
    prod = multiply(schur(mu, n), schur(nu, n))
    return int(_single_coefficient(prod, n, lam).constant_term())


def lr_tableaux_count(mu, nu, lam) -> int:
    """c^lambda_{mu nu} by counting LR tableaux of shape lambda/mu and content nu.

    Rows are filled top to bottom, each weakly increasing left to right, with
    strictly increasing columns; the reverse reading word (right to left, top
    to bottom) must be a lattice word.  Independent of the bialternant route.
    """
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if lam.weight != mu.weight + nu.weight or not lam.contains(mu):
        return 0
    rows = len(lam)
    mu_p = mu.padded(rows)
    content = len(nu)
    filled: list[list[int]] = []

    def fill_row(r, counts):
        if r == rows:
            return 1 if list(counts) == list(nu) else 0
        width = lam[r] - mu_p[r]
        above = filled[r - 1] if r else None
        above_mu = mu_p[r - 1] if r else 0
        total = 0

        # choose the entries right to left so lattice checks follow the reading word
        def place(col, row_vals, cts):
            nonlocal total
            if col < 0:
                filled.append(row_vals[::-1])
                total_row = fill_row(r + 1, cts)
                filled.pop()
                return total_row
            acc = 0
            hi = row_vals[-1] if row_vals else content
            for x in range(1, hi + 1):
                pos = mu_p[r] + col
                if above is not None and pos < lam[r - 1]:
                    if pos >= above_mu and above[pos - above_mu] >= x:
                        continue
                if cts[x - 1] + 1 > nu[x - 1]:
                    continue
                if x > 1 and cts[x - 1] + 1 > cts[x - 2]:
                    continue
                new = list(cts)
                new[x - 1] += 1
                acc += place(col - 1, row_vals + [x], tuple(new))
            return acc

        total = place(width - 1, [], counts)
        return total

    if content == 0:
        return 1 if lam == mu else 0
    return fill_row(0, tuple([0] * content))
