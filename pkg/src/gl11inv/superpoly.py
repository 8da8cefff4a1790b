"""Sparse supercommutative polynomials with exact rational coefficients.

A variable is identified by a small integer tuple ``(rank, index, ...)`` handed
out by an :class:`Alphabet`.  Comparing these tuples gives the canonical
variable order, so the odd part of a monomial can be kept sorted and the
Koszul sign of a product is just an inversion count.

A monomial is a pair ``(evens, odds)``: ``evens`` is a sorted tuple of
``(key, exponent)`` pairs and ``odds`` a sorted tuple of distinct keys.
"""
from __future__ import annotations

import heapq
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Union

EVEN, ODD = 0, 1

Key = tuple
Monomial = tuple  # (evens, odds)
Coeff = Union[int, Fraction]

ONE_MONO: Monomial = ((), ())


class AlphabetError(ValueError):
    pass


class DivisionError(ArithmeticError):
    """Raised when a claimed exact division leaves a remainder."""


@dataclass(frozen=True)
class VarSpec:
    name: str
    parity: int
    degree_internal: int
    degree_aux: int


@dataclass(frozen=True)
class Family:
    """A family of variables sharing a name prefix, e.g. ``a0, a1, ...``.

    ``arity`` is the number of integer indices in the name (``u``, ``z3``,
    ``u1_4``).  The internal degree is the last index plus ``internal_offset``
    (or 0 when the offset is None).  ``descending`` reverses the canonical
    order inside the family.
    """

    prefix: str
    rank: int
    parity: int = EVEN
    arity: int = 1
    internal_offset: int | None = None
    aux: int = 0
    descending: bool = False

    def pattern(self) -> re.Pattern:
        idx = {0: "", 1: r"(\d+)", 2: r"(\d+)_(\d+)"}[self.arity]
        return re.compile(re.escape(self.prefix) + idx + "$")


class Alphabet:
    """A declared set of variable families."""

    def __init__(self, name: str, families: Iterable[Family]):
        self.name = name
        self.families = tuple(families)
        self._by_rank = {f.rank: f for f in self.families}
        if len(self._by_rank) != len(self.families):
            raise AlphabetError("duplicate family rank")
        self._patterns = [(f, f.pattern()) for f in self.families]
        self._keys: dict[str, Key] = {}
        self._specs: dict[Key, VarSpec] = {}
        self._gradings: dict[str, Grading] = {}

    def __repr__(self):
        return f"Alphabet({self.name!r})"

    def key(self, name: str) -> Key:
        try:
            return self._keys[name]
        except KeyError:
            pass
        for fam, pat in self._patterns:
            m = pat.match(name)
            if m:
                idx = [int(g) for g in m.groups()]
                if fam.descending:
                    idx[-1] = -idx[-1]
                key = (fam.rank, *idx)
                self._keys[name] = key
                return key
        raise AlphabetError(f"unknown variable {name!r} in alphabet {self.name}")

    def family(self, key: Key) -> Family:
        try:
            return self._by_rank[key[0]]
        except KeyError:
            raise AlphabetError(f"key {key!r} not in alphabet {self.name}") from None

    def index(self, key: Key) -> int:
        """Last (unsigned) index of a variable."""
        fam = self.family(key)
        if fam.arity == 0:
            return 0
        return -key[-1] if fam.descending else key[-1]

    def spec(self, key: Key) -> VarSpec:
        try:
            return self._specs[key]
        except KeyError:
            pass
        fam = self.family(key)
        idx = list(key[1:])
        if fam.descending:
            idx[-1] = -idx[-1]
        if fam.arity == 0:
            name = fam.prefix
        elif fam.arity == 1:
            name = f"{fam.prefix}{idx[0]}"
        else:
            name = f"{fam.prefix}{idx[0]}_{idx[1]}"
        internal = 0 if fam.internal_offset is None else idx[-1] + fam.internal_offset
        spec = VarSpec(name, fam.parity, internal, fam.aux)
        self._specs[key] = spec
        return spec

    def name_of(self, key: Key) -> str:
        return self.spec(key).name

    def parity(self, key: Key) -> int:
        return self.family(key).parity

    def grading(self, kind: str) -> "Grading":
        """``"internal"``, ``"aux"``, or a family prefix (degree in that family)."""
        try:
            return self._gradings[kind]
        except KeyError:
            pass
        if kind == "internal":
            g = Grading(kind, lambda k: self.spec(k).degree_internal)
        elif kind == "aux":
            g = Grading(kind, lambda k: self.spec(k).degree_aux)
        else:
            ranks = {f.rank for f in self.families if f.prefix == kind}
            if not ranks:
                raise AlphabetError(f"no family {kind!r} in alphabet {self.name}")
            g = Grading(kind, lambda k: 1 if k[0] in ranks else 0)
        self._gradings[kind] = g
        return g


class Grading:
    """An additive integer weight on monomials, given per variable."""

    def __init__(self, name: str, weight: Callable[[Key], int]):
        self.name = name
        self._weight = weight
        self._cache: dict[Key, int] = {}
        self._mcache: dict[Monomial, int] = {}

    def __repr__(self):
        return f"Grading({self.name!r})"

    def var(self, key: Key) -> int:
        try:
            return self._cache[key]
        except KeyError:
            w = self._cache[key] = self._weight(key)
            return w

    def __call__(self, mono: Monomial) -> int:
        try:
            return self._mcache[mono]
        except KeyError:
            pass
        w = 0
        for k, e in mono[0]:
            w += e * self.var(k)
        for k in mono[1]:
            w += self.var(k)
        self._mcache[mono] = w
        return w


CapSpec = Union[None, Mapping[Union[str, Grading], int]]


def resolve_cap(alphabet: Alphabet, cap: CapSpec) -> tuple[tuple[Grading, int], ...]:
    if not cap:
        return ()
    out = []
    for g, bound in cap.items():
        if isinstance(g, str):
            g = alphabet.grading(g)
        out.append((g, bound))
    return tuple(out)


# ---------------------------------------------------------------------------
# monomial kernel


@lru_cache(maxsize=1 << 20)
def mono_mul(m1: Monomial, m2: Monomial):
    """Product of monomials as ``(sign, monomial)``, or None if it vanishes."""
    e1, o1 = m1
    e2, o2 = m2
    sign = 1
    if not o1:
        odds = o2
    elif not o2:
        odds = o1
    else:
        merged = []
        i = j = 0
        n1, n2 = len(o1), len(o2)
        inv = 0
        while i < n1 and j < n2:
            x, y = o1[i], o2[j]
            if x < y:
                merged.append(x)
                i += 1
            elif y < x:
                # y jumps over the remaining n1 - i odd factors of m1
                merged.append(y)
                inv += n1 - i
                j += 1
            else:
                return None
        merged.extend(o1[i:])
        merged.extend(o2[j:])
        odds = tuple(merged)
        if inv & 1:
            sign = -1
    if not e1:
        evens = e2
    elif not e2:
        evens = e1
    else:
        out = []
        i = j = 0
        n1, n2 = len(e1), len(e2)
        while i < n1 and j < n2:
            (k1, x1), (k2, x2) = e1[i], e2[j]
            if k1 < k2:
                out.append(e1[i])
                i += 1
            elif k2 < k1:
                out.append(e2[j])
                j += 1
            else:
                out.append((k1, x1 + x2))
                i += 1
                j += 1
        out.extend(e1[i:])
        out.extend(e2[j:])
        evens = tuple(out)
    return sign, (evens, odds)


def mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono[0]) + len(mono[1])


def mono_sort_key(mono: Monomial):
    return (mono_degree(mono), mono[0], mono[1])


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------


class SuperPoly:
    """Immutable sparse polynomial over an :class:`Alphabet`.

    ``terms`` maps monomials to nonzero ``int``/``Fraction`` coefficients.
    Treat instances as values; nothing mutates ``terms`` after construction.
    """

    __slots__ = ("alphabet", "terms", "_hash")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Monomial, Coeff] | None = None):
        self.alphabet = alphabet
        self.terms = {} if terms is None else {m: c for m, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, alphabet, terms):
        obj = cls.__new__(cls)
        obj.alphabet = alphabet
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def zero(cls, alphabet):
        return cls._raw(alphabet, {})

    @classmethod
    def const(cls, alphabet, c):
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        return cls._raw(alphabet, {ONE_MONO: c} if c else {})

    @classmethod
    def one(cls, alphabet):
        return cls._raw(alphabet, {ONE_MONO: 1})

    @classmethod
    def var(cls, alphabet, name: str, power: int = 1):
        key = alphabet.key(name)
        return cls.from_key(alphabet, key, power)

    @classmethod
    def from_key(cls, alphabet, key, power: int = 1):
        if power == 0:
            return cls.one(alphabet)
        if alphabet.parity(key) == ODD:
            if power > 1:
                return cls.zero(alphabet)
            return cls._raw(alphabet, {((), (key,)): 1})
        return cls._raw(alphabet, {(((key, power),), ()): 1})

    # basic protocol
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperPoly.const(self.alphabet, other)
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return self.alphabet is other.alphabet and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"SuperPoly({to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    def _coerce(self, other):
        if isinstance(other, SuperPoly):
            if other.alphabet is not self.alphabet:
                raise AlphabetError(
                    f"alphabet mismatch: {self.alphabet.name} vs {other.alphabet.name}")
            return other
        if isinstance(other, (int, Fraction)):
            return SuperPoly.const(self.alphabet, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return SuperPoly._raw(self.alphabet, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, Fraction(1) / other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = SuperPoly.one(self.alphabet)
        base = self
        while n:
            if n & 1:
                result = multiply(result, base)
            n >>= 1
            if n:
                base = multiply(base, base)
        return result

    # queries
    def constant_term(self):
        return self.terms.get(ONE_MONO, 0)

    def keys(self) -> set:
        """All variable keys occurring in the polynomial."""
        out = set()
        for ev, od in self.terms:
            out.update(k for k, _ in ev)
            out.update(od)
        return out

    def variables(self) -> list[str]:
        return [self.alphabet.name_of(k) for k in sorted(self.keys())]

    def parities(self) -> set[int]:
        return {len(m[1]) & 1 for m in self.terms}

    def parity(self) -> int:
        """Parity of a homogeneous polynomial (0 counts as even)."""
        ps = self.parities()
        if len(ps) > 1:
            raise ValueError("polynomial is not parity-homogeneous")
        return ps.pop() if ps else EVEN

    def degree(self, grading: str | Grading = "internal") -> int:
        g = self.alphabet.grading(grading) if isinstance(grading, str) else grading
        return max((g(m) for m in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mono_sort_key(mc[0]))


# ---------------------------------------------------------------------------
# arithmetic


def add(p: SuperPoly, q: SuperPoly, factor: Coeff = 1) -> SuperPoly:
    """``p + factor*q``."""
    if q.alphabet is not p.alphabet:
        raise AlphabetError(f"alphabet mismatch: {p.alphabet.name} vs {q.alphabet.name}")
    out = dict(p.terms)
    for m, c in q.terms.items():
        v = out.get(m, 0) + factor * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return SuperPoly._raw(p.alphabet, out)


def scale(p: SuperPoly, c: Coeff) -> SuperPoly:
    if not isinstance(c, (int, Fraction)):
        raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")
    c = _norm(c)
    if not c:
        return SuperPoly.zero(p.alphabet)
    return SuperPoly._raw(p.alphabet, {m: _norm(v * c) for m, v in p.terms.items()})


def linear_combination(alphabet: Alphabet, pairs: Iterable[tuple[Coeff, SuperPoly]]) -> SuperPoly:
    out: dict = {}
    for f, p in pairs:
        if not isinstance(f, (int, Fraction)):
            raise TypeError(f"coefficients must be int or Fraction, got {type(f).__name__}")
        if p.alphabet is not alphabet:
            raise AlphabetError("alphabet mismatch")
        for m, c in p.terms.items():
            v = out.get(m, 0) + f * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return SuperPoly._raw(alphabet, out)


def multiply(p: SuperPoly, q: SuperPoly, cap: CapSpec = None) -> SuperPoly:
    """Supercommutative product; terms beyond any bound in ``cap`` are dropped.

    ``cap`` maps gradings (or their names: ``"internal"``, ``"aux"``, a family
    prefix) to inclusive upper bounds.
    """
    if p.alphabet is not q.alphabet:
        raise AlphabetError(f"alphabet mismatch: {p.alphabet.name} vs {q.alphabet.name}")
    caps = resolve_cap(p.alphabet, cap)
    out: dict = {}
    get = out.get
    if not caps:
        for m1, c1 in p.terms.items():
            for m2, c2 in q.terms.items():
                r = mono_mul(m1, m2)
                if r is None:
                    continue
                s, m = r
                v = get(m, 0) + (c1 * c2 if s > 0 else -c1 * c2)
                if v:
                    out[m] = v
                else:
                    del out[m]
        return SuperPoly._raw(p.alphabet, out)

    gs = [g for g, _ in caps]
    bounds = [b for _, b in caps]

    def graded(terms):
        rows: dict = {}
        for m, c in terms.items():
            w = tuple(g(m) for g in gs)
            if all(x <= b for x, b in zip(w, bounds)):
                rows.setdefault(w, []).append((m, c))
        return rows

    left, right = graded(p.terms), graded(q.terms)
    # compare weight vectors once per pair of buckets, not per pair of terms
    for w1, lterms in left.items():
        slack = [b - x for x, b in zip(w1, bounds)]
        fits = [rt for w2, rt in right.items() if all(x <= s for x, s in zip(w2, slack))]
        for m1, c1 in lterms:
            for rterms in fits:
                for m2, c2 in rterms:
                    r = mono_mul(m1, m2)
                    if r is None:
                        continue
                    s, m = r
                    v = get(m, 0) + (c1 * c2 if s > 0 else -c1 * c2)
                    if v:
                        out[m] = v
                    else:
                        del out[m]
    return SuperPoly._raw(p.alphabet, out)


def product(factors: Iterable[SuperPoly], alphabet: Alphabet, cap: CapSpec = None) -> SuperPoly:
    out = SuperPoly.one(alphabet)
    for f in factors:
        out = multiply(out, f, cap)
    return out


def truncate(p: SuperPoly, cap: CapSpec) -> SuperPoly:
    caps = resolve_cap(p.alphabet, cap)
    if not caps:
        return p
    return SuperPoly._raw(p.alphabet, {
        m: c for m, c in p.terms.items() if all(g(m) <= b for g, b in caps)})


def homogeneous_component(p: SuperPoly, internal: int | None = None,
                          aux: int | None = None) -> SuperPoly:
    """Terms of the given (internal, aux) bidegree; None leaves a grading free."""
    gi = p.alphabet.grading("internal")
    ga = p.alphabet.grading("aux")
    return SuperPoly._raw(p.alphabet, {
        m: c for m, c in p.terms.items()
        if (internal is None or gi(m) == internal) and (aux is None or ga(m) == aux)})


def filter_terms(p: SuperPoly, pred: Callable[[Monomial], bool]) -> SuperPoly:
    return SuperPoly._raw(p.alphabet, {m: c for m, c in p.terms.items() if pred(m)})


def power_series_exp(x: SuperPoly, cap: CapSpec) -> SuperPoly:
    """``exp(x)`` for an even ``x`` whose terms all have positive weight in some capped grading."""
    total = SuperPoly.one(x.alphabet)
    term = SuperPoly.one(x.alphabet)
    k = 0
    while True:
        k += 1
        term = scale(multiply(term, x, cap), Fraction(1, k))
        if not term:
            return total
        total = total + term


# ---------------------------------------------------------------------------
# derivations


def apply_derivation(p: SuperPoly, image: Callable[[Key], SuperPoly | None],
                     parity: int) -> SuperPoly:
    """Extend a map on variables to the derivation of the given parity.

    ``image(key)`` returns the value on a variable (None or zero for 0).
    Moving an odd derivation past each odd factor costs a sign.
    """
    alph = p.alphabet
    out: dict = {}
    get = out.get
    cache: dict = {}

    def img(k):
        try:
            return cache[k]
        except KeyError:
            v = image(k)
            v = v.terms if v else None
            cache[k] = v
            return v

    def acc(prefix, vterms, suffix, coeff):
        for vm, vc in vterms.items():
            r = mono_mul(prefix, vm)
            if r is None:
                continue
            s1, m = r
            r = mono_mul(m, suffix)
            if r is None:
                continue
            s2, m = r
            v = get(m, 0) + s1 * s2 * coeff * vc
            if v:
                out[m] = v
            else:
                del out[m]

    for (evens, odds), c in p.terms.items():
        for i, (k, e) in enumerate(evens):
            vt = img(k)
            if vt is None:
                continue
            if e == 1:
                rest = evens[:i] + evens[i + 1:]
            else:
                rest = evens[:i] + ((k, e - 1),) + evens[i + 1:]
            acc(ONE_MONO, vt, (rest, odds), c * e)
        for j, k in enumerate(odds):
            vt = img(k)
            if vt is None:
                continue
            sign = -1 if (parity and j & 1) else 1
            acc((evens, odds[:j]), vt, ((), odds[j + 1:]), sign * c)
    return SuperPoly._raw(alph, out)


def derive_even(p: SuperPoly, var: str | Key) -> SuperPoly:
    key = p.alphabet.key(var) if isinstance(var, str) else var
    if p.alphabet.parity(key) != EVEN:
        raise AlphabetError(f"{p.alphabet.name_of(key)} is odd; use derive_odd_left")
    one = SuperPoly.one(p.alphabet)
    return apply_derivation(p, lambda k: one if k == key else None, EVEN)


def derive_odd_left(p: SuperPoly, var: str | Key) -> SuperPoly:
    key = p.alphabet.key(var) if isinstance(var, str) else var
    if p.alphabet.parity(key) != ODD:
        raise AlphabetError(f"{p.alphabet.name_of(key)} is even; use derive_even")
    one = SuperPoly.one(p.alphabet)
    return apply_derivation(p, lambda k: one if k == key else None, ODD)


# ---------------------------------------------------------------------------
# substitution and coefficient extraction


def substitute(p: SuperPoly, images: Callable[[Key], SuperPoly | None],
               target: Alphabet | None = None, cap: CapSpec = None) -> SuperPoly:
    """Algebra map sending each variable to ``images(key)``.

    A None image keeps the variable (by name, in ``target``).  Images must
    respect parity for the result to be a homomorphism.
    """
    target = target or p.alphabet
    cache: dict = {}

    def value(k, e):
        try:
            return cache[(k, e)]
        except KeyError:
            pass
        v = images(k)
        if v is None:
            v = SuperPoly.var(target, p.alphabet.name_of(k)) if target is not p.alphabet \
                else SuperPoly.from_key(target, k)
        elif v.alphabet is not target:
            raise AlphabetError("substitution image lives in the wrong alphabet")
        res = v if e == 1 else v ** e
        cache[(k, e)] = res
        return res

    total: dict = {}
    for (evens, odds), c in p.terms.items():
        term = SuperPoly.const(target, c)
        for k, e in evens:
            term = multiply(term, value(k, e), cap)
            if not term:
                break
        else:
            for k in odds:
                term = multiply(term, value(k, 1), cap)
                if not term:
                    break
        for m, v in term.terms.items():
            s = total.get(m, 0) + v
            if s:
                total[m] = s
            else:
                total.pop(m, None)
    return SuperPoly._raw(target, total)


def _aux_exponents(alphabet: Alphabet, aux_monomial) -> dict:
    if isinstance(aux_monomial, SuperPoly):
        if len(aux_monomial.terms) != 1:
            raise ValueError("expected a single monomial")
        (mono, _), = aux_monomial.terms.items()
        if mono[1]:
            raise ValueError("auxiliary monomial must be even")
        return dict(mono[0])
    return {alphabet.key(n) if isinstance(n, str) else n: e
            for n, e in dict(aux_monomial).items() if e}


def coefficient_of(p: SuperPoly, aux_monomial, over: Iterable[str] | None = None) -> SuperPoly:
    """Coefficient of an auxiliary monomial.

    ``aux_monomial`` is a single-term SuperPoly or a ``{name: exponent}`` map.
    The match is on the variables of ``over`` (family prefixes); by default
    those are the variables named in ``aux_monomial``.  Matched variables are
    removed from the result, others are kept.
    """
    alph = p.alphabet
    want = _aux_exponents(alph, aux_monomial)
    if over is None:
        named = {alph.key(n) if isinstance(n, str) else n for n in dict(aux_monomial)} \
            if not isinstance(aux_monomial, SuperPoly) else set(want)
        scope = lambda k: k in named  # noqa: E731
    else:
        ranks = {f.rank for f in alph.families if f.prefix in set(over)}
        scope = lambda k: k[0] in ranks or k in want  # noqa: E731
    for k in want:
        if alph.parity(k) != EVEN:
            raise ValueError("auxiliary variables must be even")
    out: dict = {}
    for (evens, odds), c in p.terms.items():
        got = {}
        rest = []
        for k, e in evens:
            if scope(k):
                got[k] = e
            else:
                rest.append((k, e))
        if got == want:
            out[(tuple(rest), odds)] = c
    return SuperPoly._raw(alph, out)


def split_by(p: SuperPoly, prefixes: Iterable[str]) -> dict:
    """Group terms by their exponents in the given families.

    Returns ``{aux_evens: SuperPoly}`` where ``aux_evens`` is the sorted tuple
    of ``(key, exponent)`` pairs of the selected variables.
    """
    alph = p.alphabet
    ranks = {f.rank for f in alph.families if f.prefix in set(prefixes)}
    groups: dict = {}
    for (evens, odds), c in p.terms.items():
        sel = tuple(ke for ke in evens if ke[0][0] in ranks)
        rest = tuple(ke for ke in evens if ke[0][0] not in ranks)
        groups.setdefault(sel, {})[(rest, odds)] = c
    return {k: SuperPoly._raw(alph, v) for k, v in groups.items()}


# ---------------------------------------------------------------------------
# exact division


def exact_divide(p: SuperPoly, d: SuperPoly) -> SuperPoly:
    """Return ``q`` with ``q*d == p``; ``d`` must involve only even variables.

    Long division with the lexicographic order on the variables of ``d``;
    everything else rides along in the coefficients.  A nonzero remainder
    raises :class:`DivisionError`.
    """
    if p.alphabet is not d.alphabet:
        raise AlphabetError("alphabet mismatch")
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    alph = p.alphabet
    dvars = sorted(d.keys())
    for k in dvars:
        if alph.parity(k) != EVEN:
            raise ValueError("divisor must involve only even variables")
    pos = {k: i for i, k in enumerate(dvars)}
    nv = len(dvars)

    def split(mono):
        exps = [0] * nv
        rest = []
        for k, e in mono[0]:
            i = pos.get(k)
            if i is None:
                rest.append((k, e))
            else:
                exps[i] = e
        return tuple(exps), (tuple(rest), mono[1])

    dterms = []
    for m, c in d.terms.items():
        ex, _ = split(m)
        dterms.append((ex, c))
    lead_ex, lead_c = max(dterms)
    dtail = [(ex, c) for ex, c in dterms if ex != lead_ex]

    rem: dict = {}
    for m, c in p.terms.items():
        ex, rest = split(m)
        rem.setdefault(ex, {})[rest] = c
    heap = [tuple(-x for x in ex) for ex in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while heap:
        neg = heapq.heappop(heap)
        ex = tuple(-x for x in neg)
        block = rem.pop(ex, None)
        if not block:
            continue
        qex = tuple(a - b for a, b in zip(ex, lead_ex))
        if any(x < 0 for x in qex):
            raise DivisionError(
                f"non-exact division: remainder term with exponents {dict(zip(map(alph.name_of, dvars), ex))}")
        if lead_c == 1:
            qblock = block
        elif lead_c == -1:
            qblock = {r: -c for r, c in block.items()}
        else:
            qblock = {r: _norm(Fraction(c) / lead_c) for r, c in block.items()}
        quot[qex] = qblock
        for dex, dc in dtail:
            tex = tuple(a + b for a, b in zip(qex, dex))
            tgt = rem.get(tex)
            if tgt is None:
                tgt = rem[tex] = {}
                heapq.heappush(heap, tuple(-x for x in tex))
            for r, qc in qblock.items():
                v = tgt.get(r, 0) - qc * dc
                if v:
                    tgt[r] = v
                else:
                    tgt.pop(r, None)
    out: dict = {}
    for qex, block in quot.items():
        vm = (tuple((dvars[i], e) for i, e in enumerate(qex) if e), ())
        for rest, c in block.items():
            _, m = mono_mul(vm, rest)
            out[m] = out.get(m, 0) + c
    return SuperPoly._raw(alph, {m: c for m, c in out.items() if c})


# ---------------------------------------------------------------------------
# serialization


def _coeff_text(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _mono_factors(alphabet: Alphabet, mono: Monomial) -> list[tuple[str, int]]:
    return [(alphabet.name_of(k), e) for k, e in mono[0]] + \
        [(alphabet.name_of(k), 1) for k in mono[1]]


def to_text(p: SuperPoly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for m, c in p.sorted_terms():
        bits = [_coeff_text(c)]
        for name, e in _mono_factors(p.alphabet, m):
            bits.append(name if e == 1 else f"{name}^{e}")
        parts.append("*".join(bits))
    return " + ".join(parts)


def parse(alphabet: Alphabet, text: str) -> SuperPoly:
    """Read a sum of products such as ``2*a0*c0 - phi0*psi1 + 1/2*a1^2``.

    Accepts the output of :func:`to_text`.  Factors are numbers (integers or
    fractions) or variables with an optional ``^exponent``, multiplied left to
    right, so the order of odd factors fixes the sign.
    """
    body = text.replace(" ", "")
    # fold runs of signs such as "+ -1*x" coming from to_text
    while any(pair in body for pair in ("+-", "-+", "--", "++")):
        body = body.replace("+-", "-").replace("-+", "-").replace("--", "+").replace("++", "+")
    if not body:
        raise ValueError("empty polynomial")
    total = SuperPoly.zero(alphabet)
    for sign, chunk in re.findall(r"([+-]?)([^+-]+)", body):
        term = SuperPoly.const(alphabet, -1 if sign == "-" else 1)
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError(f"malformed term {chunk!r}")
            if factor[0].isdigit():
                term = term * Fraction(factor)
            else:
                name, _, e = factor.partition("^")
                term = term * SuperPoly.var(alphabet, name, int(e) if e else 1)
        total = total + term
    if re.sub(r"([+-]?)([^+-]+)", "", body):
        raise ValueError(f"cannot parse {text!r}")
    return total


def to_json_obj(p: SuperPoly) -> list:
    return [{"coeff": f"{Fraction(c).numerator}/{Fraction(c).denominator}",
             "monomial": [[n, e] for n, e in _mono_factors(p.alphabet, m)]}
            for m, c in p.sorted_terms()]


def from_json_obj(alphabet: Alphabet, obj: list) -> SuperPoly:
    total = SuperPoly.zero(alphabet)
    for t in obj:
        term = SuperPoly.const(alphabet, Fraction(t["coeff"]))
        for name, e in t["monomial"]:
            term = term * SuperPoly.var(alphabet, name, e)
        total = total + term
    return total


def to_json(p: SuperPoly) -> str:
    return json.dumps(to_json_obj(p))


def from_json(alphabet: Alphabet, text: str) -> SuperPoly:
    return from_json_obj(alphabet, json.loads(text))
