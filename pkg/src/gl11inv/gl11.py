"""The gl(1|1)[t]-module S(g_-): generators, current action, translation.

Generators of the symmetric algebra, for i >= 0::

    a_i = E11[-i-1]      c_i = E11[-i-1] + E22[-i-1]
    phi_i = E21[-i-1]    psi_i = E12[-i-1]

Index 1 is even and index 2 odd, so E12 and E21 are odd.  The nonnegative
loop modes act through the bracket, with results in g[t] set to zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .superpoly import (
    EVEN, ODD, Alphabet, Family, SuperPoly, apply_derivation, linear_combination,
)

GL11 = Alphabet("gl11", [
    Family("a", 0, EVEN, internal_offset=1),
    Family("c", 1, EVEN, internal_offset=1),
    Family("z", 2, EVEN, aux=1),
    Family("t", 3, EVEN, aux=1),
    Family("u", 4, EVEN, arity=0, aux=1),
    Family("q", 5, EVEN, arity=0, aux=1),
    Family("phi", 10, ODD, internal_offset=1),
    Family("psi", 11, ODD, internal_offset=1, descending=True),
])

KINDS = ("a", "c", "phi", "psi")
_RANK = {"a": 0, "c": 1, "phi": 10, "psi": 11}
_KIND_OF_RANK = {v: k for k, v in _RANK.items()}


def gen(kind: str, i: int) -> SuperPoly:
    """The generator a_i, c_i, phi_i or psi_i."""
    return SuperPoly.var(GL11, f"{kind}{i}")


def y(i: int) -> SuperPoly:
    """y_i = sum_{p+q=i} phi_p psi_q."""
    return _y(i)


@lru_cache(maxsize=None)
def _y(i):
    return linear_combination(GL11, [(1, gen("phi", p) * gen("psi", i - p)) for p in range(i + 1)])


def mode_index(key) -> int | None:
    """Mode index i of a generator variable, None for auxiliary variables."""
    if key[0] in _KIND_OF_RANK:
        return GL11.index(key)
    return None


def max_mode(p: SuperPoly) -> int:
    idx = [mode_index(k) for k in p.keys()]
    idx = [i for i in idx if i is not None]
    return max(idx, default=-1)


# ---------------------------------------------------------------------------
# loop operators


def _bar(i: int) -> int:
    return 0 if i == 1 else 1


@dataclass(frozen=True, order=True)
class LoopOperator:
    """E_ij[r] with r >= 0."""

    i: int
    j: int
    r: int = 0

    def __post_init__(self):
        if self.i not in (1, 2) or self.j not in (1, 2) or self.r < 0:
            raise ValueError(f"bad loop operator E{self.i}{self.j}[{self.r}]")

    @property
    def parity(self) -> int:
        return _bar(self.i) ^ _bar(self.j)

    def __str__(self):
        return f"E{self.i}{self.j}[{self.r}]"


ALL_PAIRS = ((1, 1), (1, 2), (2, 1), (2, 2))


def e_element(i: int, j: int, mode: int) -> SuperPoly:
    """E_ij[mode] as an element of S(g_-); zero for mode >= 0."""
    if mode >= 0:
        return SuperPoly.zero(GL11)
    s = -mode - 1
    if (i, j) == (1, 1):
        return gen("a", s)
    if (i, j) == (2, 2):
        return gen("c", s) - gen("a", s)
    if (i, j) == (2, 1):
        return gen("phi", s)
    return gen("psi", s)


def loop_bracket(i, j, r, k, l, mode):
    """Terms of [E_ij[r], E_kl[mode]] as ``(coeff, (p, q), mode')`` triples."""
    out = []
    m = r + mode
    if k == j:
        out.append((1, (i, l), m))
    if i == l:
        sign = -1 if ((_bar(i) ^ _bar(j)) & (_bar(k) ^ _bar(l))) else 1
        out.append((-sign, (k, j), m))
    return out


def _bracket_value(i, j, r, k, l, mode) -> SuperPoly:
    return linear_combination(
        GL11, [(c, e_element(p, q, m)) for c, (p, q), m in loop_bracket(i, j, r, k, l, mode)])


@lru_cache(maxsize=None)
def _op_image(op: LoopOperator, key):
    kind = _KIND_OF_RANK.get(key[0])
    if kind is None:
        return None
    s = GL11.index(key)
    mode = -s - 1
    i, j, r = op.i, op.j, op.r
    if kind == "a":
        v = _bracket_value(i, j, r, 1, 1, mode)
    elif kind == "c":
        v = _bracket_value(i, j, r, 1, 1, mode) + _bracket_value(i, j, r, 2, 2, mode)
    elif kind == "phi":
        v = _bracket_value(i, j, r, 2, 1, mode)
    else:
        v = _bracket_value(i, j, r, 1, 2, mode)
    return v or None


def act(op: LoopOperator, p: SuperPoly) -> SuperPoly:
    """Action of E_ij[r] on S(g_-) as a derivation of the operator's parity."""
    return apply_derivation(p, lambda k: _op_image(op, k), op.parity)


def operator_bracket(x: LoopOperator, y_: LoopOperator) -> list[tuple[int, LoopOperator]]:
    """[X, Y] for nonnegative modes; no central term survives here."""
    out = []
    for c, (p, q), m in loop_bracket(x.i, x.j, x.r, y_.i, y_.j, y_.r):
        out.append((c, LoopOperator(p, q, m)))
    return out


# ---------------------------------------------------------------------------
# translation and series


@lru_cache(maxsize=None)
def _t_image(key):
    kind = _KIND_OF_RANK.get(key[0])
    if kind is None:
        return None
    i = GL11.index(key)
    return (i + 1) * gen(kind, i + 1)


def translate(p: SuperPoly) -> SuperPoly:
    """T = -d/dt: the even derivation x_i -> (i+1) x_{i+1}."""
    return apply_derivation(p, _t_image, EVEN)


def translate_power(p: SuperPoly, r: int) -> SuperPoly:
    for _ in range(r):
        p = translate(p)
    return p


SERIES_KINDS = ("a", "c", "phi", "psi", "y")


def generator_series(kind: str, z: str, cap: int) -> SuperPoly:
    """a(z), c(z), phi(z), psi(z) or y(z) = phi(z)psi(z), up to z^cap."""
    if kind not in SERIES_KINDS:
        raise ValueError(f"unknown series kind {kind!r}")
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    zv = SuperPoly.var(GL11, z)
    terms = []
    for i in range(cap + 1):
        coeff = y(i) if kind == "y" else gen(kind, i)
        terms.append((1, coeff * zv ** i))
    return linear_combination(GL11, terms)


# ---------------------------------------------------------------------------
# invariance


@dataclass(frozen=True)
class InvarianceResult:
    invariant: bool
    operator: LoopOperator | None = None
    witness: SuperPoly | None = None

    def __bool__(self):
        return self.invariant


def is_invariant(p: SuperPoly) -> InvarianceResult:
    """Check E_ij[r] p = 0 for all i, j and 0 <= r <= max mode index in p.

    Larger r lower every mode index past zero, so they act trivially.
    """
    top = max(max_mode(p), 0)
    for r in range(top + 1):
        for i, j in ALL_PAIRS:
            op = LoopOperator(i, j, r)
            v = act(op, p)
            if v:
                return InvarianceResult(False, op, v)
    return InvarianceResult(True)


def weight(p: SuperPoly) -> int:
    """Eigenvalue of E22[0]: number of phi factors minus number of psi factors."""
    seen = set()
    for _, odds in p.terms:
        w = 0
        for k in odds:
            w += 1 if k[0] == _RANK["phi"] else -1
        seen.add(w)
    if len(seen) > 1:
        raise ValueError(f"not homogeneous under E22[0]: weights {sorted(seen)}")
    return seen.pop() if seen else 0


def factorial_scale(p: SuperPoly, r: int) -> SuperPoly:
    f = 1
    for i in range(2, r + 1):
        f *= i
    return p * Fraction(1, f)
