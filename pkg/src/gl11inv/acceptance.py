"""Acceptance checks, shared by the ``accept`` subcommand and the test suite.

Each criterion is a function returning a list of ``Check`` records; a suite
is a named group of criteria.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import gl11, invariants, qseries, schur, ssvec, susy
from .gl11 import ALL_PAIRS, GL11, LoopOperator, act, gen, is_invariant, operator_bracket, translate
from .superpoly import (
    EVEN, ODD, SuperPoly, coefficient_of, derive_odd_left, from_json,
    linear_combination, parse, split_by, to_json, to_text,
)


@dataclass
class Check:
    criterion: int
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" -- {self.detail}" if self.detail else ""
        return f"{status} [{self.criterion}] {self.name} ({self.seconds:.2f}s){extra}"


def _timed(criterion, name, fn) -> Check:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported with its message
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(criterion, name, bool(ok), detail, time.perf_counter() - start)


# ---------------------------------------------------------------------------
# 1-2: Segal-Sugawara symbols


def _invariance():
    for family in ssvec.FAMILIES:
        for k in range(1, 6):
            p = ssvec.symbol(family, k)
            for r in range(4):
                res = is_invariant(p)
                if not res:
                    return False, f"T^{r} {family}_{k}: {res.operator} gives {to_text(res.witness)}"
                p = translate(p)
            ser = ssvec.series(family, k, 6)
            for sel, coeff in split_by(ser, ["z"]).items():
                res = is_invariant(coeff)
                if not res:
                    return False, f"series({family},{k}) at {sel}: {res.operator}"
    return True, "3 families, k<=5, r<=3, series to z^6"


def _hser():
    for k in range(1, 6):
        ser = ssvec.series("h", k, 6)
        p = ssvec.symbol("h", k)
        for r in range(7):
            want = p * Fraction(1, factorial(r))
            got = coefficient_of(ser, {"z1": r})
            if got != want:
                return False, f"k={k} r={r}"
            p = translate(p)
    return True, "k<=5, r<=6"


def criterion_1():
    return [_timed(1, "invariance of symbols, translates and series", _invariance)]


def criterion_2():
    return [_timed(2, "series(h,k) coefficients are T^r/r! of the symbol", _hser)]


# ---------------------------------------------------------------------------
# 3-4: Y basis and A series


def _ycross():
    coeffs = invariants.expand_y_product(2, 8)
    count = 0
    for size in range(7):
        for lam in schur.partitions(size, max_len=2):
            if coeffs.get(lam) != invariants.Y(2, lam):
                return False, f"lambda={tuple(lam)}"
            count += 1
    extra = [tuple(l) for l in coeffs if l.weight > 6]
    if extra:
        return False, f"unexpected partitions {extra}"
    return True, f"{count} partitions"


def _aztone():
    a1 = invariants.A_series(1, 6, 4)
    for k in range(1, 6):
        if coefficient_of(a1, {"t0": k - 1}) != invariants.aztone(k, "z1", 6):
            return False, f"k={k}"
    return True, "k<=5 to z^6"


def _factorization():
    res = invariants.factorization_check(2, 6, 3)
    return res.holds, "" if res else f"first mismatch at {res.monomial}"


def _a2_invariance():
    a2 = invariants.A_series(2, 8, 8, internal_cap=10)
    parts = split_by(a2, ["z", "t"])
    for sel, coeff in sorted(parts.items()):
        res = is_invariant(coeff)
        if not res:
            return False, f"coefficient {sel}: {res.operator}"
    return True, f"{len(parts)} coefficients"


def criterion_3():
    return [_timed(3, "expand_y_product(2, 8) equals Y(2, lambda), |lambda|<=6", _ycross)]


def criterion_4():
    return [_timed(4, "A(z1; t0) coefficients match a^(k-1)c + (k-1)a^(k-2)y", _aztone),
            _timed(4, "factorization for n=2 to z<=6, t<=3", _factorization),
            _timed(4, "A_series(2) coefficients invariant to internal degree 10", _a2_invariance)]


# ---------------------------------------------------------------------------
# 5-7: q-series


def _fourway():
    order = 10
    pp = qseries.pp_series(1, 1, order)
    series = [pp, qseries.planep_series(order), qseries.fermionic_series(order),
              qseries.hp_from_basis(order)]
    if any(s != pp for s in series):
        return False, " / ".join(str(list(s)) for s in series)
    head = list(pp)[:8]
    if head != [1, 1, 3, 6, 12, 21, 38, 63]:
        return False, f"head {head}"
    return True, f"{list(pp)}"


def _ids():
    for s in range(5):
        if not qseries.ids_check(s, 30):
            return False, f"main identity s={s}"
        if not qseries.auxiliary_check(s, 30):
            return False, f"auxiliary identity s={s}"
    return True, "s<=4 to q^30"


def _chi():
    for m in range(4):
        for n in range(4):
            chi = qseries.chi_mn(m, n, 12)
            for N in range(13):
                if chi[N] != qseries.count_hook_diagrams(m, n, N):
                    return False, f"chi({m},{n}) at q^{N}"
            if m and n and not qseries.chi_recurrence_holds(m, n, 12):
                return False, f"recurrence ({m},{n})"
    return True, "m,n<=3 to q^12"


def _fmn():
    for m, n in ((1, 1), (1, 2), (2, 2)):
        if qseries.f_mn(m, n, 8) != qseries.pp_series(m, n, 8):
            return False, f"({m},{n})"
    return True, "(1,1), (1,2), (2,2) to q^8"


def criterion_5():
    return [_timed(5, "four-way Hilbert-Poincare equality to q^10", _fourway)]


def criterion_6():
    return [_timed(6, "main and auxiliary identities for s<=4 to q^30", _ids)]


def criterion_7():
    return [_timed(7, "chi_mn against hook diagrams and the recurrence", _chi),
            _timed(7, "f_mn against enumerated plane partitions", _fmn)]


# ---------------------------------------------------------------------------
# 8-9: Chevalley projection and cancellation


def _seon():
    for k in range(1, 6):
        want = susy.u(1, 0) ** (k - 1) * (susy.u(1, 0) + susy.v(1, 0))
        if susy.chevalley(ssvec.symbol("h", k)) != want:
            return False, f"k={k}"
    return True, "k<=5"


def _injectivity():
    report = susy.injectivity_spotcheck(6)
    hp = list(qseries.hp_from_basis(6))
    if not report.full_rank:
        return False, f"rank deficit {report.per_degree}"
    if report.ranks() != hp:
        return False, f"ranks {report.ranks()} vs {hp}"
    return True, f"ranks {report.ranks()}"


def _cancellation():
    count = 0
    for N in range(9):
        for p in susy.aff11_products(N):
            count += 1
            if not susy.cancellation_check(p):
                return False, f"degree {N}: {to_text(p)}"
    return True, f"{count} products"


def _d_on_generators():
    zc = 6
    for k in range(5):
        lhs = [susy.D_apply(susy.aff11_generator(k, r)) for r in range(zc + 1)]
        if k == 0:
            rhs = [SuperPoly.zero(GL11)] * (zc + 1)
        else:
            a = gl11.generator_series("a", "z1", zc)
            power = SuperPoly.one(GL11)
            for _ in range(k - 1):
                power = power * a
            rhs = [coefficient_of(power, {"z1": r}) * k for r in range(zc + 1)]
        for r in range(zc + 1):
            if lhs[r] != susy.LaurentC0Poly.of(rhs[r]):
                return False, f"k={k} r={r}"
    return True, "k<=4 to z^6"


def criterion_8():
    return [_timed(8, "Chevalley image of h-symbols", _seon),
            _timed(8, "Chevalley images of the invariant basis are independent", _injectivity)]


def criterion_9():
    return [_timed(9, "cancellation on generator products of degree <= 8", _cancellation),
            _timed(9, "D a(z)^k c(z) = k a(z)^(k-1)", _d_on_generators)]


# ---------------------------------------------------------------------------
# 10: randomized laws


_EVEN_NAMES = [f"{k}{i}" for k in ("a", "c") for i in range(4)]
_ODD_NAMES = [f"{k}{i}" for k in ("phi", "psi") for i in range(4)]


def random_monomial(rng: random.Random, parity: int | None = None) -> SuperPoly:
    m = SuperPoly.one(GL11)
    for _ in range(rng.randint(0, 2)):
        m = m * SuperPoly.var(GL11, rng.choice(_EVEN_NAMES))
    odd_count = rng.randint(0, 3)
    if parity is not None and odd_count % 2 != parity:
        odd_count += 1
    for name in rng.sample(_ODD_NAMES, odd_count):
        m = m * SuperPoly.var(GL11, name)
    return m


def random_poly(rng: random.Random, parity: int | None = None, terms: int = 3) -> SuperPoly:
    """A random element, homogeneous in parity if ``parity`` is given."""
    par = rng.randint(0, 1) if parity is None else parity
    pairs = []
    for _ in range(rng.randint(1, terms)):
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        pairs.append((c, random_monomial(rng, par)))
    return linear_combination(GL11, pairs)


def _random_op(rng):
    i, j = rng.choice(ALL_PAIRS)
    return LoopOperator(i, j, rng.randint(0, 3))


def _law_koszul(rng):
    p, q = random_poly(rng, rng.randint(0, 1)), random_poly(rng, rng.randint(0, 1))
    if not p or not q:
        return True
    sign = -1 if p.parity() & q.parity() else 1
    return p * q == q * p * sign


def _law_associative(rng):
    p, q, r = (random_poly(rng) for _ in range(3))
    return (p * q) * r == p * (q * r)


def _law_odd_square(rng):
    p = random_monomial(rng, ODD)
    return not (p * p)


def _law_action_derivation(rng):
    op = _random_op(rng)
    p, q = random_poly(rng, rng.randint(0, 1)), random_poly(rng, rng.randint(0, 1))
    sign = -1 if (op.parity and p and p.parity()) else 1
    return act(op, p * q) == act(op, p) * q + p * act(op, q) * sign


def _law_translation_derivation(rng):
    p, q = random_poly(rng), random_poly(rng)
    return translate(p * q) == translate(p) * q + p * translate(q)


def _law_odd_derivative(rng):
    name = rng.choice(_ODD_NAMES)
    p, q = random_poly(rng, rng.randint(0, 1)), random_poly(rng, rng.randint(0, 1))
    sign = -1 if (p and p.parity()) else 1
    return derive_odd_left(p * q, name) == \
        derive_odd_left(p, name) * q + p * derive_odd_left(q, name) * sign


def _law_bracket(rng):
    x, y = _random_op(rng), _random_op(rng)
    p = random_poly(rng)
    sign = -1 if x.parity & y.parity else 1
    lhs = act(x, act(y, p)) - act(y, act(x, p)) * sign
    rhs = linear_combination(GL11, [(c, act(op, p)) for c, op in operator_bracket(x, y)])
    return lhs == rhs


def _law_lr(rng):
    mu = rng.choice(list(schur.partitions(rng.randint(0, 3))))
    nu = rng.choice(list(schur.partitions(rng.randint(0, 3))))
    for lam in schur.partitions(mu.weight + nu.weight):
        if schur.lr_coefficient(mu, nu, lam) != schur.lr_tableaux_count(mu, nu, lam):
            return False
    return True


def _law_chevalley_hom(rng):
    p, q = random_poly(rng, EVEN), random_poly(rng, EVEN)
    return susy.chevalley(p * q) == susy.chevalley(p) * susy.chevalley(q)


def _law_chevalley_translate(rng):
    p = random_poly(rng)
    return susy.chevalley(translate(p)) == susy.translate_susy(susy.chevalley(p))


def _ac_poly(rng):
    pairs = []
    for _ in range(rng.randint(1, 3)):
        m = SuperPoly.one(GL11)
        for _ in range(rng.randint(0, 3)):
            m = m * SuperPoly.var(GL11, rng.choice(_EVEN_NAMES))
        pairs.append((rng.randint(-3, 3), m))
    return linear_combination(GL11, pairs)


def _law_d_derivation(rng):
    p, q = _ac_poly(rng), _ac_poly(rng)
    return susy.D_apply(p * q) == susy.D_apply(p) * q + susy.D_apply(q) * p


def _law_roundtrip(rng):
    p = random_poly(rng)
    return parse(GL11, to_text(p)) == p and from_json(GL11, to_json(p)) == p


LAWS = {
    "Koszul sign rule": _law_koszul,
    "associativity": _law_associative,
    "odd monomials square to zero": _law_odd_square,
    "E_ij[r] acts as a graded derivation": _law_action_derivation,
    "T is an even derivation": _law_translation_derivation,
    "left odd derivative obeys the graded Leibniz rule": _law_odd_derivative,
    "action respects the loop bracket": _law_bracket,
    "LR coefficients match tableau counts": _law_lr,
    "Chevalley projection is multiplicative": _law_chevalley_hom,
    "Chevalley projection intertwines T": _law_chevalley_translate,
    "D is a derivation": _law_d_derivation,
    "text and JSON round trips": _law_roundtrip,
}


def criterion_10(seed: int = 0, cases: int = 200):
    checks = []
    for name, law in LAWS.items():
        def run(law=law):
            rng = random.Random(f"{seed}:{name}")
            for case in range(cases):
                if not law(rng):
                    return False, f"case {case}"
            return True, f"{cases} cases"
        checks.append(_timed(10, name, run))
    return checks


# ---------------------------------------------------------------------------
# suites


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}

SUITES = {
    "invariance": (1,),
    "hser": (2,),
    "ycross": (3,),
    "aseries": (4,),
    "qseries": (5, 6, 7),
    "chevalley": (8,),
    "cancellation": (9,),
    "properties": (10,),
}
SUITES["all"] = tuple(CRITERIA)


def run_criterion(number: int, seed: int = 0) -> list[Check]:
    fn = CRITERIA[number]
    return fn(seed=seed) if number == 10 else fn()


def run_suite(name: str, seed: int = 0, emit=None) -> list[Check]:
    if name not in SUITES:
        raise KeyError(name)
    out = []
    for number in SUITES[name]:
        for check in run_criterion(number, seed):
            out.append(check)
            if emit:
                emit(check)
    return out
