"""Command-line driver: ``gl11inv <subcommand> [options]``.

Exit status is 0 on success, 1 when a requested check fails and 2 on a
usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from . import acceptance, invariants, qseries, ssvec, susy
from .gl11 import GL11, is_invariant
from .superpoly import SuperPoly, parse, split_by, to_json_obj, to_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    """Options shared by the subcommands (defaults apply when a flag is absent)."""

    deg: int = 4
    k: int = 1
    n: int = 1
    m: int = 1
    t_cap: int = 2
    family: str = "h"
    json: bool = False
    seed: int = 0

    def __post_init__(self):
        for name in ("deg", "k", "n", "m", "t_cap"):
            if getattr(self, name) < 0:
                raise ValueError(f"--{name.replace('_', '-')} must be nonnegative")


class UsageError(Exception):
    pass


def _poly_obj(p: SuperPoly) -> dict:
    return {"text": to_text(p), "terms": to_json_obj(p)}


def _emit(cfg: RunConfig, payload: dict, text_lines: list[str]):
    if cfg.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _expr(args) -> SuperPoly | None:
    return parse(GL11, args.expr) if getattr(args, "expr", None) else None


def _aux_label(sel) -> str:
    return "*".join(f"{GL11.name_of(k)}^{e}" for k, e in sel) or "1"


# ---------------------------------------------------------------------------
# subcommands


def cmd_ssvec(cfg: RunConfig, args) -> int:
    if cfg.family not in ssvec.FAMILIES:
        raise UsageError(f"--family must be one of {', '.join(ssvec.FAMILIES)}")
    if cfg.k < 1:
        raise UsageError("--k must be at least 1")
    sym = ssvec.symbol(cfg.family, cfg.k)
    ser = ssvec.series(cfg.family, cfg.k, cfg.deg)
    rows = []
    ok = True
    sym_inv = bool(is_invariant(sym))
    ok &= sym_inv
    parts = split_by(ser, ["z"])
    for r in range(cfg.deg + 1):
        coeff = parts.get(((GL11.key("z1"), r),) if r else (), SuperPoly.zero(GL11))
        inv = bool(is_invariant(coeff))
        ok &= inv
        rows.append({"r": r, "coefficient": _poly_obj(coeff), "invariant": inv})
    payload = {"family": cfg.family, "k": cfg.k, "symbol": _poly_obj(sym),
               "symbol_invariant": sym_inv, "series": rows}
    lines = [f"{cfg.family}_{cfg.k} = {to_text(sym)}  [{'invariant' if sym_inv else 'NOT invariant'}]"]
    lines += [f"  z^{row['r']}: {row['coefficient']['text']}  "
              f"[{'invariant' if row['invariant'] else 'NOT invariant'}]" for row in rows]
    _emit(cfg, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_invariance(cfg: RunConfig, args) -> int:
    p = _expr(args)
    if p is None:
        if cfg.family not in ssvec.FAMILIES or cfg.k < 1:
            raise UsageError("give --expr, or a valid --family and --k >= 1")
        p = ssvec.symbol(cfg.family, cfg.k)
    res = is_invariant(p)
    payload = {"element": _poly_obj(p), "invariant": res.invariant,
               "operator": str(res.operator) if res.operator else None,
               "witness": _poly_obj(res.witness) if res.witness is not None else None}
    line = "invariant" if res else f"not invariant: {res.operator} gives {to_text(res.witness)}"
    _emit(cfg, payload, [f"{to_text(p)}: {line}"])
    return EXIT_OK if res else EXIT_FAIL


def cmd_basis(cfg: RunConfig, args) -> int:
    series = {}
    rows = []
    for n, lam, k in invariants.basis_indices(cfg.deg):
        if n and n not in series:
            room = cfg.deg - n * (n + 1)
            series[n] = invariants.TruncatedA.compute(n, room, n + room, cfg.deg)
        el = invariants.basis_element(n, lam, k, series.get(n))
        rows.append({"n": n, "lambda": list(lam), "k": list(k),
                     "degree": invariants.basis_degree(n, lam, k), "element": _poly_obj(el)})
    _emit(cfg, {"max_degree": cfg.deg, "basis": rows},
          [f"[deg {r['degree']}] n={r['n']} lambda={tuple(r['lambda'])} k={tuple(r['k'])}: "
           f"{r['element']['text']}" for r in rows])
    return EXIT_OK


def cmd_aseries(cfg: RunConfig, args) -> int:
    if cfg.n < 1:
        raise UsageError("--n must be at least 1")
    a = invariants.A_series(cfg.n, cfg.deg, cfg.t_cap)
    parts = sorted(split_by(a, ["z", "t"]).items(),
                   key=lambda item: (sum(e for _, e in item[0]), item[0]))
    rows = [{"monomial": _aux_label(sel), "coefficient": _poly_obj(c)} for sel, c in parts]
    _emit(cfg, {"n": cfg.n, "z_cap": cfg.deg, "t_cap": cfg.t_cap, "coefficients": rows},
          [f"{r['monomial']}: {r['coefficient']['text']}" for r in rows])
    return EXIT_OK


def cmd_hp(cfg: RunConfig, args) -> int:
    d = cfg.deg
    cols = {"brute_force": qseries.pp_series(1, 1, d), "planep": qseries.planep_series(d),
            "fermionic": qseries.fermionic_series(d), "hp_from_basis": qseries.hp_from_basis(d)}
    equal = len({s.coeffs for s in cols.values()}) == 1
    payload = {"order": d, "equal": equal,
               "series": {k: v.to_json() for k, v in cols.items()}}
    lines = ["N  " + "  ".join(cols)]
    for N in range(d + 1):
        lines.append(f"{N}  " + "  ".join(str(s[N]) for s in cols.values()))
    lines.append("all equal" if equal else "MISMATCH")
    _emit(cfg, payload, lines)
    return EXIT_OK if equal else EXIT_FAIL


def cmd_pp(cfg: RunConfig, args) -> int:
    s = qseries.pp_series(cfg.m, cfg.n, cfg.deg)
    _emit(cfg, {"m": cfg.m, "n": cfg.n, "series": s.to_json()},
          [f"plane partitions over the ({cfg.m},{cfg.n})-hook: {list(s)}"])
    return EXIT_OK


def cmd_chi(cfg: RunConfig, args) -> int:
    chi = qseries.chi_mn(cfg.m, cfg.n, cfg.deg)
    counts = [qseries.count_hook_diagrams(cfg.m, cfg.n, N) for N in range(cfg.deg + 1)]
    ok = list(chi) == counts
    _emit(cfg, {"m": cfg.m, "n": cfg.n, "chi": chi.to_json(), "hook_counts": counts, "equal": ok},
          [f"chi: {list(chi)}", f"hook diagrams: {counts}", "equal" if ok else "MISMATCH"])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_fmn(cfg: RunConfig, args) -> int:
    if cfg.m < 1 or cfg.n < 1:
        raise UsageError("--m and --n must be at least 1")
    f = qseries.f_mn(cfg.m, cfg.n, cfg.deg)
    _emit(cfg, {"m": cfg.m, "n": cfg.n, "series": f.to_json()}, [f"f_{cfg.m},{cfg.n}: {list(f)}"])
    return EXIT_OK


def cmd_chevalley(cfg: RunConfig, args) -> int:
    p = _expr(args)
    if p is None:
        if cfg.family not in ssvec.FAMILIES or cfg.k < 1:
            raise UsageError("give --expr, or a valid --family and --k >= 1")
        p = ssvec.symbol(cfg.family, cfg.k)
    img = susy.chevalley(p)
    _emit(cfg, {"element": _poly_obj(p), "image": _poly_obj(img)},
          [f"{to_text(p)} -> {to_text(img)}"])
    return EXIT_OK


def cmd_cancel(cfg: RunConfig, args) -> int:
    p = _expr(args)
    if p is not None:
        d = susy.D_apply(p)
        ok = not d.negative_part()
        _emit(cfg, {"element": _poly_obj(p), "D": d.to_json(), "passes": ok},
              [f"D({to_text(p)}) = {d}", "no negative powers of c0" if ok else "negative powers of c0"])
        return EXIT_OK if ok else EXIT_FAIL
    failures = []
    total = 0
    for N in range(cfg.deg + 1):
        for q in susy.aff11_products(N):
            total += 1
            if not susy.cancellation_check(q):
                failures.append(to_text(q))
    ok = not failures
    _emit(cfg, {"max_degree": cfg.deg, "checked": total, "failures": failures},
          [f"{total} generator products up to degree {cfg.deg}: "
           + ("all pass" if ok else f"{len(failures)} fail")])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_probe(cfg: RunConfig, args) -> int:
    params = {"max_degree": cfg.deg}
    if args.kind != "canc_3_4":
        params.update(m=cfg.m, n=cfg.n)
    try:
        report = susy.conjecture_probe(args.kind, **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    # a probe reports evidence; it never fails the run
    print(json.dumps(report, sort_keys=True, indent=None if cfg.json else 2))
    return EXIT_OK


def cmd_accept(cfg: RunConfig, args) -> int:
    if args.suite not in acceptance.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(acceptance.SUITES)}")
    if cfg.json:
        checks = acceptance.run_suite(args.suite, seed=cfg.seed)
        print(json.dumps({"suite": args.suite, "checks": [asdict(c) for c in checks]},
                         sort_keys=True))
    else:
        checks = acceptance.run_suite(args.suite, seed=cfg.seed, emit=lambda c: print(c.line()))
    return EXIT_OK if all(c.ok for c in checks) else EXIT_FAIL


COMMANDS = {
    "ssvec": (cmd_ssvec, "symbols and series of a Segal-Sugawara family with invariance verdicts"),
    "invariance": (cmd_invariance, "test an element (or a symbol) for g[t]-invariance"),
    "basis": (cmd_basis, "explicit invariant basis up to --deg"),
    "aseries": (cmd_aseries, "coefficients of A(z; t) for --n, z-degree --deg, t-degree --t-cap"),
    "hp": (cmd_hp, "Hilbert-Poincare series four ways"),
    "pp": (cmd_pp, "plane partitions over the (--m, --n)-hook"),
    "chi": (cmd_chi, "chi_{m,n} against hook-diagram counts"),
    "fmn": (cmd_fmn, "the alternating-sum formula f_{m,n}"),
    "chevalley": (cmd_chevalley, "Chevalley projection of an element or symbol"),
    "cancel": (cmd_cancel, "c0-cancellation check of an element or of generator products"),
    "probe": (cmd_probe, "exploratory conjecture probe (JSON report)"),
    "accept": (cmd_accept, "run an acceptance suite"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--deg", type=int, help="truncation or degree bound (default 4)")
    common.add_argument("--k", type=int, help="family index k (default 1)")
    common.add_argument("--n", type=int, help="n, or the second hook parameter (default 1)")
    common.add_argument("--m", type=int, help="first hook parameter (default 1)")
    common.add_argument("--t-cap", dest="t_cap", type=int, help="t-degree bound (default 2)")
    common.add_argument("--family", help="h, b or s (default h)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, help="seed for randomized checks (default 0)")

    parser = argparse.ArgumentParser(prog="gl11inv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name in ("invariance", "chevalley", "cancel"):
            p.add_argument("--expr", help="polynomial, e.g. 'a0*c0 + phi0*psi0'")
        if name == "probe":
            p.add_argument("kind", help=", ".join(sorted(susy.PROBES)))
        if name == "accept":
            p.add_argument("suite", help=", ".join(acceptance.SUITES))
    return parser


def config_from(args) -> RunConfig:
    given = {f: getattr(args, f) for f in ("deg", "k", "n", "m", "t_cap", "family", "seed")
             if getattr(args, f) is not None}
    return RunConfig(json=args.json, **given)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from(args)
        return COMMANDS[args.command][0](cfg, args)
    except (UsageError, ValueError) as exc:
        parser.error(str(exc))  # exits with status 2


if __name__ == "__main__":
    sys.exit(main())
