"""Command-line entry point.

Exit codes: 0 success, 1 a property failed or a counterexample was found,
2 usage error, 3 resource limit (TooLarge).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__, acceptance, dioph, genprime, hyper, hyperfactor, lseries, modarith, notation
from .opexpr import (DEFAULT_MAX_BITS, DomainSpec, DSLSyntaxError, OpSpec, TooLarge, parse_expr, parse_op_expr,
                     parse_range, variables)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_TOO_LARGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    command: str
    params: dict
    version: str = __version__
    timing: dict = field(default_factory=dict)
    bounds: dict | None = None


@dataclass
class Outcome:
    result: Any
    rows: list[dict] | None = None
    text: str | None = None
    violation: bool = False
    bounds: dict | None = None


# ---------------------------------------------------------------------------
# argument helpers

def _params(items: list[str] | None) -> dict[str, int]:
    out = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects name=value, got {item!r}")
        out[name.strip()] = int(value)
    return out


def _domain(args) -> DomainSpec:
    return DomainSpec.parse(args.domain)


def _op(args, text: str | None, domain: DomainSpec | None = None, arity: int | None = None) -> OpSpec:
    """Parse ``text`` and check that printing and re-parsing gives it back."""
    if text is None:
        raise UsageError("an operation is required (--op)")
    params = _params(args.param)
    arity = arity if arity is not None else args.arity
    op = parse_op_expr(text, arity, params, domain or _domain(args), max_bits=args.max_bits)
    again = parse_op_expr(op.text, op.arity, params, op.domain, max_bits=args.max_bits)
    if again != op:
        raise UsageError(f"operation {text!r} does not survive a print/parse round trip")
    return op


def _range(args, default: tuple[int, int] | None = None) -> tuple[int, int]:
    if args.range is None:
        if default is None:
            raise UsageError("--range a..b is required")
        return default
    return parse_range(args.range)


def _bounds(args, window: tuple[int, int], domain: DomainSpec,
            depth: int = 1) -> genprime.CertBounds | None:
    if args.span is None and args.radius is None and args.depth is None:
        return None
    base = genprime.CertBounds.default(window, domain, depth)
    span = parse_range(args.span) if args.span else base.target_span
    radius = args.radius if args.radius is not None else base.witness_radius
    return genprime.CertBounds(span, radius, args.depth or depth)


def _semantics(args) -> genprime.Semantics:
    sem = genprime.parse_semantics(args.semantics)
    if args.depth is not None and isinstance(sem, genprime.Deep):
        sem = genprime.Deep(args.depth)
    return sem


def _order(text: str):
    if text in (notation.ARROW_LEFT, notation.ARROW_RIGHT):
        return text
    return [int(s) for s in text.strip("[]").split(",") if s.strip()]


def _bindings(items: list[str] | None) -> dict[str, int]:
    out = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--bind expects name=value, got {item!r}")
        out[name.strip()] = int(value)
    return out


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


# ---------------------------------------------------------------------------
# hyper

def cmd_hyper_eval(args) -> Outcome:
    limits = hyper.EvalLimits(max_bits=args.max_bits)
    if args.formula:
        flat = notation.parse_hyper(args.formula)
        value = hyper.eval_flat(flat, _bindings(args.bind), limits)
        return Outcome({"formula": notation.print_hyper(flat), "value": str(value)}, text=str(value))
    n, level, x = _need(args.n, "--n"), _need(args.level, "--level"), _need(args.x, "--x")
    value = hyper.hyper_eval(n, level, _order(args.order), x, limits)
    return Outcome({"n": n, "level": level, "order": args.order, "x": x, "value": str(value)}, text=str(value))


def cmd_hyper_convert(args) -> Outcome:
    flat = notation.parse_hyper(_need(args.formula, "--formula"))
    tree = notation.structure(flat)
    canon = notation.flatten(tree)
    res = {"flat": notation.print_hyper(flat), "tree": notation.print_hyper(tree),
           "canonical": notation.print_hyper(canon), "supers": list(flat.supers),
           "canonical_supers": list(canon.supers)}
    return Outcome(res, text=f"{res['flat']}\n{res['tree']}")


def cmd_hyper_distrib(args) -> Outcome:
    limits = hyper.EvalLimits(max_bits=args.max_bits)
    n, level = _need(args.n, "--n"), _need(args.level, "--level")
    r = hyper.distrib_check(n, level, _need(args.x, "--x"), _need(args.y, "--y"), limits)
    res = {"n": n, "level": level, "x": args.x, "y": args.y, "lhs": str(r.lhs), "rhs": str(r.rhs),
           "equal": r.equal}
    return Outcome(res, violation=not r.equal, text=f"{'equal' if r.equal else 'NOT equal'}: {r.lhs}")


def cmd_hyper_zero(args) -> Outcome:
    lo, hi = (args.n, args.n) if args.n is not None else _range(args, (1, 20))
    rows = [{"n": n, "value": hyper.zero_tower(n)} for n in range(lo, hi + 1)]
    bad = [r["n"] for r in rows if r["value"] != 1 - r["n"] % 2]
    return Outcome({"values": rows, "parity_failures": bad}, rows, violation=bool(bad),
                   text="\n".join(f"{r['n']}: {r['value']}" for r in rows))


# ---------------------------------------------------------------------------
# factor

def _factor_targets(args) -> range:
    if args.n is not None:
        return range(args.n, args.n + 1)
    lo, hi = _range(args)
    return range(lo, hi + 1)


def cmd_factor_usual(args) -> Outcome:
    rows = [{"n": n, "factors": " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in hyperfactor.factor_usual(n))}
            for n in _factor_targets(args)]
    return Outcome({"factorizations": rows}, rows, text="\n".join(f"{r['n']} = {r['factors']}" for r in rows))


def cmd_factor_exp(args) -> Outcome:
    rows = [{"n": n, "exp_prime": hyperfactor.is_exp_prime(n)} for n in _factor_targets(args)]
    return Outcome({"results": rows}, rows, text="\n".join(f"{r['n']}: {r['exp_prime']}" for r in rows))


def cmd_factor_hyper3(args) -> Outcome:
    rows = []
    for n in _factor_targets(args):
        hf = hyperfactor.hyper_factorize(n, args.level or 3)
        rows.append({"n": n, "level": hf.level, "terms": [list(t) for t in hf.terms], "text": str(hf)})
    return Outcome({"factorizations": rows},
                   [{"n": r["n"], "terms": r["text"]} for r in rows],
                   text="\n".join(f"{r['n']}: {r['text']}" for r in rows))


def cmd_factor_verify(args) -> Outcome:
    lo, hi = _range(args, (2, 1000))
    bad = []
    for n in range(max(lo, 2), hi + 1):
        hf = hyperfactor.hyper_factorize(n)
        if (hyperfactor.recompose(hf) != n or not hyperfactor.side_conditions_hold(hf)
                or not all(hyperfactor.is_exp_prime(q) for q, _ in hf.terms)):
            bad.append(n)
    unique_hi = min(hi, args.unique_bound)
    not_unique = [n for n in range(max(lo, 2), unique_hi + 1)
                  if hyperfactor.enumerate_hyper3_reps(n, args.unique_bound) != [hyperfactor.hyper_factorize(n)]]
    res = {"range": [lo, hi], "round_trip_failures": bad, "uniqueness_checked_to": unique_hi,
           "uniqueness_failures": not_unique}
    return Outcome(res, violation=bool(bad or not_unique),
                   text=f"round-trip failures: {len(bad)}; uniqueness failures: {len(not_unique)}")


# ---------------------------------------------------------------------------
# prime

def cmd_prime_sieve(args) -> Outcome:
    op = _op(args, args.op)
    window = _range(args)
    sem = _semantics(args)
    depth = sem.depth if isinstance(sem, genprime.Deep) else 1
    bounds = _bounds(args, window, op.domain, depth)
    table = genprime.sieve(op, window, bounds, sem, args.jobs)
    rows = [{"n": c.n, "verdict": c.verdict, "witness": json.dumps(c.witness.to_json()) if c.witness else "",
             "certification": "proven" if c.proven else "bounded"} for c in table]
    text = f"primes: {table.primes}\nunits: {table.unit_elements}"
    if table.notes():
        text += "\n" + "\n".join(table.notes())
    return Outcome(table.to_dict(), rows, text=text, bounds=table.bounds.to_dict())


def cmd_prime_classify(args) -> Outcome:
    op = _op(args, args.op)
    m = _need(args.n, "--n")
    sem = _semantics(args)
    depth = sem.depth if isinstance(sem, genprime.Deep) else 1
    bounds = _bounds(args, (m, m), op.domain, depth)
    c = genprime.classify(op, m, bounds, sem)
    return Outcome(c.to_dict(), [c.to_dict()], text=f"{m}: {c.verdict}" + (f" = {c.witness}" if c.witness else ""),
                   bounds=c.bounds.to_dict() if c.bounds else None)


def cmd_prime_set(args) -> Outcome:
    op = _op(args, args.op)
    window = _range(args)
    bounds = _bounds(args, window, op.domain)
    dom = genprime.prime_set(op, window, bounds, _semantics(args), args.jobs)
    rows = [{"p": p} for p in dom.elements]
    return Outcome({"op": op.text, "window": list(window), "elements": list(dom.elements)}, rows,
                   text="\n".join(str(p) for p in dom.elements))


# ---------------------------------------------------------------------------
# dioph

def _distinct(text: str) -> int:
    return max(1, len(variables(parse_expr(text))))


def _fg(args) -> tuple[OpSpec, OpSpec]:
    """``f`` and ``g``; without an explicit arity each takes the number of
    distinct variables it uses, so ``z^2`` is unary."""
    f_text, g_text = _need(args.op, "--op"), _need(args.g_op, "--g-op")
    f = _op(args, f_text, arity=args.arity or _distinct(f_text))
    g = _op(args, g_text, arity=args.g_arity or _distinct(g_text))
    return f, g


def cmd_dioph_solve(args) -> Outcome:
    f, g = _fg(args)
    lo, hi = parse_range(_need(args.box, "--box"))
    box = dioph.SolutionBox.cube(lo, hi, f.arity, g.arity)
    recs = dioph.solve_box(f, g, box, _bounds(args, (lo, hi), f.domain))
    rows = [{"f_args": " ".join(map(str, r.f_args)), "g_args": " ".join(map(str, r.g_args)),
             "value": r.value, "nowhere_trivial": r.nowhere_trivial} for r in recs]
    return Outcome({"f": f.text, "g": g.text, "box": [lo, hi], "solutions": [r.to_dict() for r in recs]}, rows,
                   text="\n".join(f"{r['f_args']} | {r['g_args']} = {r['value']}" for r in rows))


def cmd_dioph_intersect(args) -> Outcome:
    f, g = _fg(args)
    window = _range(args)
    bounds = _bounds(args, window, f.domain)
    inter = dioph.composite_intersection(f, g, window, bounds)
    rows = [{"value": m, "f_args": " ".join(map(str, fa)), "g_args": " ".join(map(str, ga))}
            for m, (fa, ga) in inter.items()]
    return Outcome({"f": f.text, "g": g.text, "window": list(window),
                    "intersection": [{"value": m, "f_args": list(fa), "g_args": list(ga)}
                                     for m, (fa, ga) in inter.items()]}, rows,
                   text="\n".join(f"{r['value']} = f({r['f_args']}) = g({r['g_args']})" for r in rows) or "empty")


def cmd_dioph_cover(args) -> Outcome:
    f, g = _fg(args)
    window = _range(args)
    rep = dioph.prime_cover_check(f, g, window, _bounds(args, window, f.domain), args.jobs)
    return Outcome(rep.to_dict(), [{"exception": e} for e in rep.exceptions], violation=not rep.covered,
                   text="covered" if rep.covered else f"exceptions: {list(rep.exceptions)}")


def cmd_dioph_goldbach(args) -> Outcome:
    base = _op(args, _need(args.base_op or args.op, "--base-op"))
    outer = _op(args, args.outer_op, DomainSpec("z"), arity=2) if args.outer_op else None
    window = _range(args)
    rep = dioph.goldbach(base, window, outer, jobs=args.jobs)
    return Outcome(rep.to_dict(), [{"failure": n} for n in rep.failures], violation=bool(rep.failures),
                   text=f"failures: {len(rep.failures)}" + (f" {list(rep.failures[:20])}" if rep.failures else ""))


def cmd_dioph_foursquare(args) -> Outcome:
    lo, hi = _range(args, (1, 1000))
    reps = dioph.four_squares(hi, lo)
    bad = [n for n, w in reps.items() if w is None]
    rows = [{"n": n, "witness": " ".join(map(str, w)) if w else ""} for n, w in reps.items()]
    return Outcome({"range": [lo, hi], "failures": bad,
                    "witnesses": {str(n): list(w) if w else None for n, w in reps.items()}}, rows,
                   violation=bool(bad), text=f"failures: {len(bad)}")


# ---------------------------------------------------------------------------
# lseries

def _cutoff(args) -> int:
    if args.cutoff is not None:
        return args.cutoff
    return _range(args, (1, 100))[1]


def _elements(args, op: OpSpec, N: int):
    if args.source == "TAC":
        return lseries.gen_TAC(op, N, args.size)
    return list(lseries.gen_F(op, N, args.size or 4))


def cmd_lseries_tac(args) -> Outcome:
    op = _op(args, args.op)
    N = _cutoff(args)
    elems = lseries.gen_TAC(op, N, args.size)
    rows = [{"value": e.value, "size": e.size, "element": str(e)} for e in elems]
    return Outcome({"op": op.text, "cutoff": N, "elements": rows}, rows,
                   text="\n".join(f"{r['value']}: {r['element']}" for r in rows))


def cmd_lseries_coeffs(args) -> Outcome:
    op = _op(args, args.op)
    N = _cutoff(args)
    table = lseries.coeff_table(_elements(args, op, N), N, args.source)
    rows = [{"i": i, "c_i": table[i]} for i in range(1, N + 1)]
    ones = all(r["c_i"] == 1 for r in rows)
    return Outcome({"op": op.text, "source": args.source, "cutoff": N,
                    "coefficients": {str(i): c for i, c in table.counts.items()},
                    "all_one": ones}, rows, text=table.to_csv())


def _s_value(text: str):
    from fractions import Fraction

    try:
        return int(text)
    except ValueError:
        try:
            return Fraction(text)
        except ValueError:
            return text


def cmd_lseries_eval(args) -> Outcome:
    op = _op(args, args.op)
    N = _cutoff(args)
    s = _s_value(args.s)
    table = lseries.coeff_table(_elements(args, op, N), N, args.source)
    L = lseries.lseries_partial(table, s)
    Z = lseries.zeta_partial(s, N)
    R = lseries.defect_partial(table, s)
    res = {"op": op.text, "source": args.source, "L": L.to_dict(), "zeta": Z.to_dict(), "defect": R.to_dict(),
           "equal": L.value == Z.value}
    return Outcome(res, text=f"L = {res['L']['value']['approx']}\nzeta = {res['zeta']['value']['approx']}\n"
                             f"equal: {res['equal']}")


# ---------------------------------------------------------------------------
# mod

def _pair(args) -> modarith.InversePair:
    z = DomainSpec.parse(args.domain) if args.domain != "n1" else DomainSpec("z")
    g = _op(args, args.g_op, z, arity=2)
    g_inv = _op(args, args.ginv_op, z, arity=2)
    return modarith.InversePair(g, g_inv, args.side)


def cmd_mod_congruent(args) -> Outcome:
    pair = _pair(args)
    f = _op(args, args.f_op, DomainSpec("z") if args.domain == "n1" else _domain(args), arity=2)
    q = modarith.CongruenceQuery(_need(args.c, "--c"), _need(args.b, "--b"), _need(args.m, "--m"), pair, f)
    bounds = genprime.CertBounds((-args.radius, args.radius), args.radius) if args.radius else None
    r = modarith.congruent(q, bounds)
    res = {"c": q.c, "b": q.b, "m": q.m, "g": pair.g.text, "g_inv": pair.g_inv.text, "f": f.text,
           "difference": r.difference, "congruent": r.result.to_dict(), "alpha": r.alpha,
           "m_position": r.position, "diagnostic": r.diagnostic}
    return Outcome(res, text=f"{'congruent' if r.value else 'not congruent'} (d = {r.difference})")


def cmd_mod_fold(args) -> Outcome:
    op = _op(args, args.op, DomainSpec("z") if args.domain == "n1" else _domain(args), arity=2)
    v = modarith.power_fold(op, _need(args.a, "--a"), _need(args.p, "--p"))
    return Outcome({"op": op.text, "a": args.a, "p": args.p, "fold": str(v)}, text=str(v))


def _fermat(r: modarith.FermatResult, params: dict) -> Outcome:
    res = dict(params, holds=r.holds, fold=str(r.fold), via_congruence=r.via_congruence,
               via_closed_form=r.via_closed_form)
    return Outcome(res, violation=not r.holds, text=f"{'holds' if r.holds else 'FAILS'} (fold = {r.fold})")


def cmd_mod_fermat_kxy(args) -> Outcome:
    k, a, p = _need(args.k, "--k"), _need(args.a, "--a"), _need(args.p, "--p")
    return _fermat(modarith.fermat_kxy_check(k, a, p), {"k": k, "a": a, "p": p})


def cmd_mod_fermat_linear(args) -> Outcome:
    v, h, k, p = _need(args.v, "--v"), _need(args.h, "--h"), _need(args.k, "--k"), _need(args.p, "--p")
    u = args.u if args.u is not None else h * (v - 1)
    return _fermat(modarith.fermat_linear_check(u, v, h, k, p), {"u": u, "v": v, "h": h, "k": k, "p": p})


def cmd_mod_inverse_check(args) -> Outcome:
    pair = modarith.InversePair(_op(args, args.g_op, arity=2), _op(args, args.ginv_op, arity=2), args.side)
    rep = modarith.inverse_check(pair, args.sample_bound)
    return Outcome(dict(rep.to_dict(), g=pair.g.text, g_inv=pair.g_inv.text, side=pair.side),
                   violation=not rep.result.value,
                   text=f"{'inverse' if rep.result.value else 'not inverse'} ({rep.checked} checked, "
                        f"{rep.skipped} undefined)")


# ---------------------------------------------------------------------------
# verify

def cmd_verify_all(args) -> Outcome:
    only = {int(s) for s in args.only.split(",")} if args.only else None
    report = None
    if args.format == "text" and not args.out:
        report = lambda r: print(r.line, flush=True)  # noqa: E731
    results = acceptance.run_all(args.profile, only, report)
    failed = [r.number for r in results if not r.passed]
    rows = [{"criterion": r.number, "name": r.name, "passed": r.passed, "seconds": round(r.seconds, 3),
             "limit": r.limit} for r in results]
    text = None if report else "\n".join(r.line for r in results)
    return Outcome({"profile": args.profile, "passed": not failed, "failed": failed,
                    "criteria": [r.to_dict() for r in results]}, rows, violation=bool(failed),
                   text=(text + "\n" if text else "") + (f"failed: {failed}" if failed else "all criteria passed"))


# ---------------------------------------------------------------------------
# parser

COMMANDS = {
    "hyper": {"eval": cmd_hyper_eval, "convert": cmd_hyper_convert, "distrib": cmd_hyper_distrib,
              "zero": cmd_hyper_zero},
    "factor": {"usual": cmd_factor_usual, "exp": cmd_factor_exp, "hyper3": cmd_factor_hyper3,
               "verify": cmd_factor_verify},
    "prime": {"sieve": cmd_prime_sieve, "classify": cmd_prime_classify, "set": cmd_prime_set},
    "dioph": {"solve": cmd_dioph_solve, "intersect": cmd_dioph_intersect, "cover": cmd_dioph_cover,
              "goldbach": cmd_dioph_goldbach, "foursquare": cmd_dioph_foursquare},
    "lseries": {"tac": cmd_lseries_tac, "coeffs": cmd_lseries_coeffs, "eval": cmd_lseries_eval},
    "mod": {"congruent": cmd_mod_congruent, "fold": cmd_mod_fold, "fermat-kxy": cmd_mod_fermat_kxy,
            "fermat-linear": cmd_mod_fermat_linear, "inverse-check": cmd_mod_inverse_check},
    "verify": {"all": cmd_verify_all},
}


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("common options")
    g.add_argument("--op", help="operation in the expression DSL, e.g. 'x^2+y^2'")
    g.add_argument("--arity", type=int)
    g.add_argument("--param", action="append", metavar="NAME=VALUE", help="bind a parameter (repeatable)")
    g.add_argument("--domain", default="n1", help="n1 | n0 | z:<lo>..<hi> | set:<file>")
    g.add_argument("--range", help="window a..b")
    g.add_argument("--span", help="target span lo..hi for unit checks")
    g.add_argument("--radius", type=int, help="witness search radius")
    g.add_argument("--depth", type=int, help="representation depth for deep semantics")
    g.add_argument("--semantics", default="top", help="top | deep:<d>")
    g.add_argument("--max-bits", type=int, default=DEFAULT_MAX_BITS)
    g.add_argument("--format", choices=("json", "csv", "text"), default="text")
    g.add_argument("--jobs", type=int, default=1)
    g.add_argument("--out", help="write output to this file")
    return p


def _specific(p: argparse.ArgumentParser, group: str, name: str) -> None:
    if group == "hyper":
        p.add_argument("--n", type=int)
        p.add_argument("--level", type=int)
        p.add_argument("--order", default="->", help="-> | <- | comma-separated superscripts")
        p.add_argument("--x", type=int)
        p.add_argument("--y", type=int)
        p.add_argument("--formula", help="formula in superscript or parenthesised notation")
        p.add_argument("--bind", action="append", metavar="NAME=VALUE")
    elif group == "factor":
        p.add_argument("--n", type=int)
        p.add_argument("--level", type=int, choices=(1, 2, 3))
        p.add_argument("--unique-bound", type=int, default=512)
    elif group == "prime":
        p.add_argument("--n", type=int)
    elif group == "dioph":
        p.add_argument("--g-op", help="right-hand operation g")
        p.add_argument("--g-arity", type=int)
        p.add_argument("--box", help="variable range lo..hi for solve")
        p.add_argument("--base-op", help="operation whose primes are summed")
        p.add_argument("--outer-op", help="combining operation (default x+y)")
    elif group == "lseries":
        p.add_argument("--cutoff", type=int)
        p.add_argument("--size", type=int, help="maximum number of leaves")
        p.add_argument("--source", choices=("F", "TAC"), default="TAC")
        p.add_argument("--s", default="2")
    elif group == "mod":
        for flag in ("c", "b", "m", "a", "p", "k", "u", "v", "h"):
            p.add_argument(f"--{flag}", type=int)
        p.add_argument("--g-op", default="x+y")
        p.add_argument("--ginv-op", default="x-y")
        p.add_argument("--f-op", default="x*y")
        p.add_argument("--side", choices=("right", "left"), default="right")
        p.add_argument("--sample-bound", type=int, default=10)
    elif group == "verify":
        p.add_argument("--profile", choices=acceptance.PROFILES, default="quick")
        p.add_argument("--only", help="comma-separated criterion numbers")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperprimes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    groups = parser.add_subparsers(dest="group", required=True)
    common = _common()
    for group, subs in COMMANDS.items():
        gp = groups.add_parser(group)
        sp = gp.add_subparsers(dest="sub", required=True)
        for name in subs:
            p = sp.add_parser(name, parents=[common])
            _specific(p, group, name)
    return parser


_NON_PARAMS = {"group", "sub", "format", "out", "jobs"}


def _render(args, manifest: RunManifest, out: Outcome) -> str:
    if args.format == "json":
        return json.dumps({"manifest": asdict(manifest), "result": out.result}, indent=2, sort_keys=True) + "\n"
    if args.format == "csv":
        rows = out.rows
        if rows is None:
            rows = [{k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in out.result.items()}]
        buf = io.StringIO()
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        return buf.getvalue()
    text = out.text if out.text is not None else json.dumps(out.result, indent=2)
    return text if text.endswith("\n") else text + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    command = f"{args.group} {args.sub}"
    params = {k: v for k, v in sorted(vars(args).items()) if k not in _NON_PARAMS and v is not None}
    t0 = time.perf_counter()
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        out = COMMANDS[args.group][args.sub](args)
    except TooLarge as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (UsageError, DSLSyntaxError, notation.HyperSyntaxError, notation.AmbiguousForm,
            ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    manifest = RunManifest(command, params, timing={"seconds": round(time.perf_counter() - t0, 6)},
                           bounds=out.bounds)
    text = _render(args, manifest, out)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_VIOLATION if out.violation else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
