"""Command-line front end.

Every subcommand prints a short human-readable summary, or with ``--json``
one JSON record with the fields ``command``, ``input``, ``result``,
``witnesses``, ``timing_ms`` and ``version``.

Exit codes: 0 success, 1 a "false" verdict from an assertion-style command,
2 usage or input errors, 3 resource limits.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Callable

from . import __version__, groebner, macaulay, maps, slp
from .codim3 import MonomialIdeal3, has_wlp3, verify_bad_primes, wlp3_bad_primes
from .errors import ForcingHolds, LefschetzError, ParseError, ResourceLimit
from .ideal import MonomialIdeal2
from .lattice import DEFAULT_CAP, build_lattice, count_nilp_families, render_lattice
from .parsing import parse_int_list
from .sweeps import CHECKS, forcing_sweep, run_sweep

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class Outcome:
    """What a subcommand produced: a result record, witnesses, text and a verdict."""

    def __init__(self, result: dict, text: str, witnesses: list | None = None, verdict: bool = True):
        self.result = result
        self.text = text
        self.witnesses = witnesses or []
        self.verdict = verdict


def _ideal(args) -> MonomialIdeal2:
    if not args.ideal:
        raise ParseError("--ideal is required", token="--ideal")
    return MonomialIdeal2.parse(args.ideal)


def _char(args) -> int:
    if args.char is None:
        raise ParseError("--char/--prime is required", token="--char")
    return args.char


def _need(args, name: str) -> int:
    val = getattr(args, name)
    if val is None:
        raise ParseError(f"--{name} is required", token=f"--{name}")
    return val


def cmd_analyze(args) -> Outcome:
    ideal = _ideal(args)
    ideal.require_artinian()
    h = list(ideal.hilbert_function().values)
    w = [ideal.width_at(d) for d in range(ideal.reg + 1)]
    res = {
        "ideal": str(ideal),
        "h": h,
        "w": w,
        "reg": ideal.reg,
        "indeg": ideal.indeg,
        "lexsegment": ideal.is_lexsegment(),
        "lex_defect": [ideal.lex_defect(d) for d in range(ideal.reg + 1)],
        "square_pairs": maps.square_pairs(ideal),
    }
    text = (f"ideal {ideal}\nh = {tuple(h)}\nw = {tuple(w)}\nreg = {ideal.reg}, indeg = {ideal.indeg}\n"
            f"lexsegment = {res['lexsegment']}\nsquare pairs = {res['square_pairs']}")
    return Outcome(res, text)


def cmd_matrix(args) -> Outcome:
    ideal = _ideal(args)
    m = maps.build_matrix(ideal, _need(args, "d"), _need(args, "t"))
    rows = m.rows()
    text = "\n".join(" ".join(f"{v:>4}" for v in row) for row in rows)
    return Outcome({"d": m.d, "t": m.t, "columns": list(m.bexps), "matrix": rows}, text)


def cmd_det(args) -> Outcome:
    ideal = _ideal(args)
    d, t = _need(args, "d"), _need(args, "t")
    fd = maps.closed_form_det(ideal, d, t)
    exact = maps.det_exact(maps.build_matrix(ideal, d, t))
    res = {
        "d": d, "t": t, "closed_form": fd.value, "elimination": exact,
        "agree": abs(exact) == fd.value, "r": fd.r, "s": fd.s,
        "factorization": {str(q): e for q, e in fd.prime_factorization.items()},
    }
    text = f"|det N({d},{d + t})| = {fd.value} = {fd.factorization_str()}  (elimination: {exact}; r={fd.r}, s={fd.s})"
    return Outcome(res, text, verdict=res["agree"])


def cmd_slp(args) -> Outcome:
    ideal = _ideal(args)
    rep = slp.has_slp(ideal, _char(args))
    wit = [list(w) for w in rep.witnesses]
    text = f"SLP in characteristic {rep.prime}: {rep.verdict}"
    if wit:
        text += "\nwitnesses (d, t, det): " + ", ".join(str(tuple(w)) for w in wit)
    return Outcome({"prime": rep.prime, "verdict": rep.verdict, **rep.bounds}, text, wit, rep.verdict)


def cmd_bad_primes(args) -> Outcome:
    ideal = _ideal(args)
    bp = slp.bad_primes(ideal)
    res = {
        "bad_primes": list(bp.primes),
        "width_bound": slp.width_bound(ideal),
        "regularity_bound": slp.regularity_bound(ideal),
        "lexsegment": ideal.is_lexsegment(),
    }
    wit = [[q, [list(pr) for pr in prs]] for q, prs in bp.pairs.items()]
    text = f"bad primes {set(bp.primes) or '{}'}; w(reg) = {res['width_bound']}, reg + 1 = {res['regularity_bound']}"
    return Outcome(res, text, wit)


def cmd_lgv(args) -> Outcome:
    ideal = _ideal(args)
    d, t = _need(args, "d"), _need(args, "t")
    lat = build_lattice(ideal, d, t)
    count = count_nilp_families(lat, cap=args.cap)
    det = abs(maps.det_exact(maps.build_matrix(ideal, d, t)))
    res = {"families": count, "determinant": det, "match": count == det}
    text = f"non-intersecting families: {count}; |det|: {det}; match: {count == det}"
    if args.emit_lattice:
        res["lattice"] = render_lattice(lat)
        text += "\n" + res["lattice"]
    return Outcome(res, text, verdict=count == det)


def _field(args) -> groebner.FieldSpec:
    return groebner.FieldSpec(_char(args))


def cmd_gb(args) -> Outcome:
    if not args.ideal:
        raise ParseError("--ideal is required", token="--ideal")
    field = _field(args)
    gb = groebner.buchberger(groebner.parse_polys(args.ideal, field), field)
    art = groebner.is_artinian_poly(gb)
    init = groebner.initial_ideal(gb)
    res = {
        "field": str(field),
        "basis": [str(g) for g in gb.basis],
        "initial_ideal": str(init),
        "artinian": art,
        "initial_lexsegment": init.is_lexsegment(),
    }
    text = f"reduced basis over {field}: {gb}\ninitial ideal: {init}\nartinian: {art}"
    if art:
        res["h"] = list(groebner.quotient_hilbert(gb))
        text += f"\nh = {tuple(res['h'])}"
    return Outcome(res, text)


def _slp_poly(ideal_text: str, p: int) -> Outcome:
    field = groebner.FieldSpec(p)
    gb = groebner.buchberger(groebner.parse_polys(ideal_text, field), field)
    certs = groebner.generic_rank_certificates(gb)
    verdict = groebner.has_slp_generic(ideal_text, p)
    wit = [[c.d, c.t, c.rank, min(c.rows, c.cols), c.method] for c in certs]
    via_init = groebner.slp_via_initial(ideal_text, field)
    res = {"prime": p, "verdict": verdict, "via_initial_ideal": "inconclusive" if via_init is None else via_init}
    lines = [f"SLP over the closure of GF({p}) for l = x + c*y: {verdict}"]
    lines += [f"  ({c.d},{c.t}): rank {c.rank} of {min(c.rows, c.cols)} [{c.method}]" for c in certs]
    return Outcome(res, "\n".join(lines), wit, verdict)


def cmd_slp_poly(args) -> Outcome:
    if not args.ideal:
        raise ParseError("--ideal is required", token="--ideal")
    return _slp_poly(args.ideal, _char(args))


def cmd_conjecture(args) -> Outcome:
    p = args.p if args.p is not None else args.char
    if p is None:
        raise ParseError("--p is required", token="--p")
    if p % 2 == 0:
        raise ParseError(f"{p} is not an odd prime", token=str(p))
    k = (p - 1) // 2
    text = f"x^{p}, x^{k + 1}*y^{k} + y^{p}"
    out = _slp_poly(text, p)
    out.result["ideal"] = text
    out.text = f"ideal ({text})\n" + out.text
    return out


def cmd_wlp3(args) -> Outcome:
    if not args.ideal:
        raise ParseError("--ideal is required", token="--ideal")
    ideal = MonomialIdeal3.parse(args.ideal)
    ideal.require_artinian()
    res: dict[str, Any] = {"ideal": str(ideal), "h": list(ideal.hilbert), "reg": ideal.reg}
    if args.verify:
        claimed = parse_int_list(args.verify)
        checked = verify_bad_primes(ideal, claimed)
        res["verified"] = {str(q): v for q, v in checked.items()}
        ok = all(checked.values())
        return Outcome(res, f"claimed failures confirmed: {ok} {checked}", verdict=ok)
    if args.bad_primes:
        found = wlp3_bad_primes(ideal, seed=args.seed)
        res["bad_primes"] = list(found)
        wit = [[q, list(ds)] for q, ds in found.items()]
        return Outcome(res, f"WLP fails exactly in characteristics {list(found)}", wit)
    rep = has_wlp3(ideal, _char(args))
    res.update({"prime": rep.prime, "verdict": rep.verdict})
    wit = [[d, got, want] for d, got, want in rep.ranks if got != want]
    return Outcome(res, f"WLP in characteristic {rep.prime}: {rep.verdict}", wit, rep.verdict)


def cmd_sweep(args) -> Outcome:
    checks = args.checks.split(",") if args.checks else ["always-slp", "bounds"]
    t0 = time.perf_counter()
    if "forcing" in checks:
        checks.remove("forcing")
        forcing = forcing_sweep(args.max_reg)
    else:
        forcing = None
    for c in checks:
        if c not in CHECKS:
            raise ParseError(f"unknown check {c!r}", token=c)
    r = run_sweep(checks, args.max_reg, sample=args.sample, seed=args.seed, jobs=args.jobs)
    failures = {k: v for k, v in r.failures.items()}
    if forcing is not None:
        failures["forcing"] = forcing
    ok = not any(failures.values())
    res = {"ideals": r.ideals, "checks": list(failures) or checks,
           "failures": {k: len(v) for k, v in failures.items()}, "ok": ok}
    wit = [m for v in failures.values() for m in v[:20]]
    text = f"{r.ideals} ideals, {time.perf_counter() - t0:.1f}s: " + ", ".join(
        f"{k} {'ok' if not v else f'{len(v)} failures'}" for k, v in failures.items())
    return Outcome(res, text, wit, ok)


def cmd_witness(args) -> Outcome:
    if args.hvector:
        seq = parse_int_list(args.hvector)
        forced = macaulay.h_forces_lexsegment(seq)
        kind = "h"
    elif args.wvector:
        seq = parse_int_list(args.wvector)
        forced = macaulay.w_forces_lexsegment(seq)
        kind = "w"
    else:
        raise ParseError("--hvector or --wvector is required", token="--hvector")
    res: dict[str, Any] = {kind: seq, "forces_lexsegment": forced}
    if forced:
        res["lex_ideal"] = str(macaulay.lex_ideal_from_hilbert(seq) if kind == "h" else macaulay.lex_ideal_from_width(seq))
        return Outcome(res, f"every monomial ideal with this {kind} is lexsegment; no witness", verdict=False)
    wit = macaulay.non_lex_witness_from_h(seq) if kind == "h" else macaulay.non_lex_witness_from_w(seq)
    res["witness"] = str(wit)
    return Outcome(res, f"non-lexsegment witness: {wit}", [str(wit)])


COMMANDS: dict[str, tuple[Callable, str]] = {
    "analyze": (cmd_analyze, "Hilbert and width functions, lexsegment status"),
    "matrix": (cmd_matrix, "matrix of x(x+y)^t between degrees d and d+t"),
    "det": (cmd_det, "determinant by closed form and by elimination"),
    "slp": (cmd_slp, "SLP verdict in one characteristic"),
    "bad-primes": (cmd_bad_primes, "all characteristics where SLP fails"),
    "lgv": (cmd_lgv, "count non-intersecting lattice path families"),
    "gb": (cmd_gb, "reduced Groebner basis of a polynomial ideal"),
    "slp-poly": (cmd_slp_poly, "SLP of a polynomial ideal with a generic linear form"),
    "wlp3": (cmd_wlp3, "WLP of a monomial ideal in three variables"),
    "sweep": (cmd_sweep, "exhaustive or sampled verification sweeps"),
    "conjecture": (cmd_conjecture, "SLP of (x^p, x^((p+1)/2) y^((p-1)/2) + y^p) in characteristic p"),
    "witness": (cmd_witness, "non-lexsegment ideal with prescribed h or w"),
}

# subcommands whose "false" verdict is reported through the exit code
ASSERTIONS = {"slp", "det", "lgv", "slp-poly", "wlp3", "sweep", "conjecture", "witness"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lefschetz", description="Lefschetz properties of monomial and polynomial ideals.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--ideal", help='generators, e.g. "x^6,x^3y,xy^4,y^5"')
        p.add_argument("--char", "--prime", dest="char", type=int, help="characteristic (0 or a prime)")
        p.add_argument("--d", type=int)
        p.add_argument("--t", type=int)
        p.add_argument("--json", action="store_true", help="print one JSON record")
        if name == "witness":
            p.add_argument("--hvector")
            p.add_argument("--wvector")
        if name == "lgv":
            p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="state budget for the path count")
            p.add_argument("--emit-lattice", action="store_true")
        if name == "wlp3":
            p.add_argument("--bad-primes", action="store_true", help="discover all failing characteristics")
            p.add_argument("--verify", help="comma-separated primes to confirm as failures")
            p.add_argument("--seed", type=int, default=0)
        if name == "sweep":
            p.add_argument("--max-reg", type=int, default=6)
            p.add_argument("--checks", help=f"comma-separated from {sorted([*CHECKS, 'forcing'])}")
            p.add_argument("--sample", type=int, help="random sample size instead of all ideals")
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--jobs", type=int, default=1)
        if name == "conjecture":
            p.add_argument("--p", type=int)
    return parser


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def run(argv: list[str] | None = None) -> tuple[int, dict | None]:
    """Execute one command; returns the exit code and the record (``None`` on errors)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    func = COMMANDS[args.command][0]
    t0 = time.perf_counter()
    try:
        out = func(args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT, None
    except ParseError as exc:
        tok = f" (offending token: {exc.token!r})" if exc.token is not None else ""
        print(f"error: {exc}{tok}", file=sys.stderr)
        return EXIT_USAGE, None
    except ForcingHolds as exc:
        print(str(exc))
        return EXIT_FALSE, None
    except LefschetzError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    record = {
        "command": args.command,
        "input": {k: v for k, v in vars(args).items() if k not in ("command", "json") and v not in (None, False)},
        "result": _jsonable(out.result),
        "witnesses": _jsonable(out.witnesses),
        "timing_ms": round((time.perf_counter() - t0) * 1000, 3),
        "version": __version__,
    }
    if args.json:
        print(json.dumps(record))
    else:
        print(out.text)
    code = EXIT_FALSE if (args.command in ASSERTIONS and not out.verdict) else EXIT_OK
    return code, record


def main(argv: list[str] | None = None) -> int:
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())
