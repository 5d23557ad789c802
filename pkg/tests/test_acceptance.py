"""Acceptance criteria 1-14, each reported as one PASS/FAIL line.

Criteria whose literal statement cannot hold are kept verbatim and marked
as strict xfail; each has a companion test with the corrected input.
"""
from __future__ import annotations

import time

import pytest
from sympy import isprime, prevprime, primerange

from lefschetz import groebner
from lefschetz.cli import run
from lefschetz.codim3 import MonomialIdeal3, verify_bad_primes, wlp3_bad_primes
from lefschetz.groebner import BivariatePoly, FieldSpec, buchberger, has_slp_generic, initial_ideal, parse_polys
from lefschetz.ideal import MonomialIdeal2
from lefschetz.lattice import build_lattice, count_nilp_families
from lefschetz.linalg import bareiss_det, rank_mod_p
from lefschetz.maps import build_matrix, closed_form_det, reduce_to_hat
from lefschetz.slp import bad_primes, family_verdict_dd, family_verdict_small, has_slp
from lefschetz.sweeps import forcing_sweep, run_sweep

X10Y7 = MonomialIdeal2.parse("x^10, y^7")
REG_BOUND_IDEAL = "x^20, y^20, z^20, x^3y^8z^13"
REG_BOUND_PRIMES = {2, 3, 5, 7, 11, 17, 19, 23, 20554657}


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


def _analyze(ideal_text: str, verdict, label: str) -> None:
    with Timer() as tm:
        code, record = run(["analyze", "--ideal", ideal_text])
    h, w = tuple(record["result"]["h"]), tuple(record["result"]["w"])
    ok = code == 0 and h == (1, 2, 3, 4, 4, 2) and w == (0, 0, 0, 0, 1, 5) and tm.seconds < 1
    verdict(label, ok, f"h={h} w={w} {tm.seconds:.2f}s")
    assert ok


@pytest.mark.xfail(strict=True, reason="xy^5 is redundant next to y^5; the stated h and w need xy^4")
def test_criterion_01_literal(verdict):
    _analyze("x^6, x^3y, xy^5, y^5", verdict, "criterion 1 (literal generators)")


def test_criterion_01_corrected(verdict):
    _analyze("x^6, x^3y, xy^4, y^5", verdict, "criterion 1 (xy^4 in place of xy^5)")


def test_criterion_02(verdict):
    with Timer() as tm:
        m = build_matrix(X10Y7, 5, 5)
        closed, bareiss = closed_form_det(X10Y7, 5, 5).value, abs(bareiss_det(m.rows()))
        failing = [p for p in primerange(2, 1000) if rank_mod_p(m.rows(), p) < 6]
        slp_fails = [p for p in primerange(2, 1000) if (5, 5, 210) in has_slp(X10Y7, p).witnesses]
    ok = closed == bareiss == 210 and failing == slp_fails == [2, 3, 5, 7] and tm.seconds < 1
    verdict("criterion 2", ok, f"det {closed}/{bareiss}, failing primes {failing}, {tm.seconds:.2f}s")
    assert ok


def _hat(ideal_text: str, verdict, label: str) -> None:
    with Timer() as tm:
        ideal = MonomialIdeal2.parse(ideal_text)
        fd = closed_form_det(ideal, 9, 5)
        j, _, _ = reduce_to_hat(ideal, 9, 5)
    ok = (
        abs(fd.value) == 210
        and abs(bareiss_det(build_matrix(ideal, 9, 5).rows())) == 210
        and (fd.r, fd.s) == (2, 7)
        and j == MonomialIdeal2.parse("x^10, x^3y^7, x^2y^8, xy^9, y^10")
        and tm.seconds < 1
    )
    verdict(label, ok, f"det {fd.value}, r={fd.r}, s={fd.s}, J={j}")
    assert ok


@pytest.mark.xfail(strict=True, reason="with x^10y^2 the pair (9, 14) is not square: h(9) = 10, h(14) = 8")
def test_criterion_03_literal(verdict):
    try:
        _hat("x^15, x^10y^2, x^2y^9, y^15", verdict, "criterion 3 (literal generators)")
    except Exception as exc:
        verdict("criterion 3 (literal generators)", False, type(exc).__name__)
        raise


def test_criterion_03_corrected(verdict):
    _hat("x^15, x^12y^2, x^2y^9, y^15", verdict, "criterion 3 (x^12y^2 in place of x^10y^2)")


def test_criterion_04(verdict):
    with Timer() as tm:
        count = count_nilp_families(build_lattice(X10Y7, 5, 5))
    ok = count == 210 == abs(bareiss_det(build_matrix(X10Y7, 5, 5).rows())) and tm.seconds < 30
    verdict("criterion 4", ok, f"{count} families, {tm.seconds:.2f}s")
    assert ok


def _sweep(label: str, checks: list[str], limit: float, verdict, **kw) -> None:
    with Timer() as tm:
        res = run_sweep(checks, **kw)
    fails = sum(len(v) for v in res.failures.values())
    ok = res.ok and tm.seconds < limit
    verdict(label, ok, f"{res.ideals} ideals, {fails} failures, {tm.seconds:.1f}s")
    assert ok, {k: v[:5] for k, v in res.failures.items()}


def test_criterion_05(verdict):
    _sweep("criterion 5", ["always-slp"], 300, verdict, max_reg=8)


def test_criterion_06(verdict):
    _sweep("criterion 6", ["closed-form"], 120, verdict, max_reg=12, sample=1000, seed=0)


def test_criterion_07(verdict):
    _sweep("criterion 7", ["wlp"], 300, verdict, max_reg=8)


def test_criterion_08_bounds(verdict):
    with Timer() as tm:
        res = run_sweep(["bounds"], max_reg=8)
        family = {n: bad_primes(MonomialIdeal2([(2**n, 0), (0, 2)])).primes for n in range(1, 6)}
    ok = res.ok and all(v == (2,) for v in family.values()) and tm.seconds < 300
    verdict("criterion 8 (bounds and the (x^(2^n), y^2) family)", ok, f"{res.ideals} ideals, family {family}, {tm.seconds:.1f}s")
    assert ok


@pytest.mark.xfail(strict=True, reason="SLP can fail at w(reg) - 1 without x^reg and y^reg in the ideal")
def test_criterion_08_width_sharpness(verdict):
    _sweep("criterion 8 (width sharpness)", ["width-sharpness"], 300, verdict, max_reg=8)


def test_criterion_09(verdict):
    with Timer() as tm:
        primes = list(primerange(2, 24))
        small = [
            (a, b, p)
            for b in (2, 3)
            for a in range(3, 13)
            for p in primes
            if family_verdict_small(a, b, p) != has_slp(MonomialIdeal2([(a, 0), (0, b)]), p).verdict
        ]
        dd = [
            (d, p)
            for d in range(2, 11)
            for p in [0, *primes]
            if family_verdict_dd(d, p) != has_slp(MonomialIdeal2([(d, 0), (0, d)]), p).verdict
        ]
        pp = all(not has_slp(MonomialIdeal2([(p, 0), (0, p)]), p).verdict for p in primes if p <= 10)
    ok = not small and not dd and pp and tm.seconds < 120
    verdict("criterion 9", ok, f"{len(small)} + {len(dd)} disagreements, {tm.seconds:.1f}s")
    assert ok


def _same_basis(gens: str, expected: list[str], field: FieldSpec) -> bool:
    gb = buchberger(parse_polys(gens, field), field)
    want = {str(BivariatePoly.parse(e, field).monic()) for e in expected}
    return {str(g) for g in gb.basis} == want


def test_criterion_10(verdict):
    fields = [FieldSpec.rationals(), FieldSpec(2), FieldSpec(3), FieldSpec(5), FieldSpec(7)]
    mismatches = []
    with Timer() as tm:
        for b in range(2, 9):
            for f in fields:
                if not _same_basis(f"x^2, x*y^{b - 1} + y^{b}", ["x^2", f"x*y^{b - 1} + y^{b}", f"y^{b + 1}"], f):
                    mismatches.append(("first family", b, f.p))
        for b in range(3, 9):
            for f in fields:
                expected = ["x^3", f"x^2*y^{b - 2} + y^{b}", f"x*y^{b}", f"y^{b + 2}"]
                if not _same_basis(f"x^3, x^2*y^{b - 2} + y^{b}", expected, f):
                    mismatches.append(("second family", b, f.p))
        for f in [fields[0], *fields[2:]]:
            gb = buchberger(parse_polys("x^2 + y^2, x^3 + y^3", f), f)
            if not _same_basis("x^2 + y^2, x^3 + y^3", ["x^2 + y^2", "x*y^2 - y^3", "y^4"], f):
                mismatches.append(("switching fields basis", f.p))
            if groebner.quotient_hilbert(gb) != (1, 2, 2, 1):
                mismatches.append(("switching fields h", f.p))
        if groebner.is_artinian_poly(buchberger(parse_polys("x^2 + y^2, x^3 + y^3", fields[1]), fields[1])):
            mismatches.append(("switching fields artinian at 2",))
        for p in (3, 5, 7, 11, 13):
            k = (p - 1) // 2
            gens = f"x^{p}, x^{k + 1}*y^{k} + y^{p}"
            expected = [f"x^{p}", f"x^{k + 1}*y^{k} + y^{p}", f"x^{k}*y^{p}", f"y^{(3 * p + 1) // 2}"]
            for f in (FieldSpec.rationals(), FieldSpec(2), FieldSpec(p)):
                if not _same_basis(gens, expected, f):
                    mismatches.append(("conjecture basis", p, f.p))
            lex = initial_ideal(buchberger(parse_polys(gens, FieldSpec(p)), FieldSpec(p))).is_lexsegment()
            if lex != (p == 3):
                mismatches.append(("conjecture lexsegment", p))
    ok = not mismatches and tm.seconds < 60
    verdict("criterion 10", ok, f"{len(mismatches)} mismatches, {tm.seconds:.1f}s")
    assert ok, mismatches


def test_criterion_11(verdict):
    with Timer() as tm:
        results = {p: has_slp_generic(f"x^{p}, x^{(p + 1) // 2}*y^{(p - 1) // 2} + y^{p}", p) for p in (3, 5, 7, 11, 13)}
    ok = all(results.values()) and tm.seconds < 600
    verdict("criterion 11", ok, f"{results}, {tm.seconds:.1f}s")
    assert ok


@pytest.mark.slow
@pytest.mark.parametrize("p", [q for q in primerange(17, 42)])
def test_criterion_11_larger_primes(p):
    assert has_slp_generic(f"x^{p}, x^{(p + 1) // 2}*y^{(p - 1) // 2} + y^{p}", p)


def test_criterion_12_verification(verdict):
    ideal = MonomialIdeal3.parse(REG_BOUND_IDEAL)
    with Timer() as tm:
        fails = verify_bad_primes(ideal, sorted(REG_BOUND_PRIMES), [13, 29, 31, prevprime(20554657)])
    ok = all(fails[q] == (q in REG_BOUND_PRIMES) for q in fails) and tm.seconds < 300
    verdict("criterion 12 (per-prime verification)", ok, f"{fails}, {tm.seconds:.1f}s")
    assert ok


def test_criterion_12_discovery(verdict):
    ideal = MonomialIdeal3.parse(REG_BOUND_IDEAL)
    with Timer() as tm:
        found = wlp3_bad_primes(ideal)
    ok = set(found) == REG_BOUND_PRIMES and tm.seconds < 1800
    verdict("criterion 12 (discovery from scratch)", ok, f"{sorted(found)}, {tm.seconds:.1f}s")
    assert ok


def test_criterion_13(verdict):
    _sweep("criterion 13", ["bridge", "large-char-wlp"], 600, verdict, max_reg=8)


def test_criterion_14(verdict):
    with Timer() as tm:
        failures = forcing_sweep(8)
    ok = not failures and tm.seconds < 300
    verdict("criterion 14", ok, f"{len(failures)} disagreements, {tm.seconds:.1f}s")
    assert ok, failures[:5]


def test_prime_list_sanity():
    assert all(isprime(q) for q in REG_BOUND_PRIMES)
