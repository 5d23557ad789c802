"""Exhaustive and sampled verification sweeps over families of monomial ideals.

Each check takes one ideal and returns a list of failure messages (empty
when everything holds).  :func:`run_sweep` maps checks over an ideal family,
optionally in a process pool.
"""
from __future__ import annotations

import random
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from sympy import isprime

from . import macaulay
from .codim3 import MonomialIdeal3, cokernel_bridge_verdicts, wlp3_verdicts
from .ideal import MonomialIdeal2, iter_artinian_ideals, iter_box_ideals, random_artinian_ideal
from .lattice import lgv_verify
from .maps import build_matrix, closed_form_det, det_exact, square_pairs
from .slp import always_slp, bad_primes, has_wlp, width_bound, width_bound_attained, width_bound_is_sharp

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def check_always_slp(ideal: MonomialIdeal2) -> list[str]:
    lex = ideal.is_lexsegment()
    empty = len(bad_primes(ideal)) == 0
    if lex != empty:
        return [f"{ideal}: lexsegment={lex} but no-bad-primes={empty}"]
    always_slp(ideal)
    return []


def check_bounds(ideal: MonomialIdeal2) -> list[str]:
    out = []
    bad = bad_primes(ideal).primes
    wb, reg = width_bound(ideal), ideal.reg
    for q in bad:
        if q >= wb:
            out.append(f"{ideal}: bad prime {q} >= w(reg) = {wb}")
        if q > reg:
            out.append(f"{ideal}: bad prime {q} > reg = {reg}")
    if isprime(wb - 1):
        width_bound_attained(ideal)
    return out


def check_width_sharpness(ideal: MonomialIdeal2) -> list[str]:
    """Pure powers ``x^reg, y^reg`` in the ideal iff SLP fails at ``w(reg) - 1``."""
    wb = width_bound(ideal)
    if not isprime(wb - 1):
        return []
    sharp = width_bound_is_sharp(ideal)
    failing = (wb - 1) in bad_primes(ideal)
    if sharp != failing:
        return [f"{ideal}: pure powers of degree reg {sharp}, fails at {wb - 1}: {failing}"]
    return []


def check_wlp(ideal: MonomialIdeal2, primes: Iterable[int] = SMALL_PRIMES) -> list[str]:
    return [f"{ideal}: WLP fails mod {p}" for p in primes if not has_wlp(ideal, p)]


def check_closed_form(ideal: MonomialIdeal2) -> list[str]:
    out = []
    for d, t in square_pairs(ideal):
        exact = det_exact(build_matrix(ideal, d, t))
        closed = closed_form_det(ideal, d, t).value
        if abs(exact) != closed:
            out.append(f"{ideal} ({d},{t}): closed form {closed} vs elimination {exact}")
    return out


def check_lgv(ideal: MonomialIdeal2) -> list[str]:
    return [f"{ideal} ({d},{t}): path count differs from determinant"
            for d, t in square_pairs(ideal) if not lgv_verify(ideal, d, t)]


def check_bridge(ideal: MonomialIdeal2, primes: Iterable[int] = SMALL_PRIMES) -> list[str]:
    out = []
    for d, t in square_pairs(ideal):
        for p, (two, three) in cokernel_bridge_verdicts(ideal, t, d, primes).items():
            if two != three:
                out.append(f"{ideal} ({d},{t}) mod {p}: bivariate {two}, trivariate {three}")
    return out


def check_large_char_wlp(ideal: MonomialIdeal2, max_t: int = 5, primes: Iterable[int] = (2, 3, 5, 7, 11, 13, 17)) -> list[str]:
    """WLP of ``S/(I + (z^t))`` in every listed characteristic ``p >= reg``."""
    out = []
    for t in range(1, max_t + 1):
        j = MonomialIdeal3.from_bivariate(ideal, t)
        large = [p for p in primes if p >= j.reg]
        for p, ok in wlp3_verdicts(j, large).items():
            if not ok:
                out.append(f"{ideal} + z^{t}: WLP fails mod {p} although p >= reg = {j.reg}")
    return out


CHECKS: dict[str, Callable[[MonomialIdeal2], list[str]]] = {
    "always-slp": check_always_slp,
    "bounds": check_bounds,
    "width-sharpness": check_width_sharpness,
    "wlp": check_wlp,
    "closed-form": check_closed_form,
    "lgv": check_lgv,
    "bridge": check_bridge,
    "large-char-wlp": check_large_char_wlp,
}


@dataclass
class SweepResult:
    checks: tuple[str, ...]
    ideals: int = 0
    failures: dict[str, list[str]] = field(default_factory=lambda: defaultdict(list))

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())


def _run_chunk(args: tuple[tuple[str, ...], list[tuple[int, ...]]]) -> dict[str, list[str]]:
    names, staircases = args
    out: dict[str, list[str]] = defaultdict(list)
    for heights in staircases:
        ideal = MonomialIdeal2.from_staircase(heights)
        for name in names:
            out[name].extend(CHECKS[name](ideal))
    return dict(out)


def sample_ideals(count: int, max_reg: int, seed: int) -> list[MonomialIdeal2]:
    rng = random.Random(seed)
    return [random_artinian_ideal(rng, max_reg) for _ in range(count)]


def run_sweep(
    checks: Iterable[str],
    max_reg: int,
    sample: int | None = None,
    seed: int = 0,
    jobs: int = 1,
    chunk: int = 500,
) -> SweepResult:
    """Run ``checks`` over all artinian ideals with ``reg <= max_reg``, or over a seeded sample."""
    names = tuple(checks)
    for n in names:
        if n not in CHECKS:
            raise KeyError(n)
    family = sample_ideals(sample, max_reg, seed) if sample else iter_artinian_ideals(max_reg)
    stairs = [ideal.staircase() for ideal in family]
    result = SweepResult(names, ideals=len(stairs))
    batches = [(names, stairs[i:i + chunk]) for i in range(0, len(stairs), chunk)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_chunk, batches))
    else:
        parts = [_run_chunk(b) for b in batches]
    for part in parts:
        for name, msgs in part.items():
            result.failures[name].extend(msgs)
    return result


def forcing_sweep(max_reg: int) -> list[str]:
    """Compare both forcing criteria with direct quantification over ideals.

    For h, the ideals with ``reg <= max_reg`` are grouped by h-sequence;
    every ideal with such an h is in the family.  For w, the family is every
    ideal containing ``x^(max_reg+1)`` and ``y^(max_reg+1)``, which is exactly
    the set of ideals whose width is ``d + 1`` from degree ``max_reg + 1`` on.
    Each group's "all lexsegment" verdict must match the criterion, and every
    witness must reproduce its sequence while failing to be lexsegment.
    """
    by_h: dict[tuple[int, ...], list[bool]] = defaultdict(list)
    for ideal in iter_artinian_ideals(max_reg):
        by_h[tuple(ideal.hilbert_function().values)].append(ideal.is_lexsegment())
    by_w: dict[tuple[int, ...], list[bool]] = defaultdict(list)
    for ideal in iter_box_ideals(max_reg + 1):
        w = tuple(ideal.width_at(d) for d in range(max_reg + 1))
        by_w[_trim_width(w)].append(ideal.is_lexsegment())
    out = []
    for h, flags in by_h.items():
        forced = macaulay.h_forces_lexsegment(h)
        if forced != all(flags):
            out.append(f"h={h}: criterion {forced}, brute force {all(flags)}")
        if not forced:
            macaulay.non_lex_witness_from_h(h)
    for w, flags in by_w.items():
        forced = macaulay.w_forces_lexsegment(w)
        if forced != all(flags):
            out.append(f"w={w}: criterion {forced}, brute force {all(flags)}")
        if not forced:
            macaulay.non_lex_witness_from_w(w)
    return out


def _trim_width(w: tuple[int, ...]) -> tuple[int, ...]:
    # drop a tail that already agrees with the continuation d + 1
    w = list(w)
    while len(w) > 1 and w[-1] == len(w):
        w.pop()
    return tuple(w)
