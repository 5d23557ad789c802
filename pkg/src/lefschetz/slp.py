"""Strong Lefschetz verdicts for artinian monomial quotients of ``K[x, y]``.

A monomial quotient has the strong Lefschetz property in characteristic ``p``
exactly when ``x + y`` is a strong Lefschetz element, and it suffices to check
that every square map ``N(d, d+t)`` is invertible mod ``p``.  Those
determinants are products of integers no larger than ``w(d+t) - 1``, so the
verdict reduces to divisibility.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from sympy import isprime

from . import macaulay
from .errors import NotPrime, PreconditionFailed
from .ideal import Monomial2, MonomialIdeal2
from .linalg import rank_mod_p
from .maps import build_matrix, closed_form_det, square_pairs


def _check_char(p: int) -> None:
    if p != 0 and not (p > 1 and isprime(p)):
        raise NotPrime(f"{p} is neither 0 nor a prime")


@dataclass(frozen=True)
class SlpReport:
    ideal: MonomialIdeal2
    prime: int
    verdict: bool
    witnesses: tuple[tuple[int, int, int], ...]  # (d, t, determinant)
    bounds: dict[str, int] = field(hash=False)


@dataclass(frozen=True)
class BadPrimeSet:
    """Primes in which SLP fails, with the square pairs witnessing each one."""

    pairs: dict[int, tuple[tuple[int, int], ...]]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted(self.pairs))

    def __contains__(self, p: int) -> bool:
        return p in self.pairs

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.pairs)


def square_determinants(ideal: MonomialIdeal2):
    """``(d, t, FactoredDeterminant)`` for every square pair."""
    return [(d, t, closed_form_det(ideal, d, t)) for d, t in square_pairs(ideal)]


def width_bound(ideal: MonomialIdeal2) -> int:
    """``w(reg)``: SLP holds in every characteristic ``p >= w(reg)``.

    The quotient by ``(x, y)`` has no square pairs; it returns 1.
    """
    ideal.require_artinian()
    reg = ideal.reg
    return max(ideal.width_at(reg), 1)


def regularity_bound(ideal: MonomialIdeal2) -> int:
    """``reg + 1``: SLP holds in every characteristic ``p > reg``."""
    ideal.require_artinian()
    return ideal.reg + 1


def has_slp(ideal: MonomialIdeal2, p: int, all_witnesses: bool = True) -> SlpReport:
    ideal.require_artinian()
    _check_char(p)
    witnesses = []
    if p:
        for d, t, fd in square_determinants(ideal):
            if p in fd.prime_factorization:
                witnesses.append((d, t, fd.value))
                if not all_witnesses:
                    break
    bounds = {"width_bound": width_bound(ideal), "regularity_bound": regularity_bound(ideal)}
    return SlpReport(ideal, p, not witnesses, tuple(witnesses), bounds)


def bad_primes(ideal: MonomialIdeal2) -> BadPrimeSet:
    ideal.require_artinian()
    pairs: dict[int, list[tuple[int, int]]] = {}
    for d, t, fd in square_determinants(ideal):
        for q in fd.prime_factorization:
            pairs.setdefault(q, []).append((d, t))
    result = BadPrimeSet({q: tuple(v) for q, v in sorted(pairs.items())})
    wb, rb = width_bound(ideal), regularity_bound(ideal)
    if any(q >= wb or q >= rb for q in result.primes):
        raise AssertionError(f"bad prime of {ideal} exceeds the width or regularity bound")
    return result


def has_slp_bruteforce(ideal: MonomialIdeal2, p: int) -> bool:
    """Row-reduce every square matrix mod ``p``; independent of the closed form."""
    ideal.require_artinian()
    _check_char(p)
    for d, t in square_pairs(ideal):
        if rank_mod_p(build_matrix(ideal, d, t).entries, p) < d + 1:
            return False
    return True


def consecutive_matrix(ideal: MonomialIdeal2, d: int) -> list[list[int]]:
    """Matrix of ``x (x+y): [R/I]_d -> [R/I]_{d+1}`` on standard monomials."""
    src = ideal.standard_xexps(d)
    dst = ideal.standard_xexps(d + 1)
    return [[1 if b in (a, a + 1) else 0 for b in dst] for a in src]


def wlp_ranks(ideal: MonomialIdeal2, p: int) -> list[tuple[int, int, int]]:
    """``(d, rank, expected)`` for each consecutive map, rank taken mod ``p``."""
    hf = ideal.hilbert_function()
    out = []
    for d in range(hf.reg):
        mat = consecutive_matrix(ideal, d)
        out.append((d, rank_mod_p(mat, p), min(hf(d), hf(d + 1))))
    return out


def has_wlp(ideal: MonomialIdeal2, p: int) -> bool:
    ideal.require_artinian()
    _check_char(p)
    return all(rank == expected for _, rank, expected in wlp_ranks(ideal, p))


def width_failure_degree(ideal: MonomialIdeal2, p: int) -> int | None:
    """Smallest ``j`` in ``[indeg, reg]`` with positive lexsegment defect and ``w(j) - 1 = p``.

    Such a ``j`` certifies that SLP fails in characteristic ``p``: the square
    map ending in degree ``j`` has ``p`` as its largest closed-form factor.
    """
    ideal.require_artinian()
    _check_char(p)
    if p == 0:
        return None
    for j in range(ideal.indeg or 0, ideal.reg + 1):
        if ideal.lex_defect(j) > 0 and ideal.width_at(j) - 1 == p:
            d = ideal.hilbert_function()(j) - 1
            if p not in closed_form_det(ideal, d, j - d).prime_factorization:
                raise AssertionError(f"width failure at {j} not reflected in N({d},{j})")
            return j
    return None


def _width_prime(ideal: MonomialIdeal2) -> int:
    ideal.require_artinian()
    p = ideal.width_at(ideal.reg) - 1
    if not (p > 1 and isprime(p)):
        raise PreconditionFailed(f"w(reg) - 1 = {p} is not prime")
    return p


def width_bound_is_sharp(ideal: MonomialIdeal2) -> bool:
    """Whether ``x^reg`` and ``y^reg`` both lie in the ideal, with ``w(reg) - 1`` prime.

    When this holds, SLP fails in characteristic ``w(reg) - 1`` (asserted).
    The converse does not hold in general; see :func:`width_bound_attained`.
    """
    p = _width_prime(ideal)
    reg = ideal.reg
    sharp = Monomial2(reg, 0) in ideal and Monomial2(0, reg) in ideal
    if sharp and p not in bad_primes(ideal):
        raise AssertionError(f"{ideal} should fail SLP in characteristic {p}")
    return sharp


def width_bound_attained(ideal: MonomialIdeal2) -> bool:
    """Whether SLP fails in characteristic ``w(reg) - 1`` (which must be prime).

    This is decided from the bad primes and cross-checked against the
    degree-``reg`` slice: it fails exactly when that slice has a gap.
    """
    p = _width_prime(ideal)
    attained = p in bad_primes(ideal)
    if attained != (ideal.lex_defect(ideal.reg) > 0):
        raise AssertionError(f"width bound attainment of {ideal} disagrees with its top slice")
    return attained


def fails_slp_given_initial(initial: MonomialIdeal2, p: int) -> bool:
    """Failure certificate from a user-supplied (generic) initial ideal.

    If ``p <= reg`` and ``x^p, y^p`` lie in the initial ideal, the quotient
    fails SLP in characteristic ``p``.  The initial ideal is taken on trust.
    """
    initial.require_artinian()
    _check_char(p)
    return 0 < p <= initial.reg and Monomial2(p, 0) in initial and Monomial2(0, p) in initial


def always_slp(ideal: MonomialIdeal2) -> bool:
    """SLP in every characteristic, which happens exactly for lexsegment ideals."""
    ideal.require_artinian()
    lex = ideal.is_lexsegment()
    if lex != (len(bad_primes(ideal)) == 0):
        raise AssertionError(f"lexsegment and bad-prime verdicts disagree for {ideal}")
    return lex


def h_forces_slp(h) -> bool:
    return macaulay.h_forces_lexsegment(h)


def w_forces_slp(w) -> bool:
    return macaulay.w_forces_lexsegment(w)


def family_verdict_small(a: int, b: int, p: int) -> bool:
    """Closed-form verdict for ``(x^a, y^b)`` with ``b`` in ``{2, 3}`` and ``a >= b``."""
    if b not in (2, 3) or a < b:
        raise PreconditionFailed("need b in {2, 3} and a >= b")
    _check_char(p)
    if p == 0:
        verdict = True
    elif b == 2:
        verdict = a % p != 0
    elif p == 2:
        verdict = a % 4 == 2
    else:
        verdict = a % p not in (p - 1, 0, 1)
    _confirm(MonomialIdeal2([(a, 0), (0, b)]), p, verdict)
    return verdict


def family_verdict_dd(d: int, p: int) -> bool:
    """Closed-form verdict for ``(x^d, y^d)``, ``d >= 2``.

    With ``s`` the largest integer such that ``p^(s-1)`` divides
    ``(2d-1)(2d+1)``, SLP holds iff ``p = 0`` or ``2d - 2 < p^s``.
    """
    if d < 2:
        raise PreconditionFailed("need d >= 2")
    _check_char(p)
    if p == 0:
        verdict = True
    else:
        n = (2 * d - 1) * (2 * d + 1)
        s = 1
        while n % p**s == 0:
            s += 1
        verdict = 2 * d - 2 < p**s
    _confirm(MonomialIdeal2([(d, 0), (0, d)]), p, verdict)
    return verdict


def _confirm(ideal: MonomialIdeal2, p: int, verdict: bool) -> None:
    if has_slp(ideal, p, all_witnesses=False).verdict != verdict:
        raise AssertionError(f"closed-form verdict {verdict} disagrees with the engine for {ideal}, p={p}")
