"""Weak Lefschetz checks for monomial quotients of ``K[x, y, z]``.

The map ``x (x+y+z): [S/J]_d -> [S/J]_{d+1}`` has a 0/1 matrix with integer
entries, so the primes in which it drops rank are the primes dividing the
gcd of its maximal minors.  That gcd is found from a handful of nonzero
minors (computed modulo word-size primes and recombined) and every prime
factor is then confirmed by a rank computation modulo that prime.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, log2, prod
from typing import Iterable

import numpy as np
from sympy import factorint, isprime, prevprime

from .errors import NotArtinian, NotPrime, PreconditionFailed, ResourceLimit, ShapeMismatch
from .ideal import MonomialIdeal2
from .linalg import det_mod_p_np, rank_integer, rank_mod_p, rank_mod_p_np
from .maps import binom
from .parsing import parse_exponents, split_generators

Exps3 = tuple[int, int, int]

# modular primes for exact determinants, just under 2^31
_MOD_PRIMES: list[int] = []


def _mod_primes(count: int) -> list[int]:
    while len(_MOD_PRIMES) < count:
        _MOD_PRIMES.append(prevprime(_MOD_PRIMES[-1] if _MOD_PRIMES else 2**31 - 1))
    return _MOD_PRIMES[:count]


@dataclass(frozen=True, order=True)
class Monomial3:
    x: int
    y: int
    z: int

    @property
    def exps(self) -> Exps3:
        return (self.x, self.y, self.z)

    @property
    def degree(self) -> int:
        return self.x + self.y + self.z

    def divides(self, other: "Monomial3") -> bool:
        return self.x <= other.x and self.y <= other.y and self.z <= other.z

    def __str__(self) -> str:
        parts = [v if e == 1 else f"{v}^{e}" for v, e in zip("xyz", self.exps) if e]
        return "*".join(parts) or "1"


class MonomialIdeal3:
    """Monomial ideal of ``K[x, y, z]`` kept as its minimal generators."""

    def __init__(self, generators: Iterable[Monomial3 | Exps3]):
        gens = {g if isinstance(g, Monomial3) else Monomial3(*g) for g in generators}
        minimal = [g for g in gens if not any(h != g and h.divides(g) for h in gens)]
        self.generators = tuple(sorted(minimal, key=lambda m: (m.degree, m.exps), reverse=False))

    @classmethod
    def parse(cls, text: str) -> "MonomialIdeal3":
        return cls(Monomial3(*parse_exponents(g, "xyz")) for g in split_generators(text))

    @classmethod
    def from_bivariate(cls, ideal: MonomialIdeal2, t: int) -> "MonomialIdeal3":
        """``I + (z^t)`` for a bivariate monomial ideal ``I``."""
        return cls([(g.xexp, g.yexp, 0) for g in ideal] + [(0, 0, t)])

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal3) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.generators)) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal3({str(self)!r})"

    def contains(self, e: Exps3) -> bool:
        return any(g.x <= e[0] and g.y <= e[1] and g.z <= e[2] for g in self.generators)

    @property
    def is_artinian(self) -> bool:
        pure = [{g.exps[i] for g in self.generators if sum(g.exps) == g.exps[i]} for i in range(3)]
        return all(pure) or any(g.degree == 0 for g in self.generators)

    def require_artinian(self) -> None:
        if not self.is_artinian:
            raise NotArtinian(f"{self} lacks a pure power of some variable")

    @cached_property
    def _standard_by_degree(self) -> dict[int, list[Exps3]]:
        self.require_artinian()
        bound = [min(g.exps[i] for g in self.generators if g.degree == g.exps[i]) for i in range(3)]
        by_deg: dict[int, list[Exps3]] = {}
        for a in range(bound[0] - 1, -1, -1):
            for b in range(bound[1] - 1, -1, -1):
                for c in range(bound[2] - 1, -1, -1):
                    e = (a, b, c)
                    if not self.contains(e):
                        by_deg.setdefault(a + b + c, []).append(e)
        return by_deg

    def standard_monomials(self, d: int) -> list[Exps3]:
        """Degree-``d`` monomials outside the ideal, in descending lex order."""
        return list(self._standard_by_degree.get(d, ()))

    @cached_property
    def hilbert(self) -> tuple[int, ...]:
        by_deg = self._standard_by_degree
        return tuple(len(by_deg[d]) for d in range(len(by_deg)))

    @property
    def reg(self) -> int:
        return len(self.hilbert) - 1

    def permuted(self, perm: tuple[int, int, int]) -> "MonomialIdeal3":
        """Rename variables: new exponent ``i`` is old exponent ``perm[i]``."""
        return MonomialIdeal3(tuple(g.exps[k] for k in perm) for g in self.generators)


def hilbert3(ideal: MonomialIdeal3) -> tuple[int, ...]:
    return ideal.hilbert


def wlp3_matrix(ideal: MonomialIdeal3, d: int) -> list[list[int]]:
    """Rows: standard monomials of degree ``d``; columns: degree ``d+1``.

    Entry 1 when the column monomial is the row monomial times a variable.
    """
    ideal.require_artinian()
    src = ideal.standard_monomials(d) if d >= 0 else []
    dst = ideal.standard_monomials(d + 1)
    col = {e: j for j, e in enumerate(dst)}
    mat = []
    for a, b, c in src:
        row = [0] * len(dst)
        for e in ((a + 1, b, c), (a, b + 1, c), (a, b, c + 1)):
            j = col.get(e)
            if j is not None:
                row[j] = 1
        mat.append(row)
    return mat


def _rank(mat: list[list[int]], p: int) -> int:
    if not mat or not mat[0]:
        return 0
    if p == 0:
        return rank_integer(mat)
    if p < 2**31 and max(len(mat), len(mat[0])) > 40:
        return rank_mod_p_np(mat, p)
    return rank_mod_p(mat, p)


@dataclass(frozen=True)
class Wlp3Report:
    prime: int
    verdict: bool
    ranks: tuple[tuple[int, int, int], ...]  # (d, achieved, expected)
    bad_primes: dict[int, tuple[int, ...]] = field(default_factory=dict, hash=False)

    @property
    def failing_degrees(self) -> tuple[int, ...]:
        return tuple(d for d, got, want in self.ranks if got != want)


def _check_char(p: int) -> None:
    if p != 0 and not (p > 1 and isprime(p)):
        raise NotPrime(f"{p} is neither 0 nor a prime")


def has_wlp3(ideal: MonomialIdeal3, p: int) -> Wlp3Report:
    """Maximal rank of every consecutive ``x (x+y+z)`` map in characteristic ``p``."""
    ideal.require_artinian()
    _check_char(p)
    h = ideal.hilbert
    ranks = []
    for d in range(len(h) - 1):
        want = min(h[d], h[d + 1])
        ranks.append((d, _rank(wlp3_matrix(ideal, d), p), want))
    verdict = all(got == want for _, got, want in ranks)
    return Wlp3Report(p, verdict, tuple(ranks))


def wlp3_verdicts(ideal: MonomialIdeal3, primes: Iterable[int]) -> dict[int, bool]:
    """WLP verdict for several characteristics, building each matrix once."""
    ideal.require_artinian()
    primes = list(primes)
    for p in primes:
        _check_char(p)
    h = ideal.hilbert
    ok = dict.fromkeys(primes, True)
    for d in range(len(h) - 1):
        want = min(h[d], h[d + 1])
        mat = wlp3_matrix(ideal, d)
        for p in primes:
            if ok[p] and _rank(mat, p) != want:
                ok[p] = False
    return ok


# -- bad primes ---------------------------------------------------------------


def _hadamard_bits(rows: np.ndarray) -> float:
    # rows are 0/1, so each row norm is sqrt(#ones)
    return sum(0.5 * log2(max(int(r.sum()), 1)) for r in rows)


def _exact_det(sub: np.ndarray) -> int:
    """Integer determinant by CRT over word-size primes, using the Hadamard bound."""
    bits = _hadamard_bits(sub) + 2
    primes = _mod_primes(max(1, int(bits // 30) + 1))
    residues = [det_mod_p_np(sub, q) for q in primes]
    m = prod(primes)
    x = 0
    for q, r in zip(primes, residues):
        mq = m // q
        x = (x + r * mq * pow(mq, -1, q)) % m
    return x - m if x > m // 2 else x


def _pivot_rows(mat: np.ndarray, order: list[int], q: int) -> list[int]:
    """Greedy maximal independent set of rows mod ``q``, scanned in ``order``."""
    a = mat[order] % q
    n, m = a.shape
    picked: list[int] = []
    basis = np.zeros((0, m), dtype=np.int64)
    pivcols: list[int] = []
    for idx in range(n):
        v = a[idx].copy()
        for k, c in enumerate(pivcols):
            if v[c]:
                v = (v - v[c] * basis[k]) % q
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            continue
        c = int(nz[0])
        v = v * pow(int(v[c]), -1, q) % q
        # keep basis in reduced form on pivot columns
        for k in range(len(pivcols)):
            if basis[k, c]:
                basis[k] = (basis[k] - basis[k, c] * v) % q
        basis = np.vstack([basis, v])
        pivcols.append(c)
        picked.append(order[idx])
        if len(picked) == m:
            break
    return picked


def _minor_gcd(mat: list[list[int]], rng: random.Random, stable: int = 3, max_samples: int = 40) -> int:
    """gcd of nonzero maximal minors, sampled until it stops changing.

    The result is a multiple of the gcd of all maximal minors; callers
    confirm each prime factor separately.
    """
    a = np.array(mat, dtype=np.int64)
    if a.shape[0] > a.shape[1]:
        a = a.T
    r, n = a.shape
    if r == 0:
        return 1
    q = _mod_primes(1)[0]
    g = 0
    unchanged = 0
    for _ in range(max_samples):
        order = list(range(n))
        rng.shuffle(order)
        cols = _pivot_rows(a.T, order, q)
        if len(cols) < r:
            return 0  # rank deficient over the rationals
        minor = abs(_exact_det(a[:, sorted(cols)]))
        new = gcd(g, minor)
        unchanged = unchanged + 1 if new == g else 0
        g = new
        if g == 1 or unchanged >= stable:
            break
    return g


def _prime_factors(n: int, limit: int = 10**5) -> list[int]:
    """Prime factors: trial division to ``limit``, then sympy's Pollard rho."""
    out = []
    for q in range(2, limit):
        if q * q > n:
            break
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
    if n > 1:
        out.extend(factorint(n))
    return sorted(set(out))


def wlp3_bad_primes(ideal: MonomialIdeal3, seed: int = 0, max_side: int = 2000) -> dict[int, tuple[int, ...]]:
    """Primes in which some consecutive map drops rank, each with its failing degrees.

    A map of deficient rational rank (which would fail in every
    characteristic) is reported under the key ``0``.
    """
    ideal.require_artinian()
    rng = random.Random(seed)
    h = ideal.hilbert
    found: dict[int, list[int]] = {}
    for d in range(len(h) - 1):
        if max(h[d], h[d + 1]) > max_side:
            raise ResourceLimit(f"degree {d} map is {h[d]}x{h[d + 1]}, above {max_side}")
        mat = wlp3_matrix(ideal, d)
        g = _minor_gcd(mat, rng)
        if g == 0:
            found.setdefault(0, []).append(d)
            continue
        want = min(h[d], h[d + 1])
        for q in _prime_factors(g):
            if _rank(mat, q) < want:
                found.setdefault(q, []).append(d)
    return {q: tuple(ds) for q, ds in sorted(found.items())}


def verify_bad_primes(ideal: MonomialIdeal3, claimed: Iterable[int], others: Iterable[int] = ()) -> dict[int, bool]:
    """Per-prime check: ``{q: WLP fails in characteristic q}`` for claimed and extra primes."""
    out = {}
    for q in [*claimed, *others]:
        out[q] = not has_wlp3(ideal, q).verdict
    return out


# -- the bivariate connection -------------------------------------------------


def single_z_variable(ideal: MonomialIdeal3) -> int | None:
    """Index of a variable dividing exactly one minimal generator (``z`` preferred)."""
    for v in (2, 1, 0):
        if sum(1 for g in ideal.generators if g.exps[v]) == 1:
            return v
    return None


def split_single_z(ideal: MonomialIdeal3) -> tuple[MonomialIdeal2, int]:
    """Write an artinian ``J`` with one generator in the special variable as ``I + (z^t)``."""
    ideal.require_artinian()
    v = single_z_variable(ideal)
    if v is None:
        raise ShapeMismatch(f"no variable of {ideal} divides exactly one generator")
    perm = tuple([k for k in range(3) if k != v] + [v])
    j = ideal.permuted(perm)
    zgen = next(g for g in j.generators if g.z)
    if zgen.x or zgen.y:
        raise AssertionError("artinian ideal with a single z-generator must contain a pure z power")
    return MonomialIdeal2((g.x, g.y) for g in j.generators if not g.z), zgen.z


def wlp_for_large_char(ideal: MonomialIdeal3, p: int) -> bool:
    """WLP in characteristic ``p`` when ``p >= reg(S/J)`` (or ``p = 0``).

    Requires exactly one generator involving some variable; returns whether
    the implication held (vacuously true for smaller ``p``).
    """
    split_single_z(ideal)
    _check_char(p)
    if p != 0 and p < ideal.reg:
        return True
    return has_wlp3(ideal, p).verdict


def cokernel_bridge_verdicts(ideal: MonomialIdeal2, t: int, d: int, primes: Iterable[int]) -> dict[int, tuple[bool, bool]]:
    """``{p: (bivariate maximal rank, trivariate maximal rank)}`` for the two maps.

    The bivariate map is ``x (x+y)^t: [R/I]_d -> [R/I]_{d+t}``; the trivariate
    one is ``x (x+y+z)`` on ``S/(I + (z^t))`` from degree ``d+t-1`` to ``d+t``.
    """
    ideal.require_artinian()
    if t < 1 or d < 0:
        raise PreconditionFailed("need t >= 1 and d >= 0")
    src = ideal.standard_xexps(d)
    dst = ideal.standard_xexps(d + t)
    mat2 = [[binom(t, b - a) for b in dst] for a in src]
    j = MonomialIdeal3.from_bivariate(ideal, t)
    h = j.hilbert
    e = d + t - 1
    want3 = min(h[e] if e < len(h) else 0, h[e + 1] if e + 1 < len(h) else 0)
    mat3 = wlp3_matrix(j, e)
    out = {}
    for p in primes:
        _check_char(p)
        out[p] = (_rank(mat2, p) == min(len(src), len(dst)), _rank(mat3, p) == want3)
    return out


def cokernel_bridge(ideal: MonomialIdeal2, t: int, d: int, p: int) -> bool:
    """Whether the bivariate ``(x+y)^t`` map and the trivariate ``x+y+z`` map agree on maximal rank mod ``p``."""
    ok2, ok3 = cokernel_bridge_verdicts(ideal, t, d, [p])[p]
    return ok2 == ok3
