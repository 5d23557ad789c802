"""Multiplication by ``(x+y)^t`` between equal-dimensional components of ``K[x,y]/I``.

For a monomial ideal ``I`` and degrees with ``h(d) = h(d+t) = d+1`` the map
``[R/I]_d -> [R/I]_{d+t}`` is a square integer matrix.  Rows are indexed by
the source monomials ``x^i y^(d-i)``, ``i = 0..d``; columns by the x-exponents
``b_0 < ... < b_d`` of the standard monomials of degree ``d+t``.  Entry
``(i, j)`` is ``C(t, b_j - i)``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb, factorial, prod

from sympy import factorint

from .errors import NotSquarePair
from .ideal import Monomial2, MonomialIdeal2
from .linalg import bareiss_det


def binom(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    return comb(n, k) if 0 <= k <= n else 0


def square_pairs(ideal: MonomialIdeal2) -> list[tuple[int, int]]:
    """All ``(d, t)`` with ``t >= 1`` and ``h(d) = h(d+t) = d+1``, sorted."""
    hf = ideal.hilbert_function()
    pairs = []
    for d in range(hf.reg + 1):
        if hf(d) != d + 1:
            break
        for e in range(d + 1, hf.reg + 1):
            if hf(e) == d + 1:
                pairs.append((d, e - d))
    return pairs


def is_square_pair(ideal: MonomialIdeal2, d: int, t: int) -> bool:
    hf = ideal.hilbert_function()
    return d >= 0 and t >= 1 and hf(d) == d + 1 == hf(d + t)


def _require_square(ideal: MonomialIdeal2, d: int, t: int) -> None:
    if not is_square_pair(ideal, d, t):
        raise NotSquarePair(f"h({d}) = h({d + t}) = {d + 1} fails for {ideal}")


@dataclass(frozen=True)
class MultiplicationMatrix:
    d: int
    t: int
    bexps: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return self.d + 1

    def reversed(self) -> tuple[tuple[int, ...], ...]:
        """Rows and columns both reversed (the x<->y reflected ordering)."""
        return tuple(tuple(row[::-1]) for row in self.entries[::-1])

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def build_matrix(ideal: MonomialIdeal2, d: int, t: int) -> MultiplicationMatrix:
    _require_square(ideal, d, t)
    bexps = ideal.standard_xexps(d + t)
    entries = tuple(tuple(binom(t, b - i) for b in bexps) for i in range(d + 1))
    return MultiplicationMatrix(d, t, bexps, entries)


def det_exact(matrix: MultiplicationMatrix) -> int:
    return bareiss_det(matrix.entries)


def _r_s(bexps: tuple[int, ...], d: int, t: int) -> tuple[int, int]:
    r = max([0] + [k + 1 for k, b in enumerate(bexps) if b == k])
    s = min([d] + [k - 1 for k, b in enumerate(bexps) if b == t + k])
    return r, s


@dataclass(frozen=True)
class FactoredDeterminant:
    """``|det N|`` as a product of differences times a ratio of factorials."""

    d: int
    t: int
    r: int
    s: int
    difference_factors: tuple[int, ...]
    factorial_numerators: tuple[int, ...]
    factorial_denominators: tuple[int, ...]
    value: int
    prime_factorization: dict[int, int] = field(hash=False)

    def terms(self) -> list[int]:
        """Every integer appearing in the products (differences and factorial arguments)."""
        return [*self.difference_factors, *self.factorial_numerators, *self.factorial_denominators]

    def largest_term(self) -> tuple[int, int] | None:
        """``(largest term, multiplicity)``, or ``None`` when all products are empty."""
        terms = self.terms()
        if not terms:
            return None
        top = max(terms)
        return top, terms.count(top)

    def factorization_str(self) -> str:
        if self.value == 1:
            return "1"
        return "·".join(
            f"{q}^{e}" if e > 1 else str(q) for q, e in sorted(self.prime_factorization.items())
        )


def _legendre(n: int, q: int) -> int:
    e = 0
    while n:
        n //= q
        e += n
    return e


def closed_form_det(ideal: MonomialIdeal2, d: int, t: int) -> FactoredDeterminant:
    """Evaluate ``|det N(d, d+t)|`` from the positions of the standard monomials.

    With ``r`` the length of the leading run ``b_k = k`` and ``s`` the index
    before the trailing run ``b_k = t + k``, only ``b_r..b_s`` contribute::

        prod_{i<j} (b_{r+j} - b_{r+i}) * prod_i (t+i)! / ((t+s-b_{r+i})! (b_{r+i}-r)!)
    """
    _require_square(ideal, d, t)
    bexps = ideal.standard_xexps(d + t)
    r, s = _r_s(bexps, d, t)
    core = bexps[r:s + 1]
    n = len(core)
    diffs = tuple(core[j] - core[i] for i in range(n) for j in range(i + 1, n))
    nums = tuple(t + i for i in range(n))
    dens = tuple(v for b in core for v in (t + s - b, b - r))

    factorization: Counter[int] = Counter()
    for v in diffs:
        factorization.update(factorint(v))
    primes = set(factorization)
    for v in nums:
        primes.update(factorint(factorial(v)) if v > 1 else ())
    for q in sorted(primes):
        e = factorization[q] + sum(_legendre(v, q) for v in nums) - sum(_legendre(v, q) for v in dens)
        if e < 0:
            raise ArithmeticError(f"closed form is not integral at {q}")
        factorization[q] = e
    factorization = Counter({q: e for q, e in factorization.items() if e})

    numer = prod(diffs) * prod(factorial(v) for v in nums)
    denom = prod(factorial(v) for v in dens)
    value, rem = divmod(numer, denom)
    if rem:
        raise ArithmeticError("closed form is not an integer")
    if prod(q**e for q, e in factorization.items()) != value:
        raise ArithmeticError("factorization does not reproduce the closed form")
    return FactoredDeterminant(d, t, r, s, diffs, nums, dens, value, dict(sorted(factorization.items())))


def reduce_to_hat(ideal: MonomialIdeal2, d: int, t: int) -> tuple[MonomialIdeal2, int, int]:
    """Ideal ``J`` and degree ``d'`` whose matrix ``N_{R/J}(d', d'+t)`` is the central block.

    In degree ``D = t+s-r`` the standard monomials of ``J`` are exactly
    ``x^(b-r) y^(D-b+r)`` for the central ``b = b_r..b_s``; ``J`` is generated
    by the remaining monomials of degree ``D``.
    """
    _require_square(ideal, d, t)
    bexps = ideal.standard_xexps(d + t)
    r, s = _r_s(bexps, d, t)
    top = t + s - r
    keep = {b - r for b in bexps[r:s + 1]}
    gens = [Monomial2(a, top - a) for a in range(top + 1) if a not in keep]
    return MonomialIdeal2(gens), s - r, t


def central_block(matrix: MultiplicationMatrix) -> tuple[int, int, list[list[int]]]:
    """``(r, s, block)`` where ``block`` is rows and columns ``r..s``."""
    r, s = _r_s(matrix.bexps, matrix.d, matrix.t)
    return r, s, [list(row[r:s + 1]) for row in matrix.entries[r:s + 1]]


def is_unimodular(ideal: MonomialIdeal2, d: int, t: int) -> bool:
    """``|det N(d, d+t)| = 1``, checked three independent ways that must agree."""
    _require_square(ideal, d, t)
    by_det = abs(det_exact(build_matrix(ideal, d, t))) == 1
    by_width = ideal.width_at(d + t) == t
    by_lex = ideal.is_lexsegment_in_degree(d + t)
    if not by_det == by_width == by_lex:
        raise AssertionError(
            f"unimodularity criteria disagree for {ideal} at ({d},{t}): "
            f"det={by_det} width={by_width} lex={by_lex}"
        )
    return by_det
