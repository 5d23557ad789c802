"""Macaulay expansions, valid Hilbert and width sequences, lexsegment constructions.

Sequences are finite prefixes ``(f(0), ..., f(r))``.  A Hilbert sequence is
extended by zeros; a width sequence is extended by ``w(d) = d + 1``, which is
what every artinian quotient has past its regularity.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import ForcingHolds, InvalidHilbert, InvalidWidth
from .ideal import MonomialIdeal2, ideal_from_slices


@dataclass(frozen=True)
class MacaulayExpansion:
    d: int
    terms: tuple[tuple[int, int], ...]  # (a_i, i), i descending from d

    @property
    def value(self) -> int:
        return sum(comb(a, i) for a, i in self.terms)

    def upper(self) -> int:
        return sum(comb(a + 1, i + 1) for a, i in self.terms)


def macaulay_expansion(a: int, d: int) -> MacaulayExpansion:
    """Greedy binomial expansion ``a = C(a_d, d) + ... + C(a_k, k)``."""
    if a < 1 or d < 1:
        raise ValueError("macaulay_expansion needs a >= 1 and d >= 1")
    terms = []
    rest = a
    i = d
    while rest > 0:
        top = i
        while comb(top + 1, i) <= rest:
            top += 1
        terms.append((top, i))
        rest -= comb(top, i)
        i -= 1
    return MacaulayExpansion(d, tuple(terms))


def macaulay_upper(a: int, d: int) -> int:
    """The growth bound ``a^<d>``; ``0^<d> = 0``."""
    if d < 1:
        raise ValueError("d must be positive")
    return 0 if a == 0 else macaulay_expansion(a, d).upper()


def satisfies_macaulay(h: Sequence[int]) -> bool:
    """``h(0) = 1`` and ``h(d+1) <= h(d)^<d>`` for every ``d >= 1``, in any number of variables."""
    if not h or h[0] != 1 or any(v < 0 for v in h):
        return False
    return all(h[d + 1] <= macaulay_upper(h[d], d) for d in range(1, len(h) - 1))


def is_valid_hilbert(h: Sequence[int]) -> bool:
    """Whether ``h`` (followed by zeros) is the Hilbert function of a quotient of ``K[x, y]``."""
    if not h or h[0] != 1 or any(v < 0 for v in h):
        return False
    d = 0
    while d + 1 < len(h) and h[d + 1] == d + 2:
        d += 1
    return all(h[j] >= h[j + 1] for j in range(d, len(h) - 1))


def is_valid_width(w: Sequence[int]) -> bool:
    """Whether ``w`` is the width sequence of some monomial ideal of ``K[x, y]``."""
    if not w or any(v < 0 for v in w):
        return False
    if all(v == d + 1 for d, v in enumerate(w)):
        return True
    if w[0] != 0:
        return False
    m = next((d for d, v in enumerate(w) if v), None)
    if m is None:
        return True
    if w[m] > m + 1:
        return False
    return all(1 <= w[d] < w[d + 1] <= d + 2 for d in range(m, len(w) - 1))


def _strip_zeros(h: Sequence[int]) -> list[int]:
    h = list(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return h


def _lex_slices(sizes: Sequence[int]) -> dict[int, range]:
    # top `k` monomials of degree d are x^d, x^(d-1)y, ...
    return {d: range(d - k + 1, d + 1) for d, k in enumerate(sizes) if k}


def lex_ideal_from_hilbert(h: Sequence[int]) -> MonomialIdeal2:
    """The initial lexsegment ideal with Hilbert function ``h``."""
    if not is_valid_hilbert(h):
        raise InvalidHilbert(f"{tuple(h)} is not a Hilbert function of a quotient of K[x,y]")
    h = list(h)
    sizes = [d + 1 - v for d, v in enumerate(h)]
    return ideal_from_slices(_lex_slices(sizes), len(h))


def lex_ideal_from_width(w: Sequence[int]) -> MonomialIdeal2:
    """The initial lexsegment ideal whose width function extends ``w``."""
    if not is_valid_width(w):
        raise InvalidWidth(f"{tuple(w)} is not a width function")
    if all(v == d + 1 for d, v in enumerate(w)):
        return MonomialIdeal2([(0, 0)])
    return ideal_from_slices(_lex_slices(w), len(w))


def _extend_width(w: Sequence[int], length: int) -> list[int]:
    return list(w) + [d + 1 for d in range(len(w), length)]


def _h_violation(h: Sequence[int]) -> int | None:
    ext = list(h) + [0, 0]
    for d in range(len(h)):
        if ext[d] > ext[d + 1] and ext[d + 1] != ext[d + 2]:
            return d
    return None


def _w_violation(w: Sequence[int]) -> int | None:
    ext = _extend_width(w, len(w) + 1)
    for d in range(len(ext) - 1):
        if not 0 <= ext[d + 1] - ext[d] <= 2:
            return d
    return None


def h_forces_lexsegment(h: Sequence[int]) -> bool:
    """Whether every monomial ideal with Hilbert function ``h`` is lexsegment."""
    if not is_valid_hilbert(h):
        raise InvalidHilbert(f"{tuple(h)} is not a valid Hilbert function")
    return _h_violation(h) is None


def w_forces_lexsegment(w: Sequence[int]) -> bool:
    """Whether every monomial ideal with width function ``w`` is lexsegment.

    Jumps are checked for every ``d >= 0``, including the step out of the
    initial run of zeros and the step into the continuation ``d + 1``.
    """
    if not is_valid_width(w):
        raise InvalidWidth(f"{tuple(w)} is not a valid width function")
    return _w_violation(w) is None


def non_lex_witness_from_h(h: Sequence[int]) -> MonomialIdeal2:
    """A monomial ideal with Hilbert function ``h`` that is not lexsegment.

    Starts from the initial lexsegment ideal and, at the first degree ``d``
    with ``h(d) > h(d+1) > h(d+2)``, replaces the smallest monomial of the
    degree ``d+1`` slice by the next smaller monomial.
    """
    if not is_valid_hilbert(h):
        raise InvalidHilbert(f"{tuple(h)} is not a valid Hilbert function")
    d = _h_violation(h)
    if d is None:
        raise ForcingHolds(f"every monomial ideal with h = {tuple(h)} is lexsegment")
    h = _strip_zeros(h)
    sizes = [k + 1 - v for k, v in enumerate(h)]
    slices = {k: list(xs) for k, xs in _lex_slices(sizes).items()}
    b = sizes[d + 1]
    # B = {x^(d-b+2) y^(b-1), ..., x^(d+1)}; swap its bottom for x^(d-b+1) y^b
    slices[d + 1] = [d - b + 1] + list(range(d - b + 3, d + 2))
    witness = ideal_from_slices(slices, len(h))
    _check_witness(witness, hvals=h)
    return witness


def non_lex_witness_from_w(w: Sequence[int]) -> MonomialIdeal2:
    """A monomial ideal with width function ``w`` that is not lexsegment.

    At the first degree ``d`` with ``w(d+1) - w(d) >= 3`` the second-smallest
    monomial of the lexsegment slice in degree ``d+1`` is removed.
    """
    if not is_valid_width(w):
        raise InvalidWidth(f"{tuple(w)} is not a valid width function")
    d = _w_violation(w)
    if d is None:
        raise ForcingHolds(f"every monomial ideal with w = {tuple(w)} is lexsegment")
    ext = _extend_width(w, max(len(w), d + 2))
    slices = {k: list(xs) for k, xs in _lex_slices(ext).items()}
    top = ext[d + 1]
    slices[d + 1].remove(d - top + 3)
    witness = ideal_from_slices(slices, len(ext))
    _check_witness(witness, wvals=ext)
    return witness


def _check_witness(ideal: MonomialIdeal2, hvals=None, wvals=None) -> None:
    if hvals is not None and list(ideal.hilbert_function().values) != list(hvals):
        raise AssertionError(f"witness {ideal} does not reproduce h = {tuple(hvals)}")
    if wvals is not None:
        got = [ideal.width_at(k) for k in range(len(wvals) + 1)]
        if got != list(wvals) + [len(wvals) + 1]:
            raise AssertionError(f"witness {ideal} does not reproduce w = {tuple(wvals)}")
    if ideal.is_lexsegment():
        raise AssertionError(f"witness {ideal} is lexsegment")
