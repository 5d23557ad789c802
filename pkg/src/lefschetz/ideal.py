"""Bivariate monomials and monomial ideals of ``K[x, y]``.

Monomials are compared lexicographically with ``x > y``, degree first; in two
variables this coincides with reverse lexicographic order.  Inside a fixed
degree a monomial is determined by its x-exponent, so most routines work with
x-exponents directly.
"""
from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property, total_ordering
from typing import Iterable, Iterator

from .errors import NotArtinian
from .parsing import parse_exponents, split_generators


@total_ordering
@dataclass(frozen=True)
class Monomial2:
    xexp: int
    yexp: int

    def __post_init__(self):
        if self.xexp < 0 or self.yexp < 0:
            raise ValueError(f"negative exponent in ({self.xexp}, {self.yexp})")

    @property
    def degree(self) -> int:
        return self.xexp + self.yexp

    def sort_key(self) -> tuple[int, int]:
        return (self.degree, self.xexp)

    def __lt__(self, other: "Monomial2") -> bool:
        return self.sort_key() < other.sort_key()

    def divides(self, other: "Monomial2") -> bool:
        return self.xexp <= other.xexp and self.yexp <= other.yexp

    def __mul__(self, other: "Monomial2") -> "Monomial2":
        return Monomial2(self.xexp + other.xexp, self.yexp + other.yexp)

    def swap(self) -> "Monomial2":
        return Monomial2(self.yexp, self.xexp)

    def __str__(self) -> str:
        parts = []
        for var, e in (("x", self.xexp), ("y", self.yexp)):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return "*".join(parts) or "1"

    @classmethod
    def parse(cls, text: str) -> "Monomial2":
        return cls(*parse_exponents(text, "xy"))


def minimalize(raw_generators: Iterable[Monomial2]) -> tuple[Monomial2, ...]:
    """Divisibility antichain generating the same ideal, ascending lex."""
    gens: list[Monomial2] = []
    for m in sorted(set(raw_generators)):
        # sorted by degree, so a divisor of m is always seen before m
        if not any(g.divides(m) for g in gens):
            gens.append(m)
    return tuple(sorted(gens))


@dataclass(frozen=True)
class HilbertFunction:
    values: tuple[int, ...]
    reg: int
    indeg: int | None  # None for the zero ideal

    def __call__(self, d: int) -> int:
        if d < 0:
            return 0
        return self.values[d] if d < len(self.values) else 0


@dataclass(frozen=True)
class WidthFunction:
    values: tuple[int, ...]
    m: int  # first degree with nonzero width

    def __call__(self, d: int) -> int:
        if d < len(self.values):
            return self.values[d]
        return d + 1  # past the regularity both pure powers lie in I


class MonomialIdeal2:
    """A monomial ideal of ``K[x, y]`` kept as its minimal generating set.

    Instances are immutable; derived data is computed on first use.
    """

    def __init__(self, generators: Iterable[Monomial2 | tuple[int, int]] = ()):
        gens = (g if isinstance(g, Monomial2) else Monomial2(*g) for g in generators)
        object.__setattr__(self, "generators", minimalize(gens))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal2 is immutable")

    @classmethod
    def parse(cls, text: str) -> "MonomialIdeal2":
        return cls(Monomial2.parse(tok) for tok in split_generators(text))

    @classmethod
    def from_staircase(cls, heights: Iterable[int]) -> "MonomialIdeal2":
        """Build the artinian ideal whose standard monomials are ``x^a y^b`` with ``b < heights[a]``.

        ``heights`` must be weakly decreasing and positive; the x-power closing
        the staircase is added automatically.
        """
        heights = list(heights)
        gens = []
        prev = None
        for a, hgt in enumerate(heights):
            if prev is None or hgt < prev:
                gens.append(Monomial2(a, hgt))
            prev = hgt
        gens.append(Monomial2(len(heights), 0))
        return cls(gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal2) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"MonomialIdeal2({str(self)!r})"

    def __str__(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __iter__(self) -> Iterator[Monomial2]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    # -- membership ------------------------------------------------------

    @cached_property
    def _by_x(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        gens = sorted(self.generators, key=lambda g: g.xexp)
        return tuple(g.xexp for g in gens), tuple(g.yexp for g in gens)

    def ymin(self, a: int) -> int | None:
        """Smallest ``b`` with ``x^a y^b`` in the ideal, or ``None``."""
        xs, ys = self._by_x
        k = bisect_right(xs, a)
        return ys[k - 1] if k else None

    def contains_exps(self, a: int, b: int) -> bool:
        yb = self.ymin(a)
        return yb is not None and b >= yb

    def __contains__(self, m: Monomial2) -> bool:
        return self.contains_exps(m.xexp, m.yexp)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == (Monomial2(0, 0),)

    @cached_property
    def is_artinian(self) -> bool:
        return any(g.yexp == 0 for g in self.generators) and any(
            g.xexp == 0 for g in self.generators
        )

    def require_artinian(self) -> None:
        if not self.is_artinian:
            raise NotArtinian(f"{self} contains no pure power of x or of y")

    @property
    def indeg(self) -> int | None:
        return min((g.degree for g in self.generators), default=None)

    @property
    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    # -- slices ----------------------------------------------------------

    def slice_xexps(self, d: int) -> tuple[int, ...]:
        """Ascending x-exponents ``a`` with ``x^a y^(d-a)`` in the ideal."""
        return tuple(a for a in range(d + 1) if self.contains_exps(a, d - a))

    def standard_xexps(self, d: int) -> tuple[int, ...]:
        """Ascending x-exponents of the degree-``d`` monomials outside the ideal."""
        return tuple(a for a in range(d + 1) if not self.contains_exps(a, d - a))

    def degree_slice(self, d: int) -> tuple[Monomial2, ...]:
        return tuple(Monomial2(a, d - a) for a in self.slice_xexps(d))

    def standard_monomials(self, d: int) -> tuple[Monomial2, ...]:
        return tuple(Monomial2(a, d - a) for a in self.standard_xexps(d))

    def width_at(self, d: int) -> int:
        """Width in degree ``d``; valid for non-artinian ideals too."""
        sl = self.slice_xexps(d)
        return sl[-1] - sl[0] + 1 if sl else 0

    # -- numerical invariants --------------------------------------------

    @cached_property
    def _hilbert(self) -> HilbertFunction:
        self.require_artinian()
        if self.is_unit:
            return HilbertFunction((), -1, 0)
        xpure = self._by_x[0][-1]
        # standard monomials x^a y^b with b < ymin(a); ymin(a) is finite since y^k is in I
        vals: list[int] = []
        for a in range(xpure):
            top = self.ymin(a)
            for b in range(top):
                d = a + b
                while len(vals) <= d:
                    vals.append(0)
                vals[d] += 1
        return HilbertFunction(tuple(vals), len(vals) - 1, self.indeg)

    def hilbert_function(self) -> HilbertFunction:
        return self._hilbert

    @property
    def reg(self) -> int:
        return self._hilbert.reg

    @cached_property
    def _width(self) -> WidthFunction:
        hf = self._hilbert
        vals = tuple(self.width_at(d) for d in range(hf.reg + 1))
        m = next((d for d, v in enumerate(vals) if v), hf.reg + 1)
        return WidthFunction(vals, m)

    def width_function(self) -> WidthFunction:
        return self._width

    def lex_defect(self, d: int) -> int:
        """Monomials outside the ideal strictly inside its degree-``d`` span."""
        # w(d) + h(d) - (d+1) with h(d) = d + 1 - |slice|
        return self.width_at(d) - len(self.slice_xexps(d))

    def is_lexsegment_in_degree(self, d: int) -> bool:
        sl = self.slice_xexps(d)
        return not sl or sl[-1] - sl[0] + 1 == len(sl)

    def is_lexsegment(self) -> bool:
        # past the largest generator degree every slice is the shift of an interval
        return all(
            self.is_lexsegment_in_degree(d) for d in range(self.max_generator_degree + 1)
        )

    def is_initial_lexsegment(self) -> bool:
        return self.is_lexsegment() and all(
            self.contains_exps(d, 0)
            for d in range(self.max_generator_degree + 1)
            if self.slice_xexps(d)
        )

    def swap(self) -> "MonomialIdeal2":
        return MonomialIdeal2(g.swap() for g in self.generators)

    def staircase(self) -> tuple[int, ...]:
        """Column heights ``ymin(a)`` for ``a`` below the pure x-power."""
        self.require_artinian()
        xs, _ = self._by_x
        return tuple(self.ymin(a) for a in range(xs[-1]))


def hilbert_function(ideal: MonomialIdeal2) -> HilbertFunction:
    return ideal.hilbert_function()


def width_function(ideal: MonomialIdeal2) -> WidthFunction:
    return ideal.width_function()


def degree_slice(ideal: MonomialIdeal2, d: int) -> tuple[Monomial2, ...]:
    return ideal.degree_slice(d)


def is_lexsegment_in_degree(ideal: MonomialIdeal2, d: int) -> bool:
    return ideal.is_lexsegment_in_degree(d)


def lex_defect(ideal: MonomialIdeal2, d: int) -> int:
    return ideal.lex_defect(d)


def ideal_from_slices(slices: dict[int, Iterable[int]], closing_degree: int) -> MonomialIdeal2:
    """Ideal generated by prescribed degree slices (given as x-exponents) plus all of degree ``closing_degree``."""
    gens = [Monomial2(a, d - a) for d, xs in slices.items() for a in xs]
    gens += [Monomial2(a, closing_degree - a) for a in range(closing_degree + 1)]
    return MonomialIdeal2(gens)


# -- enumeration ---------------------------------------------------------


def iter_staircases(max_reg: int) -> Iterator[tuple[int, ...]]:
    """All weakly decreasing positive column-height sequences of artinian ideals with ``reg <= max_reg``."""

    def extend(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        a = len(prefix)
        cap = min(prefix[-1], max_reg + 1 - a)
        for hgt in range(cap, 0, -1):
            prefix.append(hgt)
            yield from extend(prefix)
            prefix.pop()

    for h0 in range(max_reg + 1, 0, -1):
        yield from extend([h0])


def iter_artinian_ideals(max_reg: int) -> Iterator[MonomialIdeal2]:
    """Every artinian monomial ideal of ``K[x, y]`` (other than the unit ideal) with ``reg <= max_reg``."""
    for heights in iter_staircases(max_reg):
        yield MonomialIdeal2.from_staircase(heights)


def random_artinian_ideal(rng: random.Random, max_reg: int) -> MonomialIdeal2:
    """A pseudo-random artinian ideal with ``reg <= max_reg``, drawn from ``rng``."""
    width = rng.randint(1, max_reg + 1)
    heights = []
    prev = max_reg + 1
    for a in range(width):
        cap = min(prev, max_reg + 1 - a)
        if cap < 1:
            break
        hgt = rng.randint(1, cap)
        heights.append(hgt)
        prev = hgt
    return MonomialIdeal2.from_staircase(heights)


def iter_box_ideals(n: int) -> Iterator[MonomialIdeal2]:
    """Every monomial ideal other than ``(1)`` that contains ``x^n`` and ``y^n``."""

    def extend(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        if len(prefix) < n:
            for hgt in range(prefix[-1], 0, -1):
                prefix.append(hgt)
                yield from extend(prefix)
                prefix.pop()

    for h0 in range(n, 0, -1):
        for heights in extend([h0]):
            yield MonomialIdeal2.from_staircase(heights)
