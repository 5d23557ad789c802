"""Lattice paths in the staircase of a monomial ideal.

The staircase ``L`` holds the points ``(i, j)`` with ``x^i y^j`` outside the
ideal.  Sources sit on ``x + y = d`` and sinks on ``x + y = d + t``.  A path
takes unit steps right or up and so meets every anti-diagonal in between
exactly once; it is stored as the tuple of its x-coordinates, one per level.
Two paths with increasing sources are disjoint iff the second is strictly to
the right of the first on every level.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .errors import ExplosionGuard, NotArtinian, SizeMismatch
from .ideal import MonomialIdeal2
from .maps import build_matrix, det_exact

DEFAULT_CAP = 10**7

Point = tuple[int, int]


@dataclass(frozen=True)
class StaircaseLattice:
    points: frozenset[Point]
    d: int
    t: int
    sources: tuple[Point, ...]
    sinks: tuple[Point, ...]


def build_lattice(ideal: MonomialIdeal2, d: int, t: int) -> StaircaseLattice:
    if not ideal.is_artinian:
        raise NotArtinian(f"{ideal} is not artinian")
    if d < 0 or t < 1:
        raise ValueError("need d >= 0 and t >= 1")
    pts = frozenset(
        (a, b) for a, height in enumerate(ideal.staircase()) for b in range(height)
    )
    sources = tuple((a, d - a) for a in ideal.standard_xexps(d))
    sinks = tuple((b, d + t - b) for b in ideal.standard_xexps(d + t))
    return StaircaseLattice(pts, d, t, sources, sinks)


def path_count(start: Point, end: Point) -> int:
    """Number of right/up lattice paths in ``Z^2`` from ``start`` to ``end``."""
    dx, dy = end[0] - start[0], end[1] - start[1]
    if dx < 0 or dy < 0:
        return 0
    return comb(dx + dy, dx)


def iter_paths(start: Point, end: Point, allowed: frozenset[Point] | None = None) -> Iterator[tuple[int, ...]]:
    """All right/up paths from ``start`` to ``end`` as x-coordinate tuples.

    With ``allowed`` given, every visited point must belong to it.
    """
    dx, dy = end[0] - start[0], end[1] - start[1]
    if dx < 0 or dy < 0:
        return
    level0 = start[0] + start[1]
    steps = dx + dy

    def walk(xs: list[int]) -> Iterator[tuple[int, ...]]:
        k = len(xs) - 1
        x = xs[-1]
        if k == steps:
            yield tuple(xs)
            return
        for nx in (x, x + 1):
            if nx - start[0] > dx or (k + 1) - (nx - start[0]) > dy:
                continue
            if allowed is not None and (nx, level0 + k + 1 - nx) not in allowed:
                continue
            xs.append(nx)
            yield from walk(xs)
            xs.pop()

    if allowed is not None and start not in allowed:
        return
    yield from walk([start[0]])


def count_nilp_families(lattice: StaircaseLattice, cap: int = DEFAULT_CAP) -> int:
    """Number of families of pairwise disjoint paths ``A_i -> E_i`` inside the lattice.

    Families are built source by source; the count of completions depends
    only on the index and the previous path, which is memoised.  ``cap``
    bounds the number of (index, previous path) states expanded.
    """
    src, dst = lattice.sources, lattice.sinks
    if len(src) != len(dst):
        raise SizeMismatch(f"{len(src)} sources but {len(dst)} sinks")
    m = len(src)
    if m == 0:
        return 1
    paths = []
    for a, e in zip(src, dst):
        ps = list(iter_paths(a, e, lattice.points))
        for path in ps:
            level0 = a[0] + a[1]
            if any((x, level0 + k - x) not in lattice.points for k, x in enumerate(path)):
                raise AssertionError("path leaves the staircase")
        paths.append(ps)

    memo: dict[tuple[int, tuple[int, ...]], int] = {}
    states = 0

    def completions(i: int, prev: tuple[int, ...] | None) -> int:
        nonlocal states
        if i == m:
            return 1
        key = (i, prev)
        if key in memo:
            return memo[key]
        states += 1
        if states > cap:
            raise ExplosionGuard(f"more than {cap} partial states")
        total = 0
        for path in paths[i]:
            if prev is None or all(x > y for x, y in zip(path, prev)):
                total += completions(i + 1, path)
        memo[key] = total
        return total

    return completions(0, None)


def lgv_verify(ideal: MonomialIdeal2, d: int, t: int, cap: int = DEFAULT_CAP) -> bool:
    """Whether ``|det N(d, d+t)|`` equals the number of disjoint path families."""
    det = abs(det_exact(build_matrix(ideal, d, t)))
    return det == count_nilp_families(build_lattice(ideal, d, t), cap=cap)


def render_lattice(lattice: StaircaseLattice) -> str:
    """Text grid, top row first: ``A`` source, ``E`` sink, ``.`` standard point, ``#`` in the ideal."""
    if not lattice.points:
        return ""
    width = max(p[0] for p in lattice.points) + 2
    height = max(p[1] for p in lattice.points) + 2
    src, dst = set(lattice.sources), set(lattice.sinks)
    lines = []
    for y in range(height - 1, -1, -1):
        row = []
        for x in range(width):
            pt = (x, y)
            row.append("A" if pt in src else "E" if pt in dst else "." if pt in lattice.points else "#")
        lines.append(f"{y:>3} " + " ".join(row))
    lines.append("    " + " ".join(str(x % 10) for x in range(width)))
    return "\n".join(lines)
