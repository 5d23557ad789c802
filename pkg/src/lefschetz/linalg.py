"""Exact linear algebra: integer determinants, ranks over prime fields and over ``F_p(c)``.

Matrices are plain lists of rows.  Nothing here uses floating point.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

Matrix = Sequence[Sequence[int]]


def bareiss_det(matrix: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination over the integers."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - f * rk[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank_integer(matrix: Matrix) -> int:
    """Rank over the rationals by fraction-free elimination."""
    a = [list(map(int, row)) for row in matrix]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            f = a[i][c]
            ri = a[i]
            for j in range(c, cols):
                ri[j] = (p * ri[j] - f * a[r][j]) // prev
        prev = p
        r += 1
        if r == rows:
            break
    return r


def rank_mod_p(matrix: Matrix, p: int) -> int:
    """Rank over ``F_p`` by Gaussian elimination (small dense matrices)."""
    if p == 0:
        return rank_integer(matrix)
    a = [[v % p for v in row] for row in matrix]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        rr = a[r]
        inv = pow(rr[c], -1, p)
        for j in range(c, cols):
            rr[j] = rr[j] * inv % p
        for i in range(r + 1, rows):
            f = a[i][c]
            if f:
                ri = a[i]
                for j in range(c, cols):
                    ri[j] = (ri[j] - f * rr[j]) % p
        r += 1
        if r == rows:
            break
    return r


def rank_mod_p_np(matrix, p: int) -> int:
    """Rank over ``F_p`` for ``p < 2**31`` using vectorised row operations."""
    a = np.array(matrix, dtype=np.int64) % p
    if a.size == 0:
        return 0
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        below = a[r + 1:, c].copy()
        idx = np.nonzero(below)[0]
        if idx.size:
            a[r + 1 + idx] = (a[r + 1 + idx] - np.outer(below[idx], a[r])) % p
        r += 1
        if r == rows:
            break
    return r


def det_mod_p_np(matrix, p: int) -> int:
    """Determinant in ``F_p`` (``p < 2**31``), returned in ``[0, p)``."""
    a = np.array(matrix, dtype=np.int64) % p
    n = a.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + nz[0]
        if piv != c:
            a[[c, piv]] = a[[piv, c]]
            det = -det
        pv = int(a[c, c])
        det = det * pv % p
        a[c, c:] = a[c, c:] * pow(pv, -1, p) % p
        below = a[c + 1:, c].copy()
        idx = np.nonzero(below)[0]
        if idx.size:
            a[c + 1 + idx, c:] = (a[c + 1 + idx, c:] - np.outer(below[idx], a[c, c:])) % p
    return det % p


# -- univariate polynomials over F_p, coefficient lists low degree first ----


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim([v % p for v in out])


def poly_sub(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)]
    return _trim(out)


def poly_exact_div(f: list[int], g: list[int], p: int) -> list[int]:
    """Quotient ``f / g`` in ``F_p[c]``; raises if the division is not exact."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - dg, 0)
    for k in range(len(f) - 1, dg - 1, -1):
        coef = f[k] * inv % p
        if coef:
            q[k - dg] = coef
            for j in range(dg + 1):
                f[k - dg + j] = (f[k - dg + j] - coef * g[j]) % p
    if any(_trim(f)):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def rank_poly_mod_p(matrix: Sequence[Sequence[list[int]]], p: int) -> int:
    """Rank over the rational function field ``F_p(c)``.

    Entries are polynomials in ``c`` (coefficient lists).  Fraction-free
    elimination keeps every entry a minor of the input, so each division by
    the previous pivot is exact.
    """
    a = [[_trim([v % p for v in e]) for e in row] for row in matrix]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    prev = [1]
    for c in range(cols):
        # lowest-degree pivot keeps intermediate degrees small
        cands = [i for i in range(r, rows) if a[i][c]]
        if not cands:
            continue
        piv = min(cands, key=lambda i: len(a[i][c]))
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pv = pr[c]
        for i in range(r + 1, rows):
            ri = a[i]
            f = ri[c]
            for j in range(c + 1, cols):
                val = poly_sub(poly_mul(pv, ri[j], p), poly_mul(f, pr[j], p), p)
                ri[j] = poly_exact_div(val, prev, p) if val else []
            ri[c] = []
        prev = pv
        r += 1
        if r == rows:
            break
    return r
