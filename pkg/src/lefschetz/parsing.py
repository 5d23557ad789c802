"""Text syntax for monomials, monomial ideals and polynomials.

Monomials are written ``x^a*y^b`` where ``^1`` and ``*`` may be omitted and
``1`` denotes the unit monomial; ideals are comma-separated lists.
Polynomial terms may carry an integer or rational coefficient, e.g.
``x^2 + y^2, 2*x^3 - 3/2 y^3``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_FACTOR = re.compile(r"\s*\*?\s*([a-z])\s*(?:\^\s*(\d+))?")
_COEFF = re.compile(r"\s*(\d+)(?:\s*/\s*(\d+))?")


def parse_exponents(text: str, variables: str) -> tuple[int, ...]:
    """Parse a single monomial into an exponent tuple over ``variables``."""
    src = text.strip()
    if not src:
        raise ParseError("empty monomial", token=text)
    if src == "1":
        return (0,) * len(variables)
    exps = [0] * len(variables)
    pos = 0
    while pos < len(src):
        m = _FACTOR.match(src, pos)
        if not m:
            raise ParseError(f"cannot parse {src[pos:]!r} in monomial {src!r}", token=src[pos:])
        var, exp = m.group(1), m.group(2)
        if var not in variables:
            raise ParseError(f"unknown variable {var!r} in {src!r}", token=var)
        exps[variables.index(var)] += int(exp) if exp is not None else 1
        pos = m.end()
    return tuple(exps)


def split_generators(text: str) -> list[str]:
    parts = [p.strip() for p in text.strip().strip("()").split(",")]
    if parts == [""]:
        return []
    for p in parts:
        if not p:
            raise ParseError(f"empty generator in {text!r}", token=text)
    return parts


def parse_terms(text: str, variables: str) -> list[tuple[Fraction, tuple[int, ...]]]:
    """Split one polynomial into ``(coefficient, exponents)`` pairs.

    Repeated monomials are returned as separate terms; the caller merges them.
    """
    src = text.replace(" ", "")
    if not src:
        raise ParseError("empty polynomial", token=text)
    # split on +/- that are not at the start
    chunks = re.findall(r"[+-]?[^+-]+", src)
    if "".join(chunks) != src:
        raise ParseError(f"cannot parse polynomial {text!r}", token=text)
    terms = []
    for chunk in chunks:
        sign = -1 if chunk.startswith("-") else 1
        body = chunk.lstrip("+-")
        if not body:
            raise ParseError(f"dangling sign in {text!r}", token=chunk)
        coeff = Fraction(1)
        m = _COEFF.match(body)
        if m:
            coeff = Fraction(int(m.group(1)), int(m.group(2) or 1))
            body = body[m.end():].lstrip("*")
        exps = parse_exponents(body, variables) if body else (0,) * len(variables)
        terms.append((sign * coeff, exps))
    return terms


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").strip("()").split(",") if tok != ""]
    except ValueError as exc:
        bad = next(t for t in text.split(",") if not t.strip().lstrip("-").isdigit())
        raise ParseError(f"not an integer: {bad.strip()!r}", token=bad.strip()) from exc
