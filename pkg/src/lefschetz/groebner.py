"""Bivariate polynomial ideals: Gröbner bases and Lefschetz checks for non-monomial ideals.

Polynomials are dictionaries ``{(i, j): coefficient}`` for ``x^i y^j``.
Terms are ordered by degree, then by the x-exponent (x > y); on homogeneous
input this is plain lex.  Coefficients are ints mod ``p`` or ``Fraction``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Iterable

from sympy import isprime

from .errors import NotArtinian, NotPrime, ParseError, PreconditionFailed
from .ideal import Monomial2, MonomialIdeal2
from .linalg import rank_mod_p, rank_poly_mod_p
from .parsing import parse_terms, split_generators

Exps = tuple[int, int]


def _key(m: Exps) -> tuple[int, int]:
    return (m[0] + m[1], m[0])


@dataclass(frozen=True)
class FieldSpec:
    """A prime field ``F_p`` (``p`` set) or the rationals (``p = 0``)."""

    p: int = 0

    def __post_init__(self):
        if self.p and not (1 < self.p < 2**31 and isprime(self.p)):
            raise NotPrime(f"{self.p} is not a prime below 2^31")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __call__(self, value) -> int | Fraction:
        if self.p == 0:
            return Fraction(value)
        q = Fraction(value)
        if q.denominator % self.p == 0:
            raise ParseError(f"coefficient {q} is undefined mod {self.p}", token=str(q))
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def norm(self, value):
        return value % self.p if self.p else value

    def inv(self, value):
        return pow(value, -1, self.p) if self.p else 1 / value

    def __str__(self) -> str:
        return f"GF({self.p})" if self.p else "QQ"


class BivariatePoly:
    """Immutable polynomial in ``x, y`` over a :class:`FieldSpec`."""

    __slots__ = ("terms", "field")

    def __init__(self, terms: dict[Exps, object], field: FieldSpec):
        clean = {}
        for m, c in terms.items():
            c = field.norm(c)
            if c:
                clean[m] = c
        self.terms = dict(sorted(clean.items(), key=lambda kv: _key(kv[0]), reverse=True))
        self.field = field

    @classmethod
    def parse(cls, text: str, field: FieldSpec) -> "BivariatePoly":
        terms: dict[Exps, object] = {}
        for coeff, exps in parse_terms(text, "xy"):
            terms[exps] = terms.get(exps, 0) + field(coeff)
        return cls(terms, field)

    @classmethod
    def monomial(cls, m: Exps, field: FieldSpec) -> "BivariatePoly":
        return cls({m: 1}, field)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lead(self) -> Exps:
        return next(iter(self.terms))

    @property
    def lead_coeff(self):
        return self.terms[self.lead]

    def is_homogeneous(self) -> bool:
        return len({a + b for a, b in self.terms}) <= 1

    def monic(self) -> "BivariatePoly":
        inv = self.field.inv(self.lead_coeff)
        return BivariatePoly({m: c * inv for m, c in self.terms.items()}, self.field)

    def shift(self, m: Exps, coeff=1) -> "BivariatePoly":
        return BivariatePoly(
            {(a + m[0], b + m[1]): c * coeff for (a, b), c in self.terms.items()}, self.field
        )

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return BivariatePoly(out, self.field)

    def __eq__(self, other) -> bool:
        return isinstance(other, BivariatePoly) and self.terms == other.terms and self.field == other.field

    def __hash__(self) -> int:
        return hash((tuple(self.terms.items()), self.field))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in self.terms.items():
            if self.field.p and c > self.field.p // 2:
                c = c - self.field.p
            mono = str(Monomial2(a, b))
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono if mag == 1 and mono != "1" else (f"{mag}" if mono == "1" else f"{mag}*{mono}")
            parts.append((sign, body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    def __repr__(self) -> str:
        return f"BivariatePoly({str(self)!r}, {self.field})"


def parse_polys(text: str, field: FieldSpec) -> list[BivariatePoly]:
    return [BivariatePoly.parse(g, field) for g in split_generators(text)]


def _divides(m: Exps, n: Exps) -> bool:
    return m[0] <= n[0] and m[1] <= n[1]


def reduce(f: BivariatePoly, basis: list[BivariatePoly], full: bool = True) -> BivariatePoly:
    """Remainder of ``f`` on division by ``basis`` (every term when ``full``)."""
    field = f.field
    rem: dict[Exps, object] = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=_key)
        c = work.pop(m)
        g = next((g for g in basis if _divides(g.lead, m)), None)
        if g is None:
            if not full:
                rem[m] = c
                rem.update(work)
                break
            rem[m] = c
            continue
        factor = c * field.inv(g.lead_coeff)
        sa, sb = m[0] - g.lead[0], m[1] - g.lead[1]
        for (a, b), gc in list(g.terms.items())[1:]:
            n = (a + sa, b + sb)
            v = field.norm(work.get(n, 0) - factor * gc)
            if v:
                work[n] = v
            else:
                work.pop(n, None)
    return BivariatePoly(rem, field)


def s_polynomial(f: BivariatePoly, g: BivariatePoly) -> BivariatePoly:
    l = (max(f.lead[0], g.lead[0]), max(f.lead[1], g.lead[1]))
    fa = f.shift((l[0] - f.lead[0], l[1] - f.lead[1]), f.field.inv(f.lead_coeff))
    ga = g.shift((l[0] - g.lead[0], l[1] - g.lead[1]), g.field.inv(g.lead_coeff))
    return fa - ga


@dataclass(frozen=True)
class GroebnerBasis2:
    basis: tuple[BivariatePoly, ...]
    field: FieldSpec

    @cached_property
    def leading_ideal(self) -> MonomialIdeal2:
        return MonomialIdeal2(Monomial2(*g.lead) for g in self.basis)

    def normal_form(self, f: BivariatePoly) -> BivariatePoly:
        return reduce(f, list(self.basis))

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.basis) + ")"


def buchberger(gens: Iterable[BivariatePoly], field: FieldSpec | None = None) -> GroebnerBasis2:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    The result is checked for reducedness and closure under S-polynomials
    before it is returned.
    """
    polys = [g for g in gens]
    if field is None:
        if not polys:
            raise PreconditionFailed("no generators and no field")
        field = polys[0].field
    if any(g.is_zero() for g in polys):
        raise PreconditionFailed("generators must be nonzero")
    basis = [g.monic() for g in polys]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        # smallest lcm first
        pairs.sort(key=lambda ij: _key(_lcm(basis[ij[0]].lead, basis[ij[1]].lead)), reverse=True)
        i, j = pairs.pop()
        f, g = basis[i], basis[j]
        if _coprime(f.lead, g.lead):
            continue
        r = reduce(s_polynomial(f, g), basis)
        if not r.is_zero():
            basis.append(r.monic())
            k = len(basis) - 1
            pairs.extend((i2, k) for i2 in range(k))
    reduced = _interreduce(basis)
    _check_closed(reduced)
    return GroebnerBasis2(tuple(reduced), field)


def _lcm(a: Exps, b: Exps) -> Exps:
    return (max(a[0], b[0]), max(a[1], b[1]))


def _coprime(a: Exps, b: Exps) -> bool:
    return min(a[0], b[0]) == 0 and min(a[1], b[1]) == 0


def _interreduce(basis: list[BivariatePoly]) -> list[BivariatePoly]:
    # drop elements whose leading term is divisible by another leading term
    keep: list[BivariatePoly] = []
    for g in sorted(basis, key=lambda g: _key(g.lead)):
        if not any(_divides(h.lead, g.lead) for h in keep):
            keep.append(g)
    out = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        out.append(reduce(g, others).monic())
    # ascending degree, x-heavy first within a degree
    return sorted(out, key=lambda g: (sum(g.lead), -g.lead[0]))


def _check_closed(basis: list[BivariatePoly]) -> None:
    leads = [g.lead for g in basis]
    for g in basis:
        if g.lead_coeff != 1:
            raise AssertionError("basis element is not monic")
        for m in list(g.terms)[1:]:
            if any(_divides(l, m) for l in leads):
                raise AssertionError(f"{g} is not fully reduced")
    for j in range(len(basis)):
        for i in range(j):
            if not reduce(s_polynomial(basis[i], basis[j]), basis).is_zero():
                raise AssertionError("S-polynomial does not reduce to zero")


def initial_ideal(gb: GroebnerBasis2) -> MonomialIdeal2:
    return gb.leading_ideal


def is_artinian_poly(gb: GroebnerBasis2) -> bool:
    return gb.leading_ideal.is_artinian


def quotient_basis(gb: GroebnerBasis2, d: int) -> tuple[Monomial2, ...]:
    """Standard monomials of degree ``d``, descending in lex."""
    return tuple(reversed(gb.leading_ideal.standard_monomials(d)))


def quotient_hilbert(gb: GroebnerBasis2) -> tuple[int, ...]:
    if not is_artinian_poly(gb):
        raise NotArtinian(f"{gb} does not define an artinian quotient")
    ideal = gb.leading_ideal
    return tuple(len(quotient_basis(gb, d)) for d in range(ideal.reg + 1))


# -- Lefschetz checks with a generic linear form ----------------------------


def _check_prime(p: int) -> None:
    if not (p > 1 and isprime(p)):
        raise NotPrime(f"{p} is not a prime")


def _required_pairs(h: tuple[int, ...]) -> list[tuple[int, int]]:
    """Degree pairs whose maximal rank implies maximal rank everywhere.

    ``h`` rises strictly then never rises again.  Given all ``t = 1`` maps,
    injectivity descends in ``t`` and surjectivity ascends once past the
    peak, so for each ``d`` it is enough to test the last ``t`` with
    ``h(d+t) >= h(d)`` and the first ``t`` with ``h(d+t) <= h(d)``.
    """
    reg = len(h) - 1
    pairs = {(d, 1) for d in range(reg)}
    for d in range(reg):
        ts = range(1, reg - d + 1)
        up = [t for t in ts if h[d + t] >= h[d]]
        down = [t for t in ts if h[d + t] <= h[d]]
        if up:
            pairs.add((d, max(up)))
        if down:
            pairs.add((d, min(down)))
    return sorted(pairs)


class _NormalForms:
    """Memoised normal forms of monomials, as coordinate dicts over the standard basis."""

    def __init__(self, gb: GroebnerBasis2):
        self.gb = gb
        self.cache: dict[Exps, dict[Exps, int]] = {}

    def __call__(self, m: Exps) -> dict[Exps, int]:
        if m not in self.cache:
            nf = self.gb.normal_form(BivariatePoly.monomial(m, self.gb.field))
            self.cache[m] = dict(nf.terms)
        return self.cache[m]


@dataclass(frozen=True)
class RankCertificate:
    d: int
    t: int
    rows: int
    cols: int
    rank: int
    method: str  # "specialization" or "function-field"

    @property
    def maximal(self) -> bool:
        return self.rank == min(self.rows, self.cols)


def _poly_matrix(nf: _NormalForms, src, dst, t: int, p: int, swap: bool) -> list[list[list[int]]]:
    """Matrix of ``x (l_c)^t`` with entries in ``F_p[c]``.

    ``l_c = x + c*y``, or ``y + c*x`` when ``swap``.
    """
    col = {(b.xexp, b.yexp): j for j, b in enumerate(dst)}
    rows = []
    for m in src:
        row = [[0] * (t + 1) for _ in dst]
        for k in range(t + 1):
            step = (k, t - k) if swap else (t - k, k)
            coef = comb(t, k) % p
            if not coef:
                continue
            for n, c in nf((m.xexp + step[0], m.yexp + step[1])).items():
                row[col[n]][k] = (row[col[n]][k] + coef * c) % p
        rows.append(row)
    return rows


def _rank_generic(matrix: list[list[list[int]]], p: int) -> tuple[int, str]:
    if not matrix or not matrix[0]:
        return 0, "specialization"
    full = min(len(matrix), len(matrix[0]))
    best = 0
    for c in range(p):
        spec = [[sum(v * pow(c, k, p) for k, v in enumerate(e)) % p for e in row] for row in matrix]
        best = max(best, rank_mod_p(spec, p))
        if best == full:
            return full, "specialization"
    return rank_poly_mod_p(matrix, p), "function-field"


def generic_rank_certificates(gb: GroebnerBasis2, swap: bool = False) -> list[RankCertificate]:
    """Ranks over ``F_p(c)`` of ``x l_c^t`` on every required degree pair.

    A specialization ``c`` in ``F_p`` reaching full rank is an exact
    certificate; otherwise the rank is computed over the function field.
    """
    p = gb.field.p
    h = quotient_hilbert(gb)
    nf = _NormalForms(gb)
    certs = []
    for d, t in _required_pairs(h):
        src = quotient_basis(gb, d)
        dst = quotient_basis(gb, d + t)
        mat = _poly_matrix(nf, src, dst, t, p, swap)
        rank, how = _rank_generic(mat, p)
        certs.append(RankCertificate(d, t, len(src), len(dst), rank, how))
    return certs


def has_slp_generic(gens, p: int) -> bool:
    """SLP over the algebraic closure of ``F_p`` for the ideal generated by ``gens``.

    ``gens`` is a generator string or a sequence of polynomials.  The form
    ``x + c*y`` is tested with ``c`` transcendental; if it fails, ``y + c*x``
    is tested too and must fail as well.
    """
    _check_prime(p)
    field = FieldSpec(p)
    polys = parse_polys(gens, field) if isinstance(gens, str) else [_to_field(g, field) for g in gens]
    gb = buchberger(polys, field)
    if not is_artinian_poly(gb):
        raise NotArtinian(f"ideal is not artinian over {field}")
    if all(c.maximal for c in generic_rank_certificates(gb)):
        return True
    if all(c.maximal for c in generic_rank_certificates(gb, swap=True)):
        raise AssertionError("x + cy and y + cx disagree generically")
    return False


def _to_field(g: BivariatePoly, field: FieldSpec) -> BivariatePoly:
    if g.field == field:
        return g
    return BivariatePoly({m: field(c) for m, c in g.terms.items()}, field)


def slp_via_initial(gens, field: FieldSpec) -> bool | None:
    """``True`` when the initial ideal is lexsegment; ``None`` (inconclusive) otherwise.

    Only the direction "initial ideal has SLP implies the ideal has SLP" is
    available, so a non-lexsegment initial ideal decides nothing.
    """
    polys = parse_polys(gens, field) if isinstance(gens, str) else [_to_field(g, field) for g in gens]
    gb = buchberger(polys, field)
    if not is_artinian_poly(gb):
        raise NotArtinian(f"ideal is not artinian over {field}")
    return True if gb.leading_ideal.is_lexsegment() else None
