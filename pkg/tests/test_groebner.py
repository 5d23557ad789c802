from __future__ import annotations

from fractions import Fraction

import pytest

from lefschetz.errors import NotArtinian, NotPrime
from lefschetz.groebner import (
    BivariatePoly,
    FieldSpec,
    buchberger,
    has_slp_generic,
    initial_ideal,
    is_artinian_poly,
    parse_polys,
    quotient_basis,
    quotient_hilbert,
    reduce,
    s_polynomial,
    slp_via_initial,
)
from lefschetz.ideal import MonomialIdeal2, iter_artinian_ideals
from lefschetz.slp import has_slp

QQ = FieldSpec.rationals()


def basis_strings(text: str, field: FieldSpec) -> list[str]:
    return [str(g) for g in buchberger(parse_polys(text, field), field).basis]


def test_parsing_and_arithmetic():
    f = BivariatePoly.parse("2*x^2 - 3/2 y^2 + x^2", QQ)
    assert f.terms == {(2, 0): 3, (0, 2): Fraction(-3, 2)}
    g = BivariatePoly.parse("x^2 + 6y^2", FieldSpec(5))
    assert g.terms == {(2, 0): 1, (0, 2): 1}
    with pytest.raises(NotPrime):
        FieldSpec(9)


def test_switching_fields():
    assert basis_strings("x^2 + y^2, x^3 + y^3", QQ) == ["x^2 + y^2", "x*y^2 - y^3", "y^4"]
    gb = buchberger(parse_polys("x^2 + y^2, x^3 + y^3", QQ))
    assert initial_ideal(gb) == MonomialIdeal2.parse("x^2, xy^2, y^4")
    assert initial_ideal(gb).is_lexsegment()
    assert quotient_hilbert(gb) == (1, 2, 2, 1)
    for p in (3, 5, 7):
        gbp = buchberger(parse_polys("x^2 + y^2, x^3 + y^3", FieldSpec(p)))
        assert quotient_hilbert(gbp) == (1, 2, 2, 1)
    assert not is_artinian_poly(buchberger(parse_polys("x^2 + y^2, x^3 + y^3", FieldSpec(2))))


@pytest.mark.parametrize("b", range(2, 9))
def test_first_nonmonomial_family(b):
    for field in (QQ, FieldSpec(2), FieldSpec(3)):
        got = basis_strings(f"x^2, x*y^{b - 1} + y^{b}", field)
        want = ["x^2", str(BivariatePoly.parse(f"x*y^{b - 1} + y^{b}", field)), f"y^{b + 1}"]
        assert got == want


@pytest.mark.parametrize("b", range(3, 9))
def test_second_nonmonomial_family(b):
    gb = buchberger(parse_polys(f"x^3, x^2*y^{b - 2} + y^{b}", QQ))
    assert initial_ideal(gb) == MonomialIdeal2([(3, 0), (2, b - 2), (1, b), (0, b + 2)])
    assert [str(g) for g in gb.basis][-2:] == [str(BivariatePoly.parse(f"x*y^{b}", QQ)), f"y^{b + 2}"]


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_conjecture_ideal_basis(p):
    k = (p - 1) // 2
    field = FieldSpec(p)
    gb = buchberger(parse_polys(f"x^{p}, x^{k + 1}*y^{k} + y^{p}", field))
    leads = {g.lead for g in gb.basis}
    assert leads == {(p, 0), (k + 1, k), (k, p), (0, (3 * p + 1) // 2)}
    assert initial_ideal(gb).is_lexsegment() == (p == 3)


def test_basis_is_reduced_and_closed():
    gb = buchberger(parse_polys("x^3 + 2*x*y^2, x^2*y - y^3 + x*y^2", QQ))
    for i, f in enumerate(gb.basis):
        assert f.lead_coeff == 1
        for g in gb.basis[i + 1:]:
            assert reduce(s_polynomial(f, g), list(gb.basis)).is_zero()


def test_quotient_basis_matches_initial_hilbert():
    gb = buchberger(parse_polys("x^2 + y^2, x^3 + y^3", QQ))
    hf = initial_ideal(gb).hilbert_function()
    assert all(len(quotient_basis(gb, d)) == hf(d) for d in range(6))
    assert quotient_hilbert(buchberger(parse_polys("x, y", QQ))) == (1,)


def test_generic_slp_examples():
    for b in range(2, 9):
        for p in (2, 3, 5):
            assert has_slp_generic(f"x^2, x*y^{b - 1} + y^{b}", p)
    for p in (2, 3, 5, 7):
        assert not has_slp_generic(f"x^{p}, y^{p}", p)
    with pytest.raises(NotArtinian):
        has_slp_generic("x^2 + y^2, x^3 + y^3", 2)


def test_generic_agrees_with_monomial_engine():
    for ideal in iter_artinian_ideals(6):
        gens = ", ".join(str(g) for g in ideal)
        for p in (2, 3, 5):
            assert has_slp_generic(gens, p) == has_slp(ideal, p).verdict


def test_via_initial_ideal():
    assert slp_via_initial("x^2 + y^2, x^3 + y^3", FieldSpec(3)) is True
    assert slp_via_initial("x^5, x^3*y^2 + y^5", FieldSpec(5)) is None
    assert slp_via_initial("x^2, xy^2, y^4", FieldSpec(7)) is True
    assert has_slp_generic("x^2 + y^2, x^3 + y^3", 3)
