from __future__ import annotations

import pytest

from lefschetz.errors import ForcingHolds, InvalidHilbert, InvalidWidth
from lefschetz.ideal import MonomialIdeal2
from lefschetz.macaulay import (
    h_forces_lexsegment,
    is_valid_hilbert,
    is_valid_width,
    lex_ideal_from_hilbert,
    lex_ideal_from_width,
    macaulay_expansion,
    macaulay_upper,
    non_lex_witness_from_h,
    non_lex_witness_from_w,
    satisfies_macaulay,
    w_forces_lexsegment,
)


def test_expansions():
    assert macaulay_expansion(5, 2).terms == ((3, 2), (2, 1))
    assert macaulay_expansion(1, 4).terms == ((4, 4),)
    assert macaulay_expansion(10, 3).terms == ((5, 3),)
    for a in range(1, 60):
        for d in range(1, 6):
            exp = macaulay_expansion(a, d)
            assert exp.value == a
            tops = [t for t, _ in exp.terms]
            assert tops == sorted(tops, reverse=True) and len(set(tops)) == len(tops)


def test_upper_bound():
    assert macaulay_upper(0, 3) == 0
    assert macaulay_upper(2, 1) == 3
    assert macaulay_upper(5, 2) == 7


def test_valid_sequences():
    assert is_valid_hilbert((1, 2, 3, 4, 4, 2))
    assert not is_valid_hilbert((1, 2, 1, 2))
    assert not is_valid_hilbert((2, 3))
    assert satisfies_macaulay((1, 2, 3, 4, 4, 2))
    assert is_valid_width((0, 0, 0, 0, 1, 5))
    assert not is_valid_width((0, 1, 1))
    assert not is_valid_width((0, 1, 4))


def test_lex_ideal_from_hilbert():
    assert lex_ideal_from_hilbert((1, 2, 2, 1)) == MonomialIdeal2.parse("x^2, xy^2, y^4")
    assert lex_ideal_from_hilbert((1,)) == MonomialIdeal2.parse("x, y")
    ideal = lex_ideal_from_hilbert((1, 2, 3, 2, 1))
    assert ideal == MonomialIdeal2.parse("x^3, x^2y, xy^3, y^5")
    assert ideal.hilbert_function().values == (1, 2, 3, 2, 1)
    assert ideal.is_initial_lexsegment
    with pytest.raises(InvalidHilbert):
        lex_ideal_from_hilbert((1, 2, 1, 2))


def test_lex_ideal_from_width():
    ideal = lex_ideal_from_width((0, 0, 0, 0, 1, 5))
    assert ideal.hilbert_function().values == (1, 2, 3, 4, 4, 1)
    assert tuple(ideal.width_at(d) for d in range(6)) == (0, 0, 0, 0, 1, 5)
    assert lex_ideal_from_width((1, 2, 3)).is_unit
    # (x) cut off after the given degrees
    assert lex_ideal_from_width((0, 1, 2)) == MonomialIdeal2.parse("x, y^3")
    with pytest.raises(InvalidWidth):
        lex_ideal_from_width((0, 1, 4))


def test_forcing_predicates():
    assert h_forces_lexsegment((1, 2, 2, 1, 1))
    assert not h_forces_lexsegment((1, 2, 3, 2, 1))
    assert w_forces_lexsegment((0, 0, 1, 3, 5))
    assert not w_forces_lexsegment((0, 0, 1, 4))


def test_witness_from_h():
    assert non_lex_witness_from_h((1, 2, 3, 2, 1)) == MonomialIdeal2.parse("x^3, xy^2, y^5")
    assert non_lex_witness_from_h((1, 2, 2, 1)) == MonomialIdeal2.parse("x^2, y^3")
    with pytest.raises(ForcingHolds):
        non_lex_witness_from_h((1, 2, 2, 1, 1))


def test_witness_from_w():
    wit = non_lex_witness_from_w((0, 0, 1, 4))
    assert wit == MonomialIdeal2.parse("x^2, y^3")
    assert not wit.is_lexsegment_in_degree(3)
    with pytest.raises(InvalidWidth):
        non_lex_witness_from_w((0, 1, 4))
    with pytest.raises(ForcingHolds):
        non_lex_witness_from_w((0, 0, 1, 3))
