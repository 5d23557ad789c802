from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz.ideal import MonomialIdeal2
from lefschetz.lattice import build_lattice, count_nilp_families
from lefschetz.maps import build_matrix, closed_form_det, det_exact, square_pairs
from lefschetz.slp import bad_primes, has_slp, has_slp_bruteforce, regularity_bound, width_bound


@st.composite
def artinian_ideals(draw, max_exp: int = 9):
    a = draw(st.integers(1, max_exp))
    # a staircase: y-exponents non-increasing along x, ending above zero
    heights = sorted(draw(st.lists(st.integers(1, max_exp), min_size=a, max_size=a)), reverse=True)
    gens = [(a, 0)] + [(i, heights[i]) for i in range(a)]
    return MonomialIdeal2(gens)


@settings(max_examples=60, deadline=None)
@given(artinian_ideals())
def test_bad_primes_below_bounds(ideal):
    primes = bad_primes(ideal).primes
    assert all(p < width_bound(ideal) <= regularity_bound(ideal) for p in primes)


@settings(max_examples=60, deadline=None)
@given(artinian_ideals())
def test_closed_form_and_lgv_agree(ideal):
    for d, t in square_pairs(ideal)[:4]:
        value = closed_form_det(ideal, d, t).value
        assert value == abs(det_exact(build_matrix(ideal, d, t)))
        assert value == count_nilp_families(build_lattice(ideal, d, t))


@settings(max_examples=40, deadline=None)
@given(artinian_ideals(max_exp=6), st.sampled_from([2, 3, 5, 7]))
def test_engine_agrees_with_row_reduction(ideal, p):
    assert has_slp(ideal, p).verdict == has_slp_bruteforce(ideal, p)


@settings(max_examples=40, deadline=None)
@given(artinian_ideals())
def test_swap_preserves_bad_primes(ideal):
    assert bad_primes(ideal.swap()).primes == bad_primes(ideal).primes
