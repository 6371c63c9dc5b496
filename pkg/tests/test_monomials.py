from itertools import product as cartesian

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edgereg.monomials import (
    DimensionError,
    MonomialIdeal,
    colon,
    contains,
    divides,
    format_monomial,
    intersect,
    intersect_all,
    intersect_max_power,
    lcm,
    minimalize,
    parse_monomial,
    power,
    product,
)

N = 3
x, y, z = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def ideal(text, n=N):
    return MonomialIdeal.parse(text, n)


def all_monomials(n, max_deg):
    return [m for m in cartesian(range(max_deg + 1), repeat=n) if sum(m) <= max_deg]


def test_lcm_examples():
    assert lcm((2, 1, 0), (0, 1, 2)) == (2, 1, 2)
    assert lcm((0, 0, 0), (1, 1, 0)) == (1, 1, 0)
    assert lcm((1, 1, 0), (1, 1, 0)) == (1, 1, 0)
    with pytest.raises(DimensionError):
        lcm((1, 0), (1, 0, 0))


def test_divides_examples():
    assert divides((1, 1, 0), (2, 2, 0))
    assert not divides((2, 0, 0), (1, 1, 0))
    for m in all_monomials(3, 3):
        assert divides((0, 0, 0), m)
    with pytest.raises(DimensionError):
        divides((1,), (1, 1))


def test_minimalize_examples():
    assert minimalize([(2, 1, 0), (1, 1, 0), (0, 3, 0)]) == ideal("x1*x2, x2^3")
    assert minimalize([], n=3).is_zero
    assert minimalize([(0, 0, 0), (1, 1, 0)]) == MonomialIdeal.unit_ideal(3)


def test_sum_examples():
    assert ideal("x1*x2") + ideal("x2*x3") == ideal("x1*x2, x2*x3")
    I = ideal("x1*x2, x3^2")
    assert I + MonomialIdeal.zero(3) == I
    assert ideal("x1^2") + ideal("x1") == ideal("x1")


def test_product_and_power_examples():
    I = ideal("x1*x2, x2*x3")
    expected = ideal("x1^2*x2^2, x1*x2^2*x3, x2^2*x3^2")
    assert product(I, I) == expected
    assert power(I, 2) == expected
    assert I * MonomialIdeal.unit_ideal(3) == I
    assert (I * MonomialIdeal.zero(3)).is_zero
    assert power(I, 0) == MonomialIdeal.unit_ideal(3)
    assert power(I, 1) == I


def test_triangle_square_has_six_quartic_generators():
    # {xy, yz, xz}^2: the six pairwise products are pairwise incomparable
    I = ideal("x1*x2, x2*x3, x1*x3")
    sq = I**2
    assert len(sq) == 6
    assert {sum(g) for g in sq.gens} == {4}


def test_intersect_examples():
    assert intersect(ideal("x1"), ideal("x2")) == ideal("x1*x2")
    I = ideal("x1*x2, x2*x3")
    assert intersect(I, ideal("x1*x3")) == ideal("x1*x2*x3")
    assert intersect(I, MonomialIdeal.unit_ideal(3)) == I


def test_intersect_example_against_brute_force():
    I, J = ideal("x1*x2, x2*x3"), ideal("x1*x3")
    inside = [m for m in all_monomials(3, 3) if m in I and m in J]
    assert minimalize(inside) == ideal("x1*x2*x3")


def test_colon_examples():
    I = ideal("x1^2*x2^2, x1*x2^2*x3, x2^2*x3^2")
    assert colon(I, (0, 1, 1)) == ideal("x1*x2, x2*x3")
    assert colon(I, (0, 0, 0)) == I
    assert colon(ideal("x1*x2"), (1, 1, 0)) == MonomialIdeal.unit_ideal(3)


def test_contains_examples():
    assert contains(ideal("x1*x2, x2*x3"), (1, 2, 1))
    assert not contains(ideal("x1*x2"), (2, 0, 0))
    zero = MonomialIdeal.zero(3)
    assert not any(contains(zero, m) for m in all_monomials(3, 3))
    with pytest.raises(DimensionError):
        contains(zero, (1, 1))


def test_intersect_max_power_examples():
    assert intersect_max_power(MonomialIdeal(2, [(1, 1)]), 3) == MonomialIdeal(2, [(2, 1), (1, 2)])
    assert intersect_max_power(MonomialIdeal(2, [(1, 1)]), 2) == MonomialIdeal(2, [(1, 1)])
    assert intersect_max_power(MonomialIdeal.zero(2), 4).is_zero


def test_zero_and_unit_are_distinct():
    assert MonomialIdeal.zero(2) != MonomialIdeal.unit_ideal(2)
    assert MonomialIdeal.unit_ideal(2).is_unit
    assert str(MonomialIdeal.zero(2)) == "0"
    assert str(MonomialIdeal.unit_ideal(2)) == "1"


def test_text_rendering_is_stable():
    I = MonomialIdeal(3, [(2, 1, 0), (0, 1, 1)])
    assert str(I) == "x1^2*x2, x2*x3"
    assert MonomialIdeal.parse(str(I), 3) == I
    assert format_monomial((0, 3, 1)) == "x2^3*x3"
    assert parse_monomial("x2^3*x3", 3) == (0, 3, 1)


def test_invalid_generators_rejected():
    with pytest.raises(ValueError):
        MonomialIdeal(2, [(-1, 0)])
    with pytest.raises(OverflowError):
        MonomialIdeal(2, [(2**40, 0)])
    with pytest.raises(DimensionError):
        MonomialIdeal(2, [(1, 0, 0)])
    with pytest.raises(DimensionError):
        ideal("x1") + MonomialIdeal(2, [(1, 0)])
    # exponents well past 2^16 are representable
    assert (1 << 17, 0) in MonomialIdeal(2, [(1 << 17, 0)])


def test_intersect_all_folds():
    primes = [MonomialIdeal.prime(3, A) for A in ([0, 1], [1, 2], [0, 2])]
    assert intersect_all(primes) == ideal("x1*x2, x2*x3, x1*x3")


# -- properties --------------------------------------------------------------

monomials = st.tuples(*[st.integers(0, 3)] * N)
gen_sets = st.lists(monomials, min_size=1, max_size=5)
small_sets = st.lists(st.tuples(*[st.integers(0, 2)] * N), min_size=1, max_size=3)


@pytest.mark.property
@given(gen_sets)
def test_minimalize_idempotent(gens):
    I = minimalize(gens)
    assert minimalize(I.gens, n=N) == I
    for a in I.gens:
        for b in I.gens:
            assert a == b or not divides(a, b)


@pytest.mark.property
@given(small_sets, st.integers(0, 2), st.integers(0, 2))
def test_power_additive(gens, s, t):
    I = minimalize(gens)
    assert power(I, s) * power(I, t) == power(I, s + t)


@pytest.mark.property
@given(gen_sets, gen_sets, gen_sets)
def test_intersection_laws(a, b, c):
    I, J, K = minimalize(a), minimalize(b), minimalize(c)
    assert I & J == J & I
    assert (I & J) & K == I & (J & K)
    both = I & J
    for m in all_monomials(N, 6):
        assert (m in both) == (m in I and m in J)


@pytest.mark.property
@given(gen_sets, monomials)
def test_colon_contains_ideal(gens, m):
    I = minimalize(gens)
    assert I <= colon(I, m)


@pytest.mark.property
@given(small_sets, monomials, monomials, st.integers(1, 2))
def test_colon_antitone(gens, m, extra, s):
    I = power(minimalize(gens), s)
    bigger = tuple(a + b for a, b in zip(m, extra))
    assert colon(I, m) <= colon(I, bigger)


@pytest.mark.property
@given(gen_sets, st.integers(1, 5))
def test_intersect_max_power_brute_force(gens, d):
    I = minimalize(gens)
    J = intersect_max_power(I, d)
    for m in all_monomials(N, d + 2):
        assert (m in J) == (m in I and sum(m) >= d)
