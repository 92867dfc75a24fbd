import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from corpus import build_corpus, random_ideal, random_ring
from gradus.grmod import (
    ModulePresentation,
    component_basis,
    cyclic_module,
    direct_sum,
    free_module,
    shift,
)
from gradus.ring import polynomial_ring
from gradus.series import (
    NEG_INF,
    LaurentPoly,
    RationalSeries,
    dimension_and_degree,
    hilbert_numerator,
    poincare,
    scale_by_t_power,
    series_add,
    series_mul,
)


def oracle_dims(M, lo, hi):
    return [component_basis(M, j).dim for j in range(lo, hi + 1)]


def test_laurent_arithmetic_and_division():
    a = LaurentPoly({-1: 2, 0: 1, 3: -1})
    b = LaurentPoly.one_minus_t_power(2)
    assert (a * b).divide_exact(b) == a
    assert LaurentPoly({0: 1}).divide_exact(LaurentPoly.one_minus_t_power(1)) is None
    s, r = LaurentPoly({0: 1, 2: -1}).split_one_minus_t()
    assert s == 1 and r == LaurentPoly({0: 1, 1: 1})
    assert a(1) == 2
    assert str(LaurentPoly({0: 1, 2: -1})) == "1*t^0 - 1*t^2"
    assert str(LaurentPoly({1: Fraction(1, 2)})) == "1/2*t^1"


def test_poincare_free_line():
    R = polynomial_ring(("x",))
    P = poincare(free_module(R))
    assert P == RationalSeries(LaurentPoly({0: 1}), (1,))
    assert str(P) == "(1*t^0)/((1-t^1))"


def test_poincare_parabola():
    R = polynomial_ring(("x", "y"), (1, 2))
    x, y = R.gens()
    M = cyclic_module(R, [y - x**2])
    P = poincare(M)
    assert P.numerator == LaurentPoly({0: 1, 2: -1})
    assert P.denom_weights == (1, 2)
    assert P.expand(0, 10) == [1] * 11 == oracle_dims(M, 0, 10)


def test_poincare_shift_rule():
    R = polynomial_ring(("x",))
    assert poincare(shift(free_module(R), 3)) == RationalSeries(LaurentPoly({-3: 1}), (1,))


def test_dimension_and_degree_examples():
    R = polynomial_ring(("x", "y"), (1, 2))
    x, y = R.gens()
    rep = dimension_and_degree(poincare(free_module(R)))
    assert (rep.d1, rep.degree) == (2, Fraction(1, 2))
    rep = dimension_and_degree(poincare(cyclic_module(R, [x**2])))
    assert (rep.d1, rep.degree) == (1, 1)
    rep = dimension_and_degree(poincare(cyclic_module(R, [x, y])))
    assert (rep.d1, rep.degree) == (0, 1)
    rep = dimension_and_degree(poincare(cyclic_module(R, [R.const(1)])))
    assert rep.d1 is NEG_INF and rep.degree == 0 and str(rep.d1) == "-inf"


def test_series_arith_examples():
    R = polynomial_ring(("x",))
    F = free_module(R)
    assert poincare(direct_sum(F, F)) == RationalSeries(LaurentPoly({0: 2}), (1,))
    P = scale_by_t_power(poincare(F), 3)
    assert P.expand(0, 5) == [0, 0, 0, 1, 1, 1]


def test_series_product_is_convolution():
    rng = random.Random(2)
    for _ in range(6):
        R = random_ring(rng)
        M = cyclic_module(R, random_ideal(rng, R, 2))
        N = cyclic_module(R, random_ideal(rng, R, 1))
        a, b = oracle_dims(M, 0, 10), oracle_dims(N, 0, 10)
        conv = [sum(a[i] * b[j - i] for i in range(j + 1)) for j in range(11)]
        assert series_mul(poincare(M), poincare(N)).expand(0, 10) == conv
        assert series_add(poincare(M), poincare(N)).expand(0, 10) == [u + v for u, v in zip(a, b)]


def test_corpus_series_matches_oracle():
    for _, M in build_corpus():
        lo = min(M.gen_shifts)
        assert poincare(M).expand(lo, lo + 15) == oracle_dims(M, lo, lo + 15)


def test_degree_positive_and_shift_invariant():
    for _, M in build_corpus():
        rep = dimension_and_degree(poincare(M))
        assert rep.degree > 0
        for d in (-2, 3):
            moved = dimension_and_degree(poincare(shift(M, d)))
            assert (moved.d1, moved.degree) == (rep.d1, rep.degree)
            assert moved.numerator_reduced == rep.numerator_reduced.shift(-d)


def test_split_sequence_laws():
    corpus = [M for _, M in build_corpus()]
    rng = random.Random(4)
    for _ in range(12):
        M, N = rng.sample(corpus, 2)
        if M.ring != N.ring:
            continue
        a, b = dimension_and_degree(poincare(M)), dimension_and_degree(poincare(N))
        s = dimension_and_degree(poincare(direct_sum(M, N)))
        assert s.d1 == max(a.d1, b.d1)
        if a.d1 == b.d1:
            assert s.degree == a.degree + b.degree
        else:
            assert s.degree == (a if a.d1 > b.d1 else b).degree
    R = polynomial_ring(("x", "y"))
    x, y = R.gens()
    big, small = cyclic_module(R, [x]), cyclic_module(R, [x, y**2])
    s = dimension_and_degree(poincare(direct_sum(big, small)))
    assert (s.d1, s.degree) == (1, 1)


monomials = st.lists(st.tuples(*[st.integers(0, 4)] * 3), min_size=1, max_size=6)


@settings(max_examples=150, deadline=None)
@given(monomials, st.tuples(*[st.sampled_from((1, 2, 3))] * 3))
def test_pivot_independence(gens, weights):
    ref = hilbert_numerator(gens, weights, "frequent")
    assert hilbert_numerator(gens, weights, "first") == ref
    assert hilbert_numerator(gens, weights, "last") == ref


@settings(max_examples=60, deadline=None)
@given(monomials, st.tuples(*[st.sampled_from((1, 2, 3))] * 3))
def test_monomial_numerator_matches_count(gens, weights):
    R = polynomial_ring(("x", "y", "z"), weights)
    M = cyclic_module(R, [R.monomial(g) for g in gens])
    P = RationalSeries(hilbert_numerator(gens, weights), weights)
    assert P.expand(0, 12) == oracle_dims(M, 0, 12)


def test_empty_and_unit_base_cases():
    assert hilbert_numerator([], (1, 2)) == LaurentPoly({0: 1})
    assert hilbert_numerator([(0, 0)], (1, 2)) == LaurentPoly()
    with pytest.raises(ValueError):
        hilbert_numerator([(1, 0)], (1, 1), pivot="random")


def test_zero_rank_module_series():
    R = polynomial_ring(("x",))
    assert not poincare(ModulePresentation(R, ())).numerator
