from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from corpus import build_corpus
from gradus.errors import NotGIODError, SamuelFitError
from gradus.grmod import cyclic_module, direct_sum, free_module, shift
from gradus.gsop import find_gsop, module_dimension
from gradus.ring import polynomial_ring
from gradus.samuel import (
    differences,
    fit_and_multiplicity,
    multiplicity_additivity_check,
    samuel_fit,
    samuel_table,
)


def test_table_examples():
    R = polynomial_ring(("x",))
    assert samuel_table(free_module(R), [R.var(0)], 3) == [(1, 1), (2, 2), (3, 3)]
    S = polynomial_ring(("x", "y"), (1, 2))
    x, y = S.gens()
    assert samuel_table(cyclic_module(S, [x**2]), [y], 4) == [(1, 2), (2, 4), (3, 6), (4, 8)]
    T = polynomial_ring(("x", "y"))
    assert samuel_table(free_module(T), list(T.gens()), 4) == [(1, 1), (2, 3), (3, 6), (4, 10)]


def test_table_rejects_non_definition_ideal():
    S = polynomial_ring(("x", "y"), (1, 2))
    x, y = S.gens()
    with pytest.raises(NotGIODError) as info:
        samuel_table(cyclic_module(S, [x**2]), [x], 3)
    assert info.value.witness == "y"


def test_fit_examples():
    fit = fit_and_multiplicity([(n, n) for n in range(1, 7)], 1)
    assert fit.e == 1 and fit.polynomial == (0, 1)
    fit = fit_and_multiplicity([(n, 2 * n) for n in range(1, 7)], 1)
    assert fit.e == 2 and fit.polynomial == (0, 2)
    fit = fit_and_multiplicity([(n, n * (n + 1) // 2) for n in range(1, 9)], 2)
    assert fit.e == 1 and fit.polynomial == (0, Fraction(1, 2), Fraction(1, 2))
    assert fit(10) == 55


def test_fit_demands_a_long_table():
    with pytest.raises(SamuelFitError):
        fit_and_multiplicity([(1, 2), (2, 4), (3, 6), (4, 8)], 1)


def test_fit_refuses_unstable_tail():
    # 2^n never has constant differences
    with pytest.raises(SamuelFitError):
        fit_and_multiplicity([(n, 2**n) for n in range(1, 8)], 1)


def test_fitted_degree_is_not_taken_from_expectation():
    fit = fit_and_multiplicity([(n, n * n) for n in range(1, 10)], 1)
    assert fit.fitted_degree == 2 and fit.e == 2
    assert fit.multiplicity(2) == 2 and fit.multiplicity(3) == 0
    with pytest.raises(ValueError):
        fit.multiplicity(1)


def test_differences():
    assert differences([1, 3, 6, 10]) == [[1, 3, 6, 10], [2, 3, 4], [1, 1], [0]]


def test_additivity_examples():
    R = polynomial_ring(("x",))
    F = free_module(R)
    assert multiplicity_additivity_check(F, F, [R.var(0)])
    S = polynomial_ring(("x", "y"), (1, 2))
    x, y = S.gens()
    N = cyclic_module(S, [x**2])
    P = cyclic_module(S, [x**2, y])
    assert multiplicity_additivity_check(N, P, [y])
    assert samuel_fit(direct_sum(N, P), [y]).e == 2
    assert multiplicity_additivity_check(N, N, [y])
    assert samuel_fit(direct_sum(N, N), [y]).e == 4


def test_corpus_table_monotone_and_degree():
    for _, M in build_corpus()[:20]:
        g = find_gsop(M)
        fit = samuel_fit(M, list(g.elements))
        vals = [v for _, v in fit.table]
        assert vals == sorted(vals)
        assert fit.fitted_degree == module_dimension(M)
        assert fit.e >= 1


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 29), st.integers(-3, 3))
def test_shift_invariance(index, d):
    _, M = build_corpus()[index]
    g = list(find_gsop(M).elements)
    a, b = samuel_fit(M, g), samuel_fit(shift(M, d), g)
    assert (a.table, a.polynomial, a.e) == (b.table, b.polynomial, b.e)
