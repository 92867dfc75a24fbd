import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradus.field import QQ, Field, Residue
from gradus.ring import (
    ANY_DEGREE,
    MAX_VARS,
    monomial_key,
    mono_mul,
    polynomial_ring,
    weighted_degree,
)


def test_weighted_degree_examples():
    R = polynomial_ring(("x", "y"), (1, 2))
    assert weighted_degree((0, 0), R) == 0
    assert weighted_degree((2, 1), R) == 4
    assert weighted_degree((3, 0), R) == 3


def test_difference_of_squares():
    R = polynomial_ring(("x", "y"))
    x, y = R.gens()
    assert (x + y) * (x - y) == x**2 - y**2


def test_zero_absorbs():
    R = polynomial_ring(("x", "y"))
    x, y = R.gens()
    assert R.zero() * (x**3 + 2 * y) == R.zero()
    assert not (R.zero() * x)


def test_square_over_f2():
    R = polynomial_ring(("x", "y"), field=Field(2))
    x, y = R.gens()
    assert (x + y) ** 2 == x**2 + y**2


def test_is_homogeneous_examples():
    R = polynomial_ring(("x", "y"), (1, 2))
    x, y = R.gens()
    assert (y - x**2).is_homogeneous() == 2
    assert (x + y).is_homogeneous() is None
    assert R.zero().is_homogeneous() is ANY_DEGREE


def test_mixed_rings_rejected():
    R = polynomial_ring(("x",))
    S = polynomial_ring(("x",), (2,))
    with pytest.raises(ValueError):
        R.var(0) + S.var(0)


def test_ring_validation():
    with pytest.raises(ValueError):
        polynomial_ring(("x", "x"))
    with pytest.raises(ValueError):
        polynomial_ring(("x",), (0,))
    with pytest.raises(ValueError):
        polynomial_ring(tuple(f"v{i}" for i in range(MAX_VARS + 1)))


def test_degrevlex_tie_break():
    w = (1, 2)
    # x^2 and y share degree 2; reverse-lex makes x^2 the larger one
    assert monomial_key((2, 0), w) > monomial_key((0, 1), w)
    w = (1, 1, 1)
    assert monomial_key((1, 0, 1), w) < monomial_key((0, 2, 0), w)
    assert monomial_key((0, 0, 2), w) < monomial_key((1, 1, 0), w)


def test_order_is_degree_compatible():
    rng = random.Random(3)
    w = (1, 2, 3)
    for _ in range(500):
        a = tuple(rng.randint(0, 4) for _ in w)
        b = tuple(rng.randint(0, 4) for _ in w)
        da, db = sum(x * y for x, y in zip(a, w)), sum(x * y for x, y in zip(b, w))
        if da < db:
            assert monomial_key(a, w) < monomial_key(b, w)
        c = tuple(rng.randint(0, 3) for _ in w)
        if monomial_key(a, w) < monomial_key(b, w):
            assert monomial_key(mono_mul(a, c), w) < monomial_key(mono_mul(b, c), w)


def test_monomials_of_degree_are_complete():
    R = polynomial_ring(("x", "y", "z"), (1, 2, 3))
    for d in range(0, 9):
        got = set(R.monomials_of_degree(d))
        brute = {(a, b, c) for a in range(d + 1) for b in range(d + 1) for c in range(d + 1)
                 if a + 2 * b + 3 * c == d}
        assert got == brute


def test_residue_storage():
    r = Residue(-3, 7)
    assert r.value == 4
    assert Residue(3, 7) * Residue(5, 7) == Residue(1, 7)
    assert Residue(3, 7).inverse() * 3 == 1
    with pytest.raises(ValueError):
        Field(10)
    with pytest.raises(ValueError):
        Field(2**31 + 11)


def test_rationals_are_reduced():
    c = QQ(Fraction(6, -4))
    assert c == Fraction(-3, 2) and c.denominator == 2


def _check_axioms(F, a, b, c):
    a, b, c = F(a), F(b), F(c)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if a:
        assert a * F.inverse(a) == F.one


def test_field_axioms_seeded_triples():
    rng = random.Random(11)
    fields = [QQ, Field(2), Field(101), Field(2147483647)]
    for k in range(10_000):
        F = fields[k % len(fields)]
        if F.is_rational:
            vals = [Fraction(rng.randint(-50, 50), rng.randint(1, 50)) for _ in range(3)]
        else:
            vals = [rng.randrange(F.characteristic) for _ in range(3)]
        _check_axioms(F, *vals)


@given(st.fractions(max_denominator=1000), st.fractions(max_denominator=1000),
       st.fractions(max_denominator=1000))
def test_field_axioms_rational(a, b, c):
    _check_axioms(QQ, a, b, c)


@given(st.integers(), st.integers(), st.integers())
def test_field_axioms_prime(a, b, c):
    _check_axioms(Field(65537), a, b, c)


exps = st.tuples(*[st.integers(0, 6)] * 3)


@given(exps, exps)
def test_weighted_degree_additive(a, b):
    R = polynomial_ring(("x", "y", "z"), (1, 2, 3))
    assert weighted_degree(mono_mul(a, b), R) == weighted_degree(a, R) + weighted_degree(b, R)


@settings(max_examples=200)
@given(st.dictionaries(exps, st.integers(-5, 5), max_size=8))
def test_homogeneous_components_sum_back(terms):
    R = polynomial_ring(("x", "y", "z"), (1, 2, 3))
    p = R.zero()
    for m, c in terms.items():
        p = p + R.monomial(m, c)
    comps = p.homogeneous_components()
    total = R.zero()
    for d, q in comps.items():
        assert q.is_homogeneous() == d
        total = total + q
    assert total == p


def test_homogeneous_product_degree():
    R = polynomial_ring(("x", "y"), (1, 2))
    x, y = R.gens()
    a, b = x**2 + 3 * y, x * y - x**3
    assert (a * b).is_homogeneous() == 5


def test_polynomial_rendering():
    R = polynomial_ring(("x", "y"), (1, 2))
    x, y = R.gens()
    assert str(y - x**2) == "-x^2 + y"
    assert str(R.zero()) == "0"
    assert str(x * y + Fraction(1, 2) * x**3) == "1/2*x^3 + x*y"
