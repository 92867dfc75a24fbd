"""Samuel functions of I-adic filtrations and their multiplicities.

``samuel_table`` tabulates ``n -> length(M / I^n M)``; ``fit_and_multiplicity``
finds the least ``D`` whose ``D``-th finite differences are constant on the
tail of the table and rebuilds the polynomial by Newton's forward formula.
Tables that have not visibly stabilized raise instead of extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import NotGIODError, SamuelFitError
from .grmod import ModulePresentation, direct_sum, quotient_by_ideal, total_length
from .gsop import module_dimension
from .series import NEG_INF

DEFAULT_WINDOW = 3


def samuel_table(M: ModulePresentation, I, n_max: int) -> list:
    """``[(n, length(M / I^n M)) for n in 1..n_max]``."""
    first = total_length(quotient_by_ideal(M, I, 1))
    if not first.is_finite:
        c, i = first.witness
        raise NotGIODError(M.ring.names[i], c)
    table = [(1, first.value)]
    for n in range(2, n_max + 1):
        table.append((n, total_length(quotient_by_ideal(M, I, n)).value))
    return table


def differences(values) -> list:
    """``[values, Δ values, Δ² values, ...]`` down to a single entry."""
    out = [list(values)]
    while len(out[-1]) > 1:
        prev = out[-1]
        out.append([b - a for a, b in zip(prev, prev[1:])])
    return out


def _binomial_poly(k: int, base: int) -> list:
    """Monomial-basis coefficients (low to high) of ``C(n - base, k)`` in ``n``."""
    coeffs = [Fraction(1)]
    for i in range(k):
        shift = -(base + i)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d + 1] += c
            nxt[d] += c * shift
        coeffs = nxt
    return [c / factorial(k) for c in coeffs]


@dataclass(frozen=True)
class SamuelFit:
    table: tuple
    fitted_degree: int
    leading_delta: int
    polynomial: tuple
    newton_base: int
    newton: tuple
    window: int

    @property
    def e(self) -> int:
        return self.leading_delta

    def __call__(self, n: int) -> Fraction:
        return sum((c * n**d for d, c in enumerate(self.polynomial)), Fraction(0))

    def multiplicity(self, d: int) -> int:
        """``Δ^d`` of the Samuel polynomial, defined for ``d >= fitted_degree``."""
        if d < self.fitted_degree:
            raise ValueError(f"Δ^{d} is not constant: the polynomial has degree {self.fitted_degree}")
        return self.leading_delta if d == self.fitted_degree else 0


def fit_and_multiplicity(table, D_expected: int, window: int = DEFAULT_WINDOW) -> SamuelFit:
    ns = [n for n, _ in table]
    vals = [v for _, v in table]
    if not ns or ns != list(range(ns[0], ns[0] + len(ns))):
        raise ValueError("table must list consecutive n")
    if len(table) < D_expected + window + 2:
        raise SamuelFitError(
            f"table has {len(table)} entries; need n_max >= {D_expected + window + 2}")
    diffs = differences(vals)
    d = next((k for k in range(len(vals))
              if len(diffs[k]) >= window and len(set(diffs[k][-window:])) == 1), None)
    if d is None:
        raise SamuelFitError("finite differences did not stabilize; increase n_max")
    last = len(vals) - 1 - d
    base = ns[last]
    newton = tuple(diffs[k][last] for k in range(d + 1))
    poly = [Fraction(0)] * (d + 1)
    for k, c in enumerate(newton):
        for i, b in enumerate(_binomial_poly(k, base)):
            poly[i] += c * b
    fit = SamuelFit(tuple(table), d, diffs[d][-1], tuple(poly), base, newton, window)
    for n, v in table[-(window + d):]:
        if fit(n) != v:
            raise AssertionError(f"Newton reconstruction disagrees with the table at n={n}")
    return fit


def samuel_fit(M: ModulePresentation, I, n_max: int | None = None,
               window: int = DEFAULT_WINDOW, expected_degree: int | None = None) -> SamuelFit:
    """Table and fit in one call; ``n_max`` defaults to ``D + 6``."""
    if expected_degree is None:
        expected_degree = module_dimension(M)
        if expected_degree is NEG_INF:
            expected_degree = 0
    if n_max is None:
        n_max = expected_degree + 6
    return fit_and_multiplicity(samuel_table(M, I, n_max), expected_degree, window)


def multiplicity_additivity_check(N: ModulePresentation, P: ModulePresentation, I,
                                  n_max: int | None = None,
                                  window: int = DEFAULT_WINDOW) -> bool:
    """``e(N ⊕ P) = e(N) + e(P)`` at the dimension of the sum."""
    total = samuel_fit(direct_sum(N, P), I, n_max, window)
    D = total.fitted_degree
    fn = samuel_fit(N, I, n_max, window)
    fp = samuel_fit(P, I, n_max, window)
    return total.multiplicity(D) == fn.multiplicity(D) + fp.multiplicity(D)
