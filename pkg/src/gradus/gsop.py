"""Search and certification of graded systems of parameters.

No search procedure is canonical here, so :func:`find_gsop` is greedy: at each
step it keeps the first candidate ``y`` that drops the pole order of
``M/(y_1..y_i)M`` by exactly one. Candidates come in three tiers: single
variables, variable powers of a common degree ``L``, then seeded random
k-linear combinations of all monomials of degree ``L``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GsopSearchError, NotAGsopError
from .grmod import LengthValue, ModulePresentation, quotient_by_ideal, total_length
from .ring import Polynomial
from .series import NEG_INF, LaurentPoly, dimension_and_degree, poincare

RANDOM_COEFFS = (-2, -1, 1, 2)
STRATEGIES = ("simple", "powers", "random")


@dataclass(frozen=True)
class GsopResult:
    elements: tuple
    degrees: tuple
    certificate: LengthValue
    seed: int
    tries: int

    def __len__(self):
        return len(self.elements)


def module_dimension(M: ModulePresentation):
    return dimension_and_degree(poincare(M)).d1


def relevant_variables(M: ModulePresentation) -> list:
    """Variables lacking a pure power in the leading-term module at some component."""
    powers = M.groebner().pure_powers()
    return [i for i in range(M.ring.nvars) if any(row[i] is None for row in powers)]


def _candidates(N: ModulePresentation, strategy: str, rng: random.Random):
    R = N.ring
    relevant = relevant_variables(N) or list(range(R.nvars))
    L = R.weight_lcm(relevant)
    seen = set()
    if strategy == "simple":
        for i in range(R.nvars):
            v = R.var(i)
            seen.add(v)
            yield v
    if strategy in ("simple", "powers"):
        for i in relevant:
            v = R.var(i) ** (L // R.weights[i])
            if v not in seen:
                seen.add(v)
                yield v
    monos = R.monomials_of_degree(L)
    while True:
        y = Polynomial(R, {m: R.field(rng.choice(RANDOM_COEFFS)) for m in monos})
        if y:
            yield y.scale(R.field.inverse(y.terms[y.leading_monomial()]))


def find_gsop(M: ModulePresentation, seed: int = 0, max_tries: int = 64,
              strategy: str = "simple") -> GsopResult:
    """Greedy graded system of parameters for a nonzero module.

    ``max_tries`` bounds the candidates examined at each step.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}")
    D = module_dimension(M)
    if D is NEG_INF:
        raise ValueError("the zero module has no system of parameters")
    rng = random.Random(seed)
    chain: list = []
    current = M
    tries = 0
    for step in range(D):
        target = D - step - 1
        for attempt, y in enumerate(_candidates(current, strategy, rng)):
            if attempt >= max_tries:
                raise GsopSearchError(
                    f"no parameter found at step {step + 1} after {max_tries} candidates "
                    f"(seed {seed})", chain)
            tries += 1
            nxt = quotient_by_ideal(current, [y])
            if module_dimension(nxt) == target:
                chain.append(y)
                current = nxt
                break
    cert = total_length(current)
    if not cert.is_finite:
        raise AssertionError("greedy chain reached dimension 0 without finite length")
    degrees = tuple(y.is_homogeneous() for y in chain)
    return GsopResult(tuple(chain), degrees, cert, seed, tries)


def euler_poincare_polynomial(M: ModulePresentation, degrees) -> LaurentPoly | None:
    """``P_M(t) * prod(1 - t^e)``, or None when that is not a Laurent polynomial."""
    return poincare(M).times_denominator(degrees)


def certify_algebraic_independence(ys, M: ModulePresentation) -> bool:
    """Check a claimed GSOP: right size, finite quotient, polynomial Euler–Poincaré series."""
    D = module_dimension(M)
    if D is NEG_INF or len(ys) != D:
        raise NotAGsopError(f"expected {D} parameters, got {len(ys)}")
    if not total_length(quotient_by_ideal(M, ys)).is_finite:
        raise NotAGsopError("M/(ys)M has infinite length")
    degrees = [y.is_homogeneous() for y in ys]
    if euler_poincare_polynomial(M, degrees) is None:
        raise NotAGsopError("P_M(t) * prod(1 - t^e_i) is not a Laurent polynomial")
    return True
