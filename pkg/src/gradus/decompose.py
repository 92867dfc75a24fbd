"""Minimal primes and sum decompositions for monomial quotients ``R/I``.

The minimal primes of a monomial ideal are the coordinate primes
``p_S = (x_i : i in S)`` for the inclusion-minimal covers ``S`` of the
generator supports. The length of ``(R/I)`` localized at a minimal ``p_S`` is
computed exactly by setting the variables outside ``S`` to 1 and measuring
``k[x_S] / I_S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod

from .errors import NotMinimalPrimeError, UnitIdealError
from .grmod import ModulePresentation, cyclic_module
from .ring import RingDescriptor
from .samuel import samuel_fit
from .series import dimension_and_degree, finite_quotient_length, minimalize, poincare


@dataclass(frozen=True)
class MonomialIdeal:
    ring: RingDescriptor
    gens: tuple

    def __post_init__(self):
        gens = minimalize(tuple(tuple(g) for g in self.gens))
        for g in gens:
            if len(g) != self.ring.nvars:
                raise ValueError(f"generator {g} does not have {self.ring.nvars} exponents")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def from_polys(cls, ring: RingDescriptor, polys) -> MonomialIdeal:
        gens = []
        for i, p in enumerate(polys):
            if not p:
                continue
            if not p.is_monomial():
                raise ValueError(f"generator {i} ({p}) is not a monomial")
            gens.append(next(iter(p.terms)))
        return cls(ring, tuple(gens))

    def polys(self) -> list:
        return [self.ring.monomial(g) for g in self.gens]

    def quotient(self) -> ModulePresentation:
        return cyclic_module(self.ring, self.polys())

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.polys()) + ")"


def as_monomial_ideal(M: ModulePresentation) -> MonomialIdeal | None:
    """``I`` when ``M`` is presented as ``R/I`` (up to shift) with monomial ``I``, else None."""
    if M.rank != 1:
        return None
    polys = [r.component(0) for r in M.relations]
    if not all(p.is_monomial() for p in polys):
        return None
    return MonomialIdeal.from_polys(M.ring, polys)


def _support(g) -> set:
    return {i for i, e in enumerate(g) if e}


def minimal_primes(I: MonomialIdeal) -> list:
    """Inclusion-minimal variable sets meeting every generator's support."""
    if I.is_unit():
        raise UnitIdealError("the unit ideal has no minimal primes")
    supports = [_support(g) for g in I.gens]
    found: list = []
    for size in range(I.ring.nvars + 1):
        for S in combinations(range(I.ring.nvars), size):
            s = set(S)
            if any(f <= s for f in found):
                continue
            if all(sup & s for sup in supports):
                found.append(s)
    return [tuple(sorted(s)) for s in found]


def local_length_at(I: MonomialIdeal, S) -> int:
    S = tuple(sorted(S))
    if S not in minimal_primes(I):
        raise NotMinimalPrimeError(f"{S} is not a minimal prime of {I}")
    if not S:
        return 1
    projected = [tuple(g[i] for i in S) for g in I.gens]
    weights = tuple(I.ring.weights[i] for i in S)
    return finite_quotient_length(projected, weights)


@dataclass(frozen=True)
class PrimeComponent:
    vars: tuple
    local_length: int
    quotient_degree: Fraction


@dataclass(frozen=True)
class DecompositionReport:
    lhs: Fraction
    rhs: Fraction
    top_primes: tuple
    dimension: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def _prime_degree(R: RingDescriptor, S) -> Fraction:
    return Fraction(1, prod(R.weights[i] for i in range(R.nvars) if i not in S))


def top_components(I: MonomialIdeal, D: int) -> list:
    """Minimal primes with ``dim R/p_S == D``, each with its local length."""
    R = I.ring
    out = []
    for S in minimal_primes(I):
        if R.nvars - len(S) == D:
            out.append(PrimeComponent(S, local_length_at(I, S), _prime_degree(R, S)))
    return out


def degree_sum_check(I: MonomialIdeal) -> DecompositionReport:
    """``deg(R/I)`` against ``sum(length_p * deg(R/p))`` over top-dimensional minimal primes."""
    if I.is_unit():
        raise UnitIdealError("R/I is zero for the unit ideal")
    rep = dimension_and_degree(poincare(I.quotient()))
    comps = top_components(I, rep.d1)
    rhs = sum((c.local_length * c.quotient_degree for c in comps), Fraction(0))
    return DecompositionReport(rep.degree, rhs, tuple(comps), rep.d1)


def coordinate_prime_quotient(R: RingDescriptor, S) -> ModulePresentation:
    return cyclic_module(R, [R.var(i) for i in S])


def multiplicity_sum_check(I: MonomialIdeal, xs, n_max: int | None = None) -> DecompositionReport:
    """``e(R/I, (xs), D)`` against ``sum(length_p * e(R/p, (xs), D))``."""
    R = I.ring
    fit = samuel_fit(I.quotient(), xs, n_max)
    D = fit.fitted_degree
    comps = top_components(I, D)
    rhs = 0
    for c in comps:
        e_p = samuel_fit(coordinate_prime_quotient(R, c.vars), xs, n_max).multiplicity(D)
        rhs += c.local_length * e_p
    return DecompositionReport(Fraction(fit.e), Fraction(rhs), tuple(comps), D)

