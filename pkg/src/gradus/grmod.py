"""Finitely presented graded modules.

A module is the cokernel of a homogeneous map into ``F = ⊕ R(-a_i)``: the
generator ``e_i`` sits in degree ``a_i`` and the relations are homogeneous
vectors of ``F``. Suspension follows ``M(d)_j = M_{d+j}``.

:func:`component_basis` computes ``M_j`` by plain linear algebra on the
degree-``j`` relation multiples; it never touches Gröbner bases and serves as
the reference oracle for everything that does.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement

from .errors import InhomogeneousError, RingMismatchError
from .grobner import GroebnerBasis, buchberger, standard_monomials_in_degree
from .linalg import complement_columns
from .ring import ANY_DEGREE, Polynomial, RingDescriptor, Vector, mono_mul
from .series import denominator_poly, hilbert_numerator


@dataclass(frozen=True)
class ModulePresentation:
    ring: RingDescriptor
    gen_shifts: tuple
    relations: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gen_shifts", tuple(int(a) for a in self.gen_shifts))
        rels = []
        for i, r in enumerate(self.relations):
            if isinstance(r, Polynomial):
                r = Vector.from_poly(r)
            if r.ring != self.ring:
                raise RingMismatchError(f"relation {i} lives in {r.ring}, not {self.ring}")
            if any(c >= self.rank or c < 0 for (c, _) in r.terms):
                raise ValueError(f"relation {i} uses a component outside e1..e{self.rank}")
            if r.is_homogeneous(self.gen_shifts) is None:
                raise InhomogeneousError(i, r.degrees(self.gen_shifts), what="relation")
            if r:
                rels.append(r)
        object.__setattr__(self, "relations", tuple(rels))

    @property
    def rank(self) -> int:
        return len(self.gen_shifts)

    @cached_property
    def _gb(self) -> GroebnerBasis:
        return buchberger(self.relations, self.gen_shifts, self.ring)

    def groebner(self) -> GroebnerBasis:
        return self._gb

    def relation_degree(self, r: Vector) -> int:
        return r.is_homogeneous(self.gen_shifts)

    def is_zero(self) -> bool:
        G = self._gb
        one = self.ring.one_monomial()
        return all((c, one) in G.leads for c in range(self.rank))

    def canonical(self) -> ModulePresentation:
        """The same module, with the zero module rewritten as the rank-0 presentation."""
        if self.rank and self.is_zero():
            return ModulePresentation(self.ring, ())
        return self

    def dim_in_degree(self, j: int) -> int:
        """``vdim_k(M_j)`` via standard monomials (the fast path)."""
        return len(standard_monomials_in_degree(self._gb, j))

    def __str__(self):
        rels = ", ".join(str(r) for r in self.relations) or "none"
        return f"coker over {self.ring}, shifts {list(self.gen_shifts)}, relations [{rels}]"


def free_module(ring: RingDescriptor, shifts=(0,)) -> ModulePresentation:
    return ModulePresentation(ring, tuple(shifts))


def cyclic_module(ring: RingDescriptor, ideal_gens, shift: int = 0) -> ModulePresentation:
    """``R(-shift)/I`` for an ideal given by homogeneous generators."""
    return ModulePresentation(ring, (shift,), tuple(Vector.from_poly(g) for g in ideal_gens))


def shift(M: ModulePresentation, d: int) -> ModulePresentation:
    """``M(d)``, whose degree-``j`` piece is ``M_{d+j}``."""
    return ModulePresentation(M.ring, tuple(a - d for a in M.gen_shifts), M.relations)


def direct_sum(M: ModulePresentation, N: ModulePresentation) -> ModulePresentation:
    if M.ring != N.ring:
        raise RingMismatchError(f"cannot add modules over {M.ring} and {N.ring}")
    r = M.rank
    moved = tuple(Vector(N.ring, {(c + r, m): v for (c, m), v in rel.terms.items()})
                  for rel in N.relations)
    return ModulePresentation(M.ring, M.gen_shifts + N.gen_shifts, M.relations + moved)


def ideal_power_products(I, power: int) -> list:
    """Distinct products of ``power`` generators of ``I`` (homogeneity checked)."""
    gens = []
    for i, g in enumerate(I):
        d = g.is_homogeneous()
        if d is None:
            raise InhomogeneousError(i, sorted(g.ring.weighted_degree(m) for m in g.terms))
        if d is not ANY_DEGREE:
            gens.append(g)
    if power < 1:
        raise ValueError("power must be a positive integer")
    seen = set()
    out = []
    for combo in combinations_with_replacement(range(len(gens)), power):
        p = gens[combo[0]]
        for k in combo[1:]:
            p = p * gens[k]
        if p and p not in seen:
            seen.add(p)
            out.append(p)
    return out


def quotient_by_ideal(M: ModulePresentation, I, power: int = 1) -> ModulePresentation:
    """Presentation of ``M / I^power M``."""
    for g in I:
        if g.ring != M.ring:
            raise RingMismatchError(f"ideal generator lives in {g.ring}, not {M.ring}")
    extra = []
    for p in ideal_power_products(I, power):
        for c in range(M.rank):
            extra.append(Vector.from_poly(p, c))
    return ModulePresentation(M.ring, M.gen_shifts, M.relations + tuple(extra))


@dataclass(frozen=True)
class ComponentSpace:
    degree: int
    basis: tuple
    dim: int


def free_component(M: ModulePresentation, j: int) -> list:
    """All ``(component, monomial)`` of degree ``j`` in the ambient free module."""
    out = []
    for c, a in enumerate(M.gen_shifts):
        for m in M.ring.monomials_of_degree(j - a):
            out.append((c, m))
    return out


def component_basis(M: ModulePresentation, j: int) -> ComponentSpace:
    """Brute-force ``M_j``: row-reduce all degree-``j`` relation multiples."""
    cols = free_component(M, j)
    index = {t: i for i, t in enumerate(cols)}
    rows = []
    for r in M.relations:
        dr = M.relation_degree(r)
        for u in M.ring.monomials_of_degree(j - dr):
            rows.append({index[(c, mono_mul(u, m))]: v for (c, m), v in r.terms.items()})
    keep = complement_columns(rows, len(cols), M.ring.field)
    basis = tuple(cols[i] for i in keep)
    return ComponentSpace(j, basis, len(basis))


@dataclass(frozen=True)
class LengthValue:
    """Total k-dimension, or infinite (``value is None``).

    ``bound`` is the top nonzero degree of a finite module; ``witness`` is a
    ``(component, variable index)`` with no pure power in the leading-term
    module when infinite.
    """

    value: int | None
    bound: int | None = None
    witness: tuple | None = None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __int__(self):
        if self.value is None:
            raise ValueError("infinite length")
        return self.value

    def __str__(self):
        return "inf" if self.value is None else str(self.value)


INFINITE = LengthValue(None)


def total_length(M: ModulePresentation, probe_window: int = 1) -> LengthValue:
    """Total k-dimension of ``M``, certified through pure powers in the leading-term module."""
    if probe_window < 1:
        raise ValueError("probe_window must be >= 1")
    G = M.groebner()
    powers = G.pure_powers()
    for c, row in enumerate(powers):
        for i, k in enumerate(row):
            if k is None:
                return LengthValue(None, witness=(c, i))
    weights = M.ring.weights
    den = denominator_poly(weights)
    total, bound = 0, None
    for c, a in enumerate(M.gen_shifts):
        num = hilbert_numerator(G.leading_monomials(c), weights)
        if not num:
            continue
        h = num.divide_exact(den)
        total += h(1)
        top = h.max_exp + a
        bound = top if bound is None else max(bound, top)
    if bound is not None:
        for j in range(bound + 1, bound + 1 + probe_window):
            if M.dim_in_degree(j):
                raise AssertionError(f"length certificate violated in degree {j}")
    return LengthValue(int(total), bound)
