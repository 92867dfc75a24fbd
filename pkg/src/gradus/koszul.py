"""Graded Koszul complexes ``K(x_1..x_u; M)`` and their homology over k.

``K_p`` is a sum over p-subsets ``S`` (lexicographic order) of copies of
``M`` shifted by ``sum(w_i for i in S)``; the differential contracts

    ∂(e_S ⊗ m) = Σ_k (-1)^k x_{S[k]} m ⊗ e_{S \\ S[k]}.

Components are materialized one internal degree at a time, with ``M_a``
coordinatized by the standard monomials of its Gröbner basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .errors import InhomogeneousError, KoszulCertificationError, NotGIODError
from .grmod import ModulePresentation, quotient_by_ideal, total_length
from .grobner import standard_monomials_in_degree
from .linalg import mat_vec_compose, rank
from .ring import ANY_DEGREE, RingDescriptor, mono_mul
from .series import LaurentPoly, RationalSeries, poincare

DEFAULT_SLACK = 4
DEFAULT_RETRIES = 3


class KoszulComplex:
    def __init__(self, M: ModulePresentation, xs):
        # an empty sequence is allowed: K_0 = M and nothing else
        xs = list(xs)
        degrees = []
        for i, x in enumerate(xs):
            if x.ring != M.ring:
                raise ValueError(f"element {i} lives in {x.ring}, not {M.ring}")
            d = x.is_homogeneous()
            if d is None:
                raise InhomogeneousError(i, sorted(M.ring.weighted_degree(m) for m in x.terms))
            if d is ANY_DEGREE or d <= 0:
                raise ValueError(f"element {i} must be homogeneous of positive degree")
            degrees.append(d)
        self.module = M
        self.xs = tuple(xs)
        self.weights = tuple(degrees)
        self.u = len(xs)
        self.subsets = [list(combinations(range(self.u), p)) for p in range(self.u + 1)]
        self._gb = M.groebner()
        self._reducer = self._gb._reducer()
        self._bases: dict = {}
        self._mult: dict = {}
        self._terms: dict = {}
        self._ranks: dict = {}

    @property
    def ring(self) -> RingDescriptor:
        return self.module.ring

    def subset_shift(self, S) -> int:
        return sum(self.weights[i] for i in S)

    def module_basis(self, a: int):
        """Standard monomials of ``M_a`` with their positions."""
        hit = self._bases.get(a)
        if hit is None:
            basis = standard_monomials_in_degree(self._gb, a)
            hit = (basis, {t: i for i, t in enumerate(basis)})
            self._bases[a] = hit
        return hit

    def term_basis(self, p: int, j: int):
        """Ordered basis of ``K_{p,j}`` as ``(S, standard monomial)`` with block offsets."""
        key = (p, j)
        hit = self._terms.get(key)
        if hit is None:
            basis, offsets, pos = [], {}, 0
            for S in self.subsets[p]:
                b, _ = self.module_basis(j - self.subset_shift(S))
                offsets[S] = pos
                basis.extend((S, t) for t in b)
                pos += len(b)
            hit = (basis, offsets)
            self._terms[key] = hit
        return hit

    def dim(self, p: int, j: int) -> int:
        if p < 0 or p > self.u:
            return 0
        return len(self.term_basis(p, j)[0])

    def _times(self, i: int, t, target_degree: int) -> dict:
        """Coordinates of ``x_i * t`` in the standard basis of ``M_{target_degree}``."""
        key = (i, t)
        hit = self._mult.get(key)
        if hit is None:
            comp, m = t
            prod = {}
            for xm, c in self.xs[i].terms.items():
                k = (comp, mono_mul(xm, m))
                prod[k] = prod.get(k, 0) + c
            nf = self._reducer.reduce({k: v for k, v in prod.items() if v})
            _, index = self.module_basis(target_degree)
            hit = {index[k]: v for k, v in nf.items()}
            self._mult[key] = hit
        return hit

    def differential(self, p: int, j: int) -> list:
        """Rows of ``∂_p`` in degree ``j``: row ``r`` is the image of basis vector ``r``."""
        if p <= 0 or p > self.u:
            return [{} for _ in range(self.dim(p, j))] if 0 <= p <= self.u else []
        basis, _ = self.term_basis(p, j)
        _, offsets = self.term_basis(p - 1, j)
        rows = []
        for S, t in basis:
            row: dict = {}
            a = j - self.subset_shift(S)
            for k, i in enumerate(S):
                T = S[:k] + S[k + 1:]
                off = offsets[T]
                sign = 1 if k % 2 == 0 else -1
                for col, v in self._times(i, t, a + self.weights[i]).items():
                    c = off + col
                    nv = row.get(c, 0) + sign * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            rows.append(row)
        return rows

    def rank(self, p: int, j: int) -> int:
        if p <= 0 or p > self.u:
            return 0
        key = (p, j)
        if key not in self._ranks:
            self._ranks[key] = rank(self.differential(p, j), self.ring.field)
        return self._ranks[key]

    def homology_dim(self, p: int, j: int) -> int:
        return self.dim(p, j) - self.rank(p, j) - self.rank(p + 1, j)

    def complex_euler(self, j: int) -> int:
        return sum((-1) ** p * self.dim(p, j) for p in range(self.u + 1))

    def d_squared_is_zero(self, j: int) -> bool:
        field = self.ring.field
        for p in range(2, self.u + 1):
            comp = mat_vec_compose(self.differential(p, j), self.differential(p - 1, j), field)
            if any(comp):
                return False
        return True


def build_koszul(M: ModulePresentation, xs) -> KoszulComplex:
    return KoszulComplex(M, xs)


@dataclass(frozen=True)
class KoszulReport:
    homology_dims: dict
    totals: dict
    chi: int
    chi_series: LaurentPoly
    degree_window: tuple
    window_slack: int
    retries: int
    certified_by: str = dc_field(default="window")


def expected_chi_series(K: KoszulComplex) -> LaurentPoly:
    chi = poincare(K.module).times_denominator(K.weights)
    if chi is None:
        raise KoszulCertificationError("P_M * prod(1 - t^w) is not a Laurent polynomial")
    return chi


def koszul_homology(K: KoszulComplex, window_slack: int = DEFAULT_SLACK,
                    max_retries: int = DEFAULT_RETRIES) -> KoszulReport:
    """Degreewise homology dimensions with window certification.

    The window runs from the lowest generator degree to the top exponent of
    ``P_M * prod(1 - t^w)`` plus ``window_slack``. A window is accepted when
    the alternating homology sums reproduce that polynomial degree by degree
    and every homology group vanishes in the top ``window_slack`` degrees;
    otherwise the slack doubles, at most ``max_retries`` times.
    """
    M = K.module
    length = total_length(quotient_by_ideal(M, K.xs))
    if not length.is_finite:
        c, i = length.witness
        raise NotGIODError(M.ring.names[i], c)
    chi_poly = expected_chi_series(K)
    if not M.gen_shifts:
        return KoszulReport({}, {p: 0 for p in range(K.u + 1)}, 0, LaurentPoly(), (0, -1),
                            window_slack, 0)
    lo = min(M.gen_shifts)
    top = chi_poly.max_exp if chi_poly else max(M.gen_shifts) + sum(K.weights)
    slack = window_slack
    for attempt in range(max_retries + 1):
        hi = max(top, lo) + slack
        dims = {(p, j): K.homology_dim(p, j) for p in range(K.u + 1) for j in range(lo, hi + 1)}
        series_ok = all(
            sum((-1) ** p * dims[(p, j)] for p in range(K.u + 1)) == chi_poly.coefficient(j)
            for j in range(lo, hi + 1))
        quiet_top = all(dims[(p, j)] == 0
                        for p in range(K.u + 1) for j in range(hi - slack + 1, hi + 1))
        if series_ok and quiet_top:
            totals = {p: sum(dims[(p, j)] for j in range(lo, hi + 1)) for p in range(K.u + 1)}
            chi = sum((-1) ** p * totals[p] for p in totals)
            series = LaurentPoly({j: sum((-1) ** p * dims[(p, j)] for p in range(K.u + 1))
                                  for j in range(lo, hi + 1)})
            return KoszulReport(dims, totals, chi, series, (lo, hi), slack, attempt)
        slack *= 2
    raise KoszulCertificationError(
        f"homology window not certified after {max_retries} retries (last window {lo}..{hi})")


def is_regular_sequence(K: KoszulComplex, report: KoszulReport) -> bool:
    return all(report.totals[p] == 0 for p in range(1, K.u + 1))


def euler_poincare_identity_check(M: ModulePresentation, xs, report: KoszulReport | None = None) -> bool:
    """``chi_series / prod(1 - t^w) == P_M`` as rational series."""
    K = build_koszul(M, xs)
    if report is None:
        report = koszul_homology(K)
    return RationalSeries(report.chi_series, K.weights) == poincare(M)


def koszul_multiplicity(M: ModulePresentation, xs, **kw) -> int:
    return koszul_homology(build_koszul(M, xs), **kw).chi
