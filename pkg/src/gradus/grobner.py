"""Gröbner bases for homogeneous submodules of free graded modules.

The term order is weighted degrevlex on monomials, extended to ``R^r``
term-over-position; among equal monomials the lower component index is the
larger term. The generator ``e_c`` of the free module sits in degree
``shifts[c]``, so a term ``m*e_c`` has degree ``wdeg(m) + shifts[c]``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field

from .errors import InhomogeneousError
from .ring import (
    Polynomial,
    RingDescriptor,
    Vector,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomial_key,
    weighted_degree,
)


def term_key(term, weights):
    comp, m = term
    return (monomial_key(m, weights), -comp)


def _leading(f: dict, weights) -> tuple:
    return max(f, key=lambda t: term_key(t, weights))


def _mul_term(f: dict, m, c) -> dict:
    return {(k, mono_mul(m, fm)): c * v for (k, fm), v in f.items()}


def _axpy(f: dict, g: dict, c) -> None:
    """In place ``f -= c * g``."""
    for k, v in g.items():
        nv = f.get(k, 0) - c * v
        if nv:
            f[k] = nv
        else:
            f.pop(k, None)


class _Reducer:
    """Division by a list of monic elements, indexed by leading component."""

    def __init__(self, weights):
        self.weights = weights
        self.elements: list = []
        self.leads: list = []
        self.by_comp: dict = {}

    def add(self, f: dict, lead) -> int:
        idx = len(self.elements)
        self.elements.append(f)
        self.leads.append(lead)
        self.by_comp.setdefault(lead[0], []).append(idx)
        return idx

    def find_divisor(self, term, skip=None):
        comp, m = term
        for i in self.by_comp.get(comp, ()):
            if i != skip and mono_divides(self.leads[i][1], m):
                return i
        return None

    def reduce(self, f: dict, skip=None) -> dict:
        """Full reduction: no term of the result is divisible by a leading term."""
        w = self.weights
        f = dict(f)
        rem: dict = {}
        while f:
            t = _leading(f, w)
            c = f[t]
            i = self.find_divisor(t, skip)
            if i is None:
                rem[t] = c
                del f[t]
                continue
            q = mono_div(t[1], self.leads[i][1])
            # elements are monic, so c * q * g cancels t exactly
            _axpy(f, _mul_term(self.elements[i], q, 1), c)
        return rem


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingDescriptor
    shifts: tuple
    elements: tuple
    leads: tuple = dc_field(compare=False)

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def leading_monomials(self, comp: int) -> list:
        return [m for (c, m) in self.leads if c == comp]

    def _reducer(self) -> _Reducer:
        red = _Reducer(self.ring.weights)
        for g, lt in zip(self.elements, self.leads):
            red.add(g.terms, lt)
        return red

    def normal_form(self, f):
        return normal_form(f, self)

    def pure_powers(self) -> list:
        """``out[c][i]``: least k with ``x_i^k e_c`` a leading term, or None."""
        n = self.ring.nvars
        out = [[None] * n for _ in self.shifts]
        for c, m in self.leads:
            support = [i for i, e in enumerate(m) if e]
            if len(support) == 1:
                i = support[0]
                cur = out[c][i]
                if cur is None or m[i] < cur:
                    out[c][i] = m[i]
            elif not support:
                out[c] = [0] * n
        return out


def _as_dict(f) -> dict:
    if isinstance(f, Polynomial):
        return {(0, m): c for m, c in f.terms.items()}
    return dict(f.terms)


def buchberger(gens, shifts=None, ring: RingDescriptor | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the submodule generated by ``gens``.

    ``gens`` may hold :class:`Vector` or :class:`Polynomial` (component 0)
    entries. Every generator must be homogeneous for ``shifts``.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("ring is required when gens is empty")
        ring = gens[0].ring
    dicts = [_as_dict(g) for g in gens]
    if shifts is None:
        rank = 1 + max((c for d in dicts for (c, _) in d), default=0)
        shifts = (0,) * rank
    shifts = tuple(shifts)
    for i, (g, d) in enumerate(zip(gens, dicts)):
        if g.ring != ring:
            raise ValueError(f"generator {i} lives in {g.ring}, expected {ring}")
        degs = sorted(weighted_degree(m, ring) + shifts[c] for (c, m) in d)
        if len(set(degs)) > 1:
            raise InhomogeneousError(i, degs)

    w = ring.weights
    field = ring.field
    red = _Reducer(w)
    if all(len(d) <= 1 for d in dicts):
        # monomial submodule: every S-polynomial vanishes
        for d in dicts:
            if d:
                (t, c), = d.items()
                red.add({t: field.one}, t)
        return _reduced(red, ring, shifts)
    pairs: set = set()
    queue: list = []
    single_component = len(shifts) == 1

    def monic(f: dict):
        lt = _leading(f, w)
        inv = field.inverse(f[lt])
        return {k: v * inv for k, v in f.items()}, lt

    def insert(f: dict):
        f, lt = monic(f)
        idx = red.add(f, lt)
        for i in red.by_comp[lt[0]]:
            if i != idx:
                pairs.add((i, idx))
                heapq.heappush(queue, (pair_degree((i, idx)), idx, i))

    def pair_degree(p):
        i, j = p
        c, _ = red.leads[i]
        L = mono_lcm(red.leads[i][1], red.leads[j][1])
        return weighted_degree(L, ring) + shifts[c]

    for d in dicts:
        r = red.reduce(d) if d else d
        if r:
            insert(r)

    while queue:
        _, j, i = heapq.heappop(queue)
        p = (i, j)
        if p not in pairs:
            continue
        pairs.discard(p)
        i, j = p
        ci, mi = red.leads[i]
        mj = red.leads[j][1]
        if single_component and mono_coprime(mi, mj):
            continue
        L = mono_lcm(mi, mj)
        if _chain_criterion(red, pairs, i, j, ci, L):
            continue
        s = _mul_term(red.elements[i], mono_div(L, mi), 1)
        _axpy(s, _mul_term(red.elements[j], mono_div(L, mj), 1), 1)
        if not s:
            continue
        r = red.reduce(s)
        if r:
            insert(r)

    return _reduced(red, ring, shifts)


def _chain_criterion(red: _Reducer, pairs: set, i: int, j: int, comp: int, L) -> bool:
    for k in red.by_comp[comp]:
        if k == i or k == j:
            continue
        if not mono_divides(red.leads[k][1], L):
            continue
        if (min(i, k), max(i, k)) in pairs or (min(j, k), max(j, k)) in pairs:
            continue
        return True
    return False


def _reduced(red: _Reducer, ring, shifts) -> GroebnerBasis:
    w = ring.weights
    order = sorted(range(len(red.elements)), key=lambda i: term_key(red.leads[i], w))
    keep = []
    for i in order:
        c, m = red.leads[i]
        if not any(red.leads[k][0] == c and mono_divides(red.leads[k][1], m) for k in keep):
            keep.append(i)
    minimal = _Reducer(w)
    for i in keep:
        minimal.add(red.elements[i], red.leads[i])
    elements = []
    for pos in range(len(keep)):
        g = minimal.reduce(minimal.elements[pos], skip=pos)
        elements.append(Vector(ring, g))
    return GroebnerBasis(ring, tuple(shifts), tuple(elements),
                         tuple(minimal.leads))


def normal_form(f, G: GroebnerBasis):
    """Remainder of ``f`` on division by ``G``; same type as ``f``."""
    if isinstance(f, Polynomial):
        if G.rank != 1:
            raise ValueError("polynomial input needs a rank-1 basis")
        r = G._reducer().reduce(_as_dict(f))
        return Polynomial(G.ring, {m: c for (_, m), c in r.items()})
    return Vector(G.ring, G._reducer().reduce(dict(f.terms)))


def standard_monomials_up_to(G: GroebnerBasis, shifts, J: int) -> dict:
    """``{degree: [(component, monomial), ...]}`` for every degree from ``min(shifts)`` to ``J``.

    Each list is a k-basis of the quotient's component in that degree.
    """
    shifts = tuple(shifts)
    if not shifts:
        return {}
    lo = min(shifts)
    out = {d: [] for d in range(lo, J + 1)}
    leads = [G.leading_monomials(c) for c in range(len(shifts))]
    for d in range(lo, J + 1):
        for c, a in enumerate(shifts):
            for m in G.ring.monomials_of_degree(d - a):
                if not any(mono_divides(l, m) for l in leads[c]):
                    out[d].append((c, m))
    return out


def standard_monomials_in_degree(G: GroebnerBasis, d: int) -> list:
    out = []
    for c, a in enumerate(G.shifts):
        lm = G.leading_monomials(c)
        for m in G.ring.monomials_of_degree(d - a):
            if not any(mono_divides(l, m) for l in lm):
                out.append((c, m))
    return out
