"""Weighted polynomial rings k[x_1:d_1, ..., x_n:d_n] and their elements.

Monomials are dense exponent tuples. Polynomials map monomials to nonzero
field elements; :class:`Vector` does the same for elements of a free module,
keyed by ``(component, monomial)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import RingMismatchError
from .field import QQ, Field

MAX_VARS = 16

Monomial = tuple


class _AnyDegree:
    """Degree marker for the zero polynomial, homogeneous of every degree."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ANY_DEGREE"


ANY_DEGREE = _AnyDegree()


@dataclass(frozen=True)
class RingDescriptor:
    field: Field
    names: tuple
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.names) != len(self.weights):
            raise ValueError("one weight per variable is required")
        if len(self.names) > MAX_VARS:
            raise ValueError(f"at most {MAX_VARS} variables are supported")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"variable names must be unique: {self.names}")
        if any(w <= 0 for w in self.weights):
            raise ValueError(f"weights must be positive integers: {self.weights}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def one_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def var_monomial(self, i: int, e: int = 1) -> Monomial:
        m = [0] * self.nvars
        m[i] = e
        return tuple(m)

    def weighted_degree(self, m: Monomial) -> int:
        return weighted_degree(m, self)

    def monomials_of_degree(self, d: int) -> tuple:
        """All monomials of weighted degree ``d``, in ascending term order."""
        return _monomials_of_degree(self.weights, d)

    def var(self, name_or_index) -> Polynomial:
        i = self.names.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return Polynomial(self, {self.var_monomial(i): self.field.one})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.nvars)]

    def const(self, c) -> Polynomial:
        return Polynomial(self, {self.one_monomial(): self.field(c)})

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def monomial(self, m: Monomial, c=1) -> Polynomial:
        return Polynomial(self, {tuple(m): self.field(c)})

    def weight_lcm(self, indices=None) -> int:
        idx = range(self.nvars) if indices is None else indices
        return lcm(*(self.weights[i] for i in idx)) if idx else 1

    def subring(self, indices) -> RingDescriptor:
        return RingDescriptor(self.field,
                              tuple(self.names[i] for i in indices),
                              tuple(self.weights[i] for i in indices))

    def __str__(self):
        vs = " ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"{self.field}[{vs}]"


def polynomial_ring(names, weights=None, field: Field = QQ) -> RingDescriptor:
    """Convenience constructor: ``polynomial_ring("x y", (1, 2))``."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    if weights is None:
        weights = (1,) * len(names)
    return RingDescriptor(field, tuple(names), tuple(weights))


def weighted_degree(m: Monomial, R: RingDescriptor) -> int:
    if len(m) != R.nvars:
        raise ValueError(f"monomial {m} does not have {R.nvars} exponents")
    return sum(e * w for e, w in zip(m, R.weights))


@lru_cache(maxsize=None)
def _monomials_of_degree(weights: tuple, d: int) -> tuple:
    if d < 0:
        return ()
    if not weights:
        return ((),) if d == 0 else ()
    w = weights[-1]
    out = []
    for e in range(d // w + 1):
        for head in _monomials_of_degree(weights[:-1], d - e * w):
            out.append(head + (e,))
    out.sort(key=lambda m: monomial_key(m, weights))
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def monomial_key(m: Monomial, weights: tuple) -> tuple:
    """Sort key realizing weighted degrevlex: larger key means larger monomial."""
    return (sum(e * w for e, w in zip(m, weights)),) + tuple(-e for e in reversed(m))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _check_ring(a, b):
    if a.ring != b.ring:
        raise RingMismatchError(f"operands live in different rings: {a.ring} and {b.ring}")


class Polynomial:
    """Immutable polynomial over a :class:`RingDescriptor`."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingDescriptor, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}

    def _lift(self, other):
        if isinstance(other, Polynomial):
            _check_ring(self, other)
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        _check_ring(self, other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> Polynomial:
        if isinstance(c, Polynomial):
            return self * c
        c = self.ring.field(c)
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = self.ring.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_homogeneous(self):
        """Weighted degree if homogeneous, ``None`` if not, ``ANY_DEGREE`` for 0."""
        degs = {weighted_degree(m, self.ring) for m in self.terms}
        if not degs:
            return ANY_DEGREE
        return degs.pop() if len(degs) == 1 else None

    def homogeneous_components(self) -> dict:
        comps: dict = {}
        for m, c in self.terms.items():
            comps.setdefault(weighted_degree(m, self.ring), {})[m] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(comps.items())}

    def sorted_terms(self) -> list:
        """Terms in descending term order."""
        w = self.ring.weights
        return sorted(self.terms.items(), key=lambda mc: monomial_key(mc[0], w), reverse=True)

    def leading_monomial(self) -> Monomial:
        w = self.ring.weights
        return max(self.terms, key=lambda m: monomial_key(m, w))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_terms([(m, c, "") for m, c in self.sorted_terms()], self.ring.names)


def format_monomial(m: Monomial, names) -> str:
    parts = []
    for e, n in zip(m, names):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def format_terms(terms, names) -> str:
    """Render ``[(monomial, coeff, suffix), ...]`` as ``c*x^a*y^b + ...``."""
    if not terms:
        return "0"
    out = []
    for i, (m, c, suffix) in enumerate(terms):
        ms = "*".join(s for s in (format_monomial(m, names), suffix) if s)
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        if ms:
            body = ms if mag == 1 else f"{mag}*{ms}"
        else:
            body = str(mag)
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


class Vector:
    """Immutable element of a free module ``R^r``; keys are ``(component, monomial)``."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingDescriptor, terms: dict):
        self.ring = ring
        self.terms = {k: c for k, c in terms.items() if c}

    @classmethod
    def from_poly(cls, p: Polynomial, component: int = 0) -> Vector:
        return cls(p.ring, {(component, m): c for m, c in p.terms.items()})

    @classmethod
    def from_columns(cls, ring: RingDescriptor, polys) -> Vector:
        """Vector whose ``i``-th entry is ``polys[i]``."""
        terms = {}
        for i, p in enumerate(polys):
            if isinstance(p, Polynomial):
                _check_ring(p, Vector(ring, {}))
                for m, c in p.terms.items():
                    terms[(i, m)] = c
            elif p:
                terms[(i, ring.one_monomial())] = ring.field(p)
        return cls(ring, terms)

    def __add__(self, other: Vector) -> Vector:
        _check_ring(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Vector(self.ring, out)

    def __neg__(self):
        return Vector(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: Vector) -> Vector:
        return self + (-other)

    def __rmul__(self, p):
        if isinstance(p, Polynomial):
            _check_ring(self, p)
            out: dict = {}
            for m1, c1 in p.terms.items():
                for (comp, m2), c2 in self.terms.items():
                    k = (comp, mono_mul(m1, m2))
                    out[k] = out.get(k, 0) + c1 * c2
            return Vector(self.ring, out)
        c = self.ring.field(p)
        return Vector(self.ring, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, Vector):
            return self.ring == other.ring and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def component(self, i: int) -> Polynomial:
        return Polynomial(self.ring, {m: c for (k, m), c in self.terms.items() if k == i})

    def degrees(self, shifts) -> list:
        """Sorted multiset of term degrees ``wdeg(m) + shifts[component]``."""
        return sorted(weighted_degree(m, self.ring) + shifts[k] for (k, m) in self.terms)

    def is_homogeneous(self, shifts):
        degs = set(self.degrees(shifts))
        if not degs:
            return ANY_DEGREE
        return degs.pop() if len(degs) == 1 else None

    def __repr__(self):
        return f"Vector({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        w = self.ring.weights
        items = sorted(self.terms.items(),
                       key=lambda kc: (monomial_key(kc[0][1], w), -kc[0][0]), reverse=True)
        return format_terms([(m, c, f"e{k + 1}") for (k, m), c in items], self.ring.names)
