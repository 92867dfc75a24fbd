"""Laurent polynomials and Poincaré series in Hilbert–Serre form.

A :class:`RationalSeries` is ``q(t) / prod(1 - t^d for d in denom)`` with
``q`` a Laurent polynomial. The numerator of a module is obtained from the
leading-term module of a Gröbner basis and the pivot recursion for monomial
ideals

    N(I) = N(I + (x)) + t^w(x) * N(I : x).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from math import prod

from .ring import mono_divides


@total_ordering
class NegativeInfinity:
    """Dimension of the zero module; smaller than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf")

    def __repr__(self):
        return "NEG_INF"

    def __str__(self):
        return "-inf"


NEG_INF = NegativeInfinity()


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def format_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LaurentPoly:
    """Finite Laurent polynomial ``sum c_e t^e`` with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        self.coeffs = {int(e): _norm(c) for e, c in coeffs.items() if c}

    @classmethod
    def monomial(cls, e: int, c=1) -> LaurentPoly:
        return cls({e: c})

    @classmethod
    def one_minus_t_power(cls, d: int) -> LaurentPoly:
        return cls({0: 1, d: -1})

    @classmethod
    def from_window(cls, lo: int, values) -> LaurentPoly:
        return cls({lo + i: v for i, v in enumerate(values)})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def _lift(self, other):
        return other if isinstance(other, LaurentPoly) else LaurentPoly({0: other})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = LaurentPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    @property
    def min_exp(self):
        return min(self.coeffs) if self.coeffs else None

    @property
    def max_exp(self):
        return max(self.coeffs) if self.coeffs else None

    def coefficient(self, e: int):
        return self.coeffs.get(e, 0)

    def __call__(self, x):
        x = Fraction(x)
        return _norm(sum((c * x**e for e, c in self.coeffs.items()), Fraction(0)))

    def divide_exact(self, other: LaurentPoly):
        """Quotient ``self / other`` if it is a Laurent polynomial, else None."""
        if not other:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self:
            return LaurentPoly()
        lo_a, lo_b = self.min_exp, other.min_exp
        a = {e - lo_a: Fraction(c) for e, c in self.coeffs.items()}
        b = {e - lo_b: Fraction(c) for e, c in other.coeffs.items()}
        db = max(b)
        lead = b[db]
        quot = {}
        while a:
            da = max(a)
            if da < db:
                return None
            q = a[da] / lead
            quot[da - db] = q
            for e, c in b.items():
                nv = a.get(e + da - db, 0) - q * c
                if nv:
                    a[e + da - db] = nv
                else:
                    a.pop(e + da - db, None)
        return LaurentPoly(quot).shift(lo_a - lo_b)

    def split_one_minus_t(self):
        """``(s, r)`` with ``self = (1 - t)^s * r`` and ``r(1) != 0``."""
        if not self:
            raise ValueError("the zero polynomial has a root of infinite order at 1")
        s, r = 0, self
        factor = LaurentPoly.one_minus_t_power(1)
        while r(1) == 0:
            r = r.divide_exact(factor)
            s += 1
        return s, r

    def items(self):
        return sorted(self.coeffs.items())

    def __repr__(self):
        return f"LaurentPoly({dict(self.items())})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.items()):
            neg = c < 0
            body = f"{format_rational(-c if neg else c)}*t^{e}"
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)


def geometric_coefficients(weights, n: int) -> list:
    """Coefficients of ``1 / prod(1 - t^d)`` in degrees ``0..n``."""
    arr = [0] * (n + 1)
    if n >= 0:
        arr[0] = 1
    for d in weights:
        for i in range(d, n + 1):
            arr[i] += arr[i - d]
    return arr


def denominator_poly(weights) -> LaurentPoly:
    out = LaurentPoly({0: 1})
    for d in weights:
        out = out * LaurentPoly.one_minus_t_power(d)
    return out


class RationalSeries:
    """``numerator / prod(1 - t^d for d in denom_weights)``, kept unreduced."""

    __slots__ = ("numerator", "denom_weights")

    def __init__(self, numerator: LaurentPoly, denom_weights):
        self.numerator = numerator if isinstance(numerator, LaurentPoly) else LaurentPoly(numerator)
        self.denom_weights = tuple(sorted(denom_weights))

    def coefficient(self, j: int):
        return self.expand(j, j)[0]

    def expand(self, lo: int, hi: int) -> list:
        """Series coefficients for degrees ``lo..hi`` inclusive."""
        if hi < lo:
            return []
        q = self.numerator
        if not q:
            return [0] * (hi - lo + 1)
        g = geometric_coefficients(self.denom_weights, hi - q.min_exp)
        out = []
        for j in range(lo, hi + 1):
            total = 0
            for e, c in q.coeffs.items():
                if 0 <= j - e < len(g):
                    total += c * g[j - e]
            out.append(_norm(total))
        return out

    def __add__(self, other: RationalSeries) -> RationalSeries:
        return series_add(self, other)

    def __mul__(self, other):
        if isinstance(other, RationalSeries):
            return series_mul(self, other)
        return RationalSeries(self.numerator * other, self.denom_weights)

    __rmul__ = __mul__

    def shift(self, k: int) -> RationalSeries:
        return scale_by_t_power(self, k)

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return (self.numerator * denominator_poly(other.denom_weights)
                == other.numerator * denominator_poly(self.denom_weights))

    def __hash__(self):
        return hash(dimension_and_degree(self))

    def times_denominator(self, weights) -> LaurentPoly | None:
        """``self * prod(1 - t^d)`` as a Laurent polynomial, or None if not one."""
        return (self.numerator * denominator_poly(weights)).divide_exact(
            denominator_poly(self.denom_weights))

    def __repr__(self):
        return f"RationalSeries({self.numerator!r}, {self.denom_weights})"

    def __str__(self):
        return render_series(self)


def render_series(P: RationalSeries) -> str:
    num = str(P.numerator)
    if not P.denom_weights:
        return num
    den = "".join(f"(1-t^{d})" for d in P.denom_weights)
    return f"({num})/({den})"


def _common_denominator(a, b) -> tuple:
    ca, cb = Counter(a), Counter(b)
    return tuple(sorted((ca | cb).elements()))


def _lift_to(P: RationalSeries, weights) -> LaurentPoly:
    extra = Counter(weights)
    extra.subtract(Counter(P.denom_weights))
    return P.numerator * denominator_poly(extra.elements())


def series_add(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    den = _common_denominator(a.denom_weights, b.denom_weights)
    return RationalSeries(_lift_to(a, den) + _lift_to(b, den), den)


def series_mul(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    return RationalSeries(a.numerator * b.numerator, a.denom_weights + b.denom_weights)


def scale_by_t_power(a: RationalSeries, k: int) -> RationalSeries:
    return RationalSeries(a.numerator.shift(k), a.denom_weights)


@dataclass(frozen=True)
class DimensionReport:
    d1: object
    degree: Fraction
    numerator_reduced: LaurentPoly

    @property
    def is_zero_module(self) -> bool:
        return self.d1 is NEG_INF


def dimension_and_degree(P: RationalSeries) -> DimensionReport:
    """Pole order at ``t = 1`` and ``lim (1-t)^D P(t)``."""
    if not P.numerator:
        return DimensionReport(NEG_INF, Fraction(0), LaurentPoly())
    s, r = P.numerator.split_one_minus_t()
    n = len(P.denom_weights)
    if s > n:
        raise ValueError(f"numerator vanishes to order {s} > {n} at t=1; not a module series")
    degree = Fraction(r(1)) / prod(P.denom_weights)
    return DimensionReport(n - s, degree, r)


# --- monomial ideals -------------------------------------------------------

def minimalize(monos) -> tuple:
    """Minimal generators of the monomial ideal spanned by ``monos``, canonically sorted."""
    out: list = []
    for m in sorted(set(monos), key=lambda m: (sum(m), m)):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


def _pairwise_coprime(gens) -> bool:
    seen = 0
    for g in gens:
        mask = 0
        for i, e in enumerate(g):
            if e:
                mask |= 1 << i
        if mask & seen:
            return False
        seen |= mask
    return True


def _choose_pivot(gens, strategy: str) -> int:
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[i]) for i in range(n)]
    if strategy == "frequent":
        best = max(counts)
        return counts.index(best)
    # any variable that occurs in a generator shared by two supports works
    candidates = [i for i in range(n) if counts[i] >= 2] or [i for i in range(n) if counts[i]]
    return candidates[0] if strategy == "first" else candidates[-1]


@lru_cache(maxsize=1 << 15)
def _numerator(gens: tuple, weights: tuple, strategy: str) -> LaurentPoly:
    if not gens:
        return LaurentPoly({0: 1})
    if any(not any(g) for g in gens):
        return LaurentPoly()
    if _pairwise_coprime(gens):
        out = LaurentPoly({0: 1})
        for g in gens:
            out = out * LaurentPoly.one_minus_t_power(sum(e * w for e, w in zip(g, weights)))
        return out
    x = _choose_pivot(gens, strategy)
    unit = tuple(1 if i == x else 0 for i in range(len(weights)))
    colon = minimalize(tuple(e - 1 if (i == x and e) else e for i, e in enumerate(g)) for g in gens)
    plus = minimalize([g for g in gens if not g[x]] + [unit])
    return _numerator(plus, weights, strategy) + _numerator(colon, weights, strategy).shift(weights[x])


def hilbert_numerator(gens, weights, pivot: str = "frequent") -> LaurentPoly:
    """Numerator of the Poincaré series of ``k[x]/I`` over ``prod(1 - t^w_i)``.

    ``gens`` are exponent tuples generating the monomial ideal ``I``.
    ``pivot`` picks the recursion variable: ``"frequent"``, ``"first"`` or ``"last"``.
    """
    if pivot not in ("frequent", "first", "last"):
        raise ValueError(f"unknown pivot strategy {pivot!r}")
    return _numerator(minimalize(gens), tuple(weights), pivot)


def finite_quotient_length(gens, weights) -> int:
    """k-dimension of ``k[x]/I`` when finite (every variable has a pure power in ``I``)."""
    num = hilbert_numerator(gens, weights)
    if not num:
        return 0
    quotient = num.divide_exact(denominator_poly(weights))
    if quotient is None:
        raise ValueError("monomial quotient has infinite length")
    return quotient(1)


def poincare(M) -> RationalSeries:
    """Poincaré series of a :class:`~gradus.grmod.ModulePresentation`."""
    weights = M.ring.weights
    if not M.gen_shifts:
        return RationalSeries(LaurentPoly(), weights)
    G = M.groebner()
    q = LaurentPoly()
    for c, a in enumerate(M.gen_shifts):
        q = q + hilbert_numerator(G.leading_monomials(c), weights).shift(a)
    return RationalSeries(q, weights)
