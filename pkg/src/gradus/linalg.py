"""Exact sparse row echelon forms.

Rows are ``{column: value}`` dicts. Over Q the elimination is fraction-free:
rows are scaled to primitive integer vectors and combined by cross
multiplication, so no rational arithmetic happens inside the loop. Over F_p
plain modular elimination is used.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .field import Field


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g in (1, -1):
        return row if g == 1 else {k: -v for k, v in row.items()}
    return {k: v // g for k, v in row.items()}


def _integer_row(row: dict) -> dict:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {k: int(v * den) for k, v in row.items() if v}
    return _primitive(out) if out else out


class RowEchelon:
    """Incrementally maintained row echelon form.

    Each stored row is keyed by its pivot, which is its smallest column.
    """

    def __init__(self, field: Field):
        self.field = field
        self.rows: dict = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list:
        return sorted(self.rows)

    def reduce(self, row: dict) -> dict:
        """Eliminate every pivot column that leads ``row``; returns what is left."""
        if self.field.is_rational:
            return self._reduce_q(_integer_row(row))
        p = self.field.p
        row = {k: int(getattr(v, "value", v)) % p for k, v in row.items()}
        return self._reduce_p({k: v for k, v in row.items() if v}, p)

    def add(self, row: dict) -> bool:
        """Insert ``row``; returns True when it was independent of the stored rows."""
        r = self.reduce(row)
        if not r:
            return False
        self.rows[min(r)] = r
        return True

    def _reduce_q(self, row: dict) -> dict:
        rows = self.rows
        while row:
            c = min(row)
            prow = rows.get(c)
            if prow is None:
                return row
            a, b = row[c], prow[c]
            g = gcd(a, b)
            ma, mb = b // g, a // g
            new = {k: ma * v for k, v in row.items()}
            for k, v in prow.items():
                nv = new.get(k, 0) - mb * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
        return row

    def _reduce_p(self, row: dict, p: int) -> dict:
        rows = self.rows
        while row:
            c = min(row)
            prow = rows.get(c)
            if prow is None:
                inv = pow(row[c], -1, p)
                return {k: v * inv % p for k, v in row.items()}
            f = row[c]
            new = dict(row)
            for k, v in prow.items():
                nv = (new.get(k, 0) - f * v) % p
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = new
        return row


def rank(rows, field: Field) -> int:
    ech = RowEchelon(field)
    for r in rows:
        if r:
            ech.add(r)
    return ech.rank


def complement_columns(rows, ncols: int, field: Field) -> list:
    """Columns not hit by a pivot; their unit vectors span a complement of the row space."""
    ech = RowEchelon(field)
    for r in rows:
        if r:
            ech.add(r)
    piv = set(ech.rows)
    return [c for c in range(ncols) if c not in piv]


def mat_vec_compose(a_rows: list, b_rows: list, field: Field) -> list:
    """Rows of the composite ``v -> b(a(v))`` for row-style sparse matrices.

    ``a_rows[i]`` is the image of basis vector ``i``; ``b_rows[j]`` that of ``j``.
    """
    zero = field.zero
    out = []
    for ra in a_rows:
        acc: dict = {}
        for j, v in ra.items():
            for k, w in b_rows[j].items():
                acc[k] = acc.get(k, zero) + v * w
        out.append({k: v for k, v in acc.items() if v})
    return out
