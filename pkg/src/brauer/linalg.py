"""Exact sparse Gaussian elimination over the coefficient fields.

Rows are sparse {column: coefficient} dicts fed incrementally into an
:class:`EliminationBasis`, which maintains an echelonized row space with a
deterministic result for a deterministic feed order.  Over the rationals,
rows are rescaled to primitive integer vectors and combined fraction-free
(cross-multiplication followed by content removal), so no rational
arithmetic happens during elimination; prime fields use field arithmetic
directly.  Ranks, reduced row echelon forms, and nullspace bases are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .rings import PrimeField, Rationals, RingError


class LinAlgError(ValueError):
    """Raised for unsupported rings or malformed rows."""


def _row_content(row):
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            break
    return g


class EliminationBasis:
    """Incrementally reduced row space over an exact field."""

    def __init__(self, ring):
        if not isinstance(ring, (Rationals, PrimeField)):
            raise LinAlgError("elimination requires a field: %s" % ring)
        self.ring = ring
        self._int_mode = isinstance(ring, Rationals)
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def pivot_columns(self):
        return sorted(self.pivots)

    def _prepare(self, row):
        if self._int_mode:
            entries = {}
            scale = 1
            for c, v in row.items():
                f = Fraction(v)
                if f:
                    entries[c] = f
                    scale = scale * f.denominator // gcd(scale, f.denominator)
            out = {c: int(f * scale) for c, f in entries.items()}
            g = _row_content(out)
            if g > 1:
                out = {c: v // g for c, v in out.items()}
            return out
        ring = self.ring
        return {c: v for c, v in ((c, ring.from_int(v) if isinstance(v, int) else v)
                                  for c, v in row.items()) if not ring.is_zero(v)}

    def _combine_int(self, row, lead, piv):
        a, b = row[lead], piv[lead]
        g = gcd(a, b)
        ra, pa = b // g, a // g
        out = dict()
        for c, v in row.items():
            out[c] = v * ra
        for c, v in piv.items():
            nv = out.get(c, 0) - v * pa
            if nv:
                out[c] = nv
            else:
                out.pop(c, None)
        g = _row_content(out)
        if g > 1:
            out = {c: v // g for c, v in out.items()}
        return out

    def _combine_field(self, row, lead, piv):
        ring = self.ring
        factor = ring.exact_div(row[lead], piv[lead])
        out = dict(row)
        for c, v in piv.items():
            nv = ring.sub(out.get(c, ring.zero()), ring.mul(factor, v))
            if ring.is_zero(nv):
                out.pop(c, None)
            else:
                out[c] = nv
        return out

    def add_row(self, row):
        """Reduce a row against the basis; store it if independent.

        Returns True when the row increased the rank.
        """
        row = self._prepare(row)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                if self._int_mode and row[lead] < 0:
                    row = {c: -v for c, v in row.items()}
                self.pivots[lead] = row
                return True
            if self._int_mode:
                row = self._combine_int(row, lead, piv)
            else:
                row = self._combine_field(row, lead, piv)
        return False

    def contains(self, row):
        """Whether the row lies in the current row space (no mutation)."""
        row = self._prepare(row)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return False
            if self._int_mode:
                row = self._combine_int(row, lead, piv)
            else:
                row = self._combine_field(row, lead, piv)
        return True

    def reduced_rows(self):
        """Pivot rows in reduced row echelon form (leading ones, back-reduced),
        keyed by pivot column, with field coefficients."""
        ring = self.ring
        rows = {}
        for p in sorted(self.pivots, reverse=True):
            raw = self.pivots[p]
            if self._int_mode:
                lead = raw[p]
                row = {c: Fraction(v, lead) for c, v in raw.items()}
            else:
                lead = raw[p]
                row = {c: ring.exact_div(v, lead) for c, v in raw.items()}
            for q in [c for c in row if c != p and c in rows]:
                factor = row.pop(q)
                for c, v in rows[q].items():
                    if c == q:
                        continue
                    if self._int_mode:
                        nv = row.get(c, Fraction(0)) - factor * v
                        if nv:
                            row[c] = nv
                        else:
                            row.pop(c, None)
                    else:
                        nv = ring.sub(row.get(c, ring.zero()), ring.mul(factor, v))
                        if ring.is_zero(nv):
                            row.pop(c, None)
                        else:
                            row[c] = nv
            rows[p] = row
        return rows

    def nullspace(self, columns):
        """Basis of {x : R x = 0} for the fed row space R, over the given
        column universe, one vector per free column in column order.

        Over the rationals each vector is scaled to primitive integers with
        the free-column entry positive.
        """
        columns = list(columns)
        rows = self.reduced_rows()
        basis = []
        for f in columns:
            if f in rows:
                continue
            vec = {f: self.ring.one() if not self._int_mode else Fraction(1)}
            for p, row in rows.items():
                if f in row:
                    if self._int_mode:
                        vec[p] = -row[f]
                    else:
                        vec[p] = self.ring.neg(row[f])
            if self._int_mode:
                scale = 1
                for v in vec.values():
                    scale = scale * v.denominator // gcd(scale, v.denominator)
                ints = {c: int(v * scale) for c, v in vec.items()}
                g = _row_content(ints)
                if g > 1:
                    ints = {c: v // g for c, v in ints.items()}
                vec = ints
            basis.append(vec)
        return basis


def rank_of_rows(rows, ring):
    basis = EliminationBasis(ring)
    for row in rows:
        basis.add_row(row)
    return basis.rank


def nullspace_of_rows(rows, columns, ring):
    basis = EliminationBasis(ring)
    for row in rows:
        basis.add_row(row)
    return basis.nullspace(columns)
