"""Tensor-representation functor for the orthogonal and symplectic families.

A group spec fixes a family (orthogonal ``O(m)`` with a symmetric bilinear
form, or symplectic ``Sp(m)`` with an alternating one, ``m`` even), the
dimension ``m``, the form matrix, and the coefficient field.  Every diagram
``(k, l)`` then maps to an exact ``m^l x m^k`` matrix: through strands
contract to Kronecker deltas, bottom arcs to form coefficients, top arcs to
dual-pairing coefficients, the whole weighted by the form's sign raised to
the diagram's crossing count.  The map is functorial (composition goes to
matrix product, juxtaposition to Kronecker product) and kills every loop
factor ``delta`` at the numeric value ``eps * m``.

Two independent evaluators are provided: :func:`functor_matrix` contracts a
diagram directly cell by cell, while :func:`functor_matrix_layered` composes
the layer matrices of a synthesized generator word.  They must agree on
every input; the verification suites compare them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .diagram import Diagram, closure_loops, crossing_count
from .linear import Morphism, specialize_delta
from .report import check_bool
from .rings import PolynomialsInDelta, PrimeField, Rationals, QQ
from .words import synthesize_word

DEFAULT_MAX_CELLS = 10 ** 7


class FunctorError(ValueError):
    """Raised for invalid group data or out-of-budget matrix requests."""


def max_cells():
    """Densest matrix cell count allowed, overridable via BRAUER_MAX_CELLS."""
    raw = os.environ.get("BRAUER_MAX_CELLS")
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        value = int(raw)
    except ValueError:
        raise FunctorError("BRAUER_MAX_CELLS must be an integer: %r" % raw)
    if value <= 0:
        raise FunctorError("BRAUER_MAX_CELLS must be positive: %r" % raw)
    return value


def guard_cells(cells):
    limit = max_cells()
    if cells > limit:
        raise FunctorError(
            "computation needs %d matrix cells, above the limit %d; "
            "raise BRAUER_MAX_CELLS to allow it" % (cells, limit))


@dataclass(frozen=True)
class GroupSpec:
    """Family, dimension, sign, coefficient field, and form matrices."""

    family: str
    m: int
    eps: int
    ring: object
    gram: tuple
    dual_change: tuple

    def label(self):
        name = "O" if self.family == "orthogonal" else "Sp"
        suffix = "" if isinstance(self.ring, Rationals) else " over %s" % self.ring.name
        return "%s(%d)%s" % (name, self.m, suffix)

    def delta_value(self):
        """The loop value eps * m as an element of the coefficient field."""
        return self.ring.from_int(self.eps * self.m)


_FAMILY_ALIASES = {
    "o": "orthogonal",
    "orthogonal": "orthogonal",
    "sp": "symplectic",
    "symplectic": "symplectic",
}


def group_spec(family, m, modulus=None, allow_small_modulus=False):
    """Build the group data for ``O(m)`` or ``Sp(m)`` (``m`` even for Sp).

    ``modulus`` switches the coefficient field from the rationals to the
    prime field of that order; the characteristic must be at least ``m + 2``
    (the range where the characteristic-zero kernel statements persist)
    unless ``allow_small_modulus`` is set.
    """
    key = _FAMILY_ALIASES.get(str(family).lower())
    if key is None:
        raise FunctorError("unknown family %r (use 'o' or 'sp')" % (family,))
    m = int(m)
    if m < 1:
        raise FunctorError("dimension must be positive: %d" % m)
    if modulus is None:
        ring = QQ
    else:
        ring = PrimeField(modulus)
        if modulus < m + 2 and not allow_small_modulus:
            raise FunctorError(
                "modulus %d is below m + 2 = %d, outside the guaranteed "
                "range; pass allow_small_modulus to proceed" % (modulus, m + 2))
    one, zero = ring.one(), ring.zero()
    if key == "orthogonal":
        eps = 1
        gram = tuple(tuple(one if i == j else zero for j in range(m)) for i in range(m))
        dual = gram
    else:
        if m % 2:
            raise FunctorError("symplectic dimension must be even: %d" % m)
        eps = -1
        n = m // 2
        minus = ring.neg(one)
        gram = []
        for i in range(m):
            row = [zero] * m
            if i < n:
                row[n + i] = one
            else:
                row[i - n] = minus
            gram.append(tuple(row))
        gram = tuple(gram)
        dual = tuple(tuple(ring.neg(v) for v in row) for row in gram)
    return GroupSpec(family=key, m=m, eps=eps, ring=ring, gram=gram, dual_change=dual)


class ExactMatrix:
    """Immutable sparse matrix over an exact coefficient ring."""

    __slots__ = ("rows", "cols", "ring", "entries")

    def __init__(self, rows, cols, ring, entries):
        object.__setattr__(self, "rows", int(rows))
        object.__setattr__(self, "cols", int(cols))
        object.__setattr__(self, "ring", ring)
        clean = {}
        for (i, j), v in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise FunctorError("entry (%d, %d) outside %dx%d" % (i, j, rows, cols))
            if not ring.is_zero(v):
                clean[(i, j)] = v
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def zero(cls, rows, cols, ring):
        return cls(rows, cols, ring, {})

    @classmethod
    def identity(cls, n, ring):
        one = ring.one()
        return cls(n, n, ring, {(i, i): one for i in range(n)})

    @classmethod
    def from_rows(cls, ring, data):
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise FunctorError("ragged rows")
            for j, v in enumerate(row):
                entries[(i, j)] = v
        return cls(rows, cols, ring, entries)

    def get(self, i, j):
        return self.entries.get((i, j), self.ring.zero())

    def nnz(self):
        return len(self.entries)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols) or self.ring != other.ring:
            return False
        if set(self.entries) != set(other.entries):
            return False
        return all(self.ring.eq(v, other.entries[key]) for key, v in self.entries.items())

    def __hash__(self):
        raise TypeError("ExactMatrix is not hashable")

    def __repr__(self):
        return "ExactMatrix(%dx%d over %s, %d nonzero)" % (
            self.rows, self.cols, self.ring.name, len(self.entries))

    def add(self, other):
        self._match(other)
        ring = self.ring
        entries = dict(self.entries)
        for key, v in other.entries.items():
            entries[key] = ring.add(entries.get(key, ring.zero()), v)
        return ExactMatrix(self.rows, self.cols, ring, entries)

    def sub(self, other):
        return self.add(other.neg())

    def neg(self):
        ring = self.ring
        return ExactMatrix(self.rows, self.cols, ring,
                           {k: ring.neg(v) for k, v in self.entries.items()})

    def scale(self, c):
        ring = self.ring
        return ExactMatrix(self.rows, self.cols, ring,
                           {k: ring.mul(c, v) for k, v in self.entries.items()})

    def _match(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise FunctorError("shape mismatch: %dx%d vs %dx%d"
                               % (self.rows, self.cols, other.rows, other.cols))
        if self.ring != other.ring:
            raise FunctorError("ring mismatch: %s vs %s" % (self.ring.name, other.ring.name))

    def mul(self, other):
        """Matrix product self @ other."""
        if self.ring != other.ring:
            raise FunctorError("ring mismatch: %s vs %s" % (self.ring.name, other.ring.name))
        if self.cols != other.rows:
            raise FunctorError("inner dimension mismatch: %d vs %d" % (self.cols, other.rows))
        ring = self.ring
        by_row = {}
        for (j, k), v in other.entries.items():
            by_row.setdefault(j, []).append((k, v))
        entries = {}
        for (i, j), a in self.entries.items():
            for k, b in by_row.get(j, ()):
                key = (i, k)
                cur = entries.get(key)
                term = ring.mul(a, b)
                entries[key] = term if cur is None else ring.add(cur, term)
        return ExactMatrix(self.rows, other.cols, ring, entries)

    def tensor(self, other):
        """Kronecker product, left factor most significant."""
        if self.ring != other.ring:
            raise FunctorError("ring mismatch: %s vs %s" % (self.ring.name, other.ring.name))
        ring = self.ring
        entries = {}
        r2, c2 = other.rows, other.cols
        for (i1, j1), a in self.entries.items():
            for (i2, j2), b in other.entries.items():
                entries[(i1 * r2 + i2, j1 * c2 + j2)] = ring.mul(a, b)
        return ExactMatrix(self.rows * other.rows, self.cols * other.cols, ring, entries)

    def transpose(self):
        return ExactMatrix(self.cols, self.rows, self.ring,
                           {(j, i): v for (i, j), v in self.entries.items()})

    def trace(self):
        if self.rows != self.cols:
            raise FunctorError("trace of a non-square %dx%d matrix" % (self.rows, self.cols))
        ring = self.ring
        total = ring.zero()
        for (i, j), v in self.entries.items():
            if i == j:
                total = ring.add(total, v)
        return total


def matrix_to_json(mat):
    entries = [[i, j, mat.ring.fmt(v)] for (i, j), v in sorted(mat.entries.items())]
    return {"rows": mat.rows, "cols": mat.cols, "ring": mat.ring.name, "entries": entries}


def matrix_from_json(obj):
    from .rings import ring_from_name

    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        ring = ring_from_name(obj["ring"])
        raw = obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FunctorError("malformed matrix object: %s" % exc)
    entries = {}
    for item in raw:
        i, j, text = int(item[0]), int(item[1]), item[2]
        entries[(i, j)] = ring.parse(text)
    return ExactMatrix(rows, cols, ring, entries)


def generator_matrices(spec):
    """Matrices of the four generating pictures: identity strand ``I``,
    crossing ``X``, arc ``A`` (pairing row), and cup ``U`` (coevaluation
    column)."""
    m, ring, eps = spec.m, spec.ring, spec.eps
    eps_elt = ring.from_int(eps)
    ident = ExactMatrix.identity(m, ring)
    swap = {}
    for a in range(m):
        for b in range(m):
            swap[(b * m + a, a * m + b)] = eps_elt
    x_mat = ExactMatrix(m * m, m * m, ring, swap)
    a_mat = ExactMatrix(1, m * m, ring,
                        {(0, a * m + b): v
                         for a, row in enumerate(spec.gram)
                         for b, v in enumerate(row) if not ring.is_zero(v)})
    u_mat = ExactMatrix(m * m, 1, ring,
                        {(a * m + b, 0): v
                         for a, row in enumerate(spec.dual_change)
                         for b, v in enumerate(row) if not ring.is_zero(v)})
    return {"I": ident, "X": x_mat, "A": a_mat, "U": u_mat}


def layer_matrix(lay, spec):
    """Matrix of one word layer: identity strands left and right of one
    generating picture."""
    gens = generator_matrices(spec)
    mid = gens[lay.gen]
    mat = mid
    if lay.left:
        mat = ExactMatrix.identity(spec.m ** lay.left, spec.ring).tensor(mat)
    if lay.right:
        mat = mat.tensor(ExactMatrix.identity(spec.m ** lay.right, spec.ring))
    return mat


@lru_cache(maxsize=1 << 14)
def _diagram_matrix(d, spec):
    m, ring = spec.m, spec.ring
    k, l = d.k, d.l
    guard_cells(m ** (k + l))
    throughs, bottoms, tops = [], [], []
    for a, b in d.pairs:
        if b < k:
            bottoms.append((a, b))
        elif a >= k:
            tops.append((a - k, b - k))
        else:
            throughs.append((a, b - k))
    sign = ring.power(ring.from_int(spec.eps), crossing_count(d))
    gram_cells = [(i, j, v) for i, row in enumerate(spec.gram)
                  for j, v in enumerate(row) if not ring.is_zero(v)]
    dual_cells = [(i, j, v) for i, row in enumerate(spec.dual_change)
                  for j, v in enumerate(row) if not ring.is_zero(v)]
    pow_k = [m ** (k - 1 - a) for a in range(k)]
    pow_l = [m ** (l - 1 - b) for b in range(l)]
    entries = {}
    for thr in product(range(m), repeat=len(throughs)):
        for bot in product(gram_cells, repeat=len(bottoms)):
            for top in product(dual_cells, repeat=len(tops)):
                val = sign
                row = 0
                col = 0
                for (a, b), t in zip(throughs, thr):
                    col += t * pow_k[a]
                    row += t * pow_l[b]
                for (a, a2), (i, j, v) in zip(bottoms, bot):
                    col += i * pow_k[a] + j * pow_k[a2]
                    val = ring.mul(val, v)
                for (b, b2), (i, j, v) in zip(tops, top):
                    row += i * pow_l[b] + j * pow_l[b2]
                    val = ring.mul(val, v)
                if not ring.is_zero(val):
                    entries[(row, col)] = val
    return ExactMatrix(m ** l, m ** k, ring, entries)


def _morphism_to_spec_field(x, spec):
    """Check a morphism's scalars fit the group: coefficients must live in
    the spec's field and the loop value must be eps * m there.  Symbolic
    morphisms over a rational field are specialized at eps * m."""
    ring = spec.ring
    if x.delta is None:
        if not isinstance(x.ring, PolynomialsInDelta):
            raise FunctorError("symbolic morphism over unexpected ring %s" % x.ring.name)
        if not isinstance(ring, Rationals):
            raise FunctorError(
                "cannot evaluate a symbolic morphism over %s; specialize and "
                "reduce it first" % ring.name)
        return specialize_delta(x, Fraction(spec.eps * spec.m))
    if x.ring != ring:
        raise FunctorError("morphism ring %s does not match group field %s"
                           % (x.ring.name, ring.name))
    if not ring.eq(x.delta, spec.delta_value()):
        raise FunctorError(
            "morphism loop value %s does not match the group's %s"
            % (ring.fmt(x.delta), ring.fmt(spec.delta_value())))
    return x


def functor_matrix(x, spec):
    """Exact matrix of a diagram or morphism under the group's tensor
    representation (direct contraction)."""
    if isinstance(x, Diagram):
        return _diagram_matrix(x, spec)
    if not isinstance(x, Morphism):
        raise FunctorError("expected a Diagram or Morphism, got %r" % (x,))
    x = _morphism_to_spec_field(x, spec)
    ring = spec.ring
    out = ExactMatrix.zero(spec.m ** x.l, spec.m ** x.k, ring)
    for d in x.support():
        out = out.add(_diagram_matrix(d, spec).scale(x.coeff(d)))
    return out


def functor_matrix_layered(x, spec):
    """Same matrix as :func:`functor_matrix`, computed independently by
    composing the layer matrices of a synthesized generator word."""
    if isinstance(x, Morphism):
        x = _morphism_to_spec_field(x, spec)
        ring = spec.ring
        out = ExactMatrix.zero(spec.m ** x.l, spec.m ** x.k, ring)
        for d in x.support():
            out = out.add(functor_matrix_layered(d, spec).scale(x.coeff(d)))
        return out
    if not isinstance(x, Diagram):
        raise FunctorError("expected a Diagram or Morphism, got %r" % (x,))
    guard_cells(spec.m ** (x.k + x.l))
    word = synthesize_word(x)
    mat = ExactMatrix.identity(spec.m ** word.domain, spec.ring)
    for lay in word.layers:
        mat = layer_matrix(lay, spec).mul(mat)
    return mat


def trace_check(d, spec):
    """Whether the matrix trace of a ``(r, r)`` diagram equals
    ``eps^r * (eps*m)^loops`` with loops counted in the diagram closure."""
    if d.k != d.l:
        raise FunctorError("trace needs a square diagram, got (%d, %d)" % (d.k, d.l))
    ring = spec.ring
    expected = ring.mul(
        ring.power(ring.from_int(spec.eps), d.k),
        ring.power(spec.delta_value(), closure_loops(d)))
    return ring.eq(functor_matrix(d, spec).trace(), expected)


def _coevaluation_vector(spec):
    gens = generator_matrices(spec)
    return gens["U"]


def verify_pau(spec):
    """Check the defining matrix relations of the generating pictures:
    crossing square and braiding, crossing symmetry of the coevaluation
    vector and of the pairing, pairing of the coevaluation, the two zigzag
    straightenings, and the two crossing/arc slide rules."""
    ring = spec.ring
    m = spec.m
    gens = generator_matrices(spec)
    ident, x_mat, a_mat, u_mat = gens["I"], gens["X"], gens["A"], gens["U"]
    id1 = ExactMatrix.identity(m, ring)
    id2 = id1.tensor(id1)
    eps_elt = ring.from_int(spec.eps)
    checks = []

    checks.append(check_bool("%s: crossing squares to the identity" % spec.label(),
                             x_mat.mul(x_mat) == id2))
    lhs = x_mat.tensor(id1).mul(id1.tensor(x_mat)).mul(x_mat.tensor(id1))
    rhs = id1.tensor(x_mat).mul(x_mat.tensor(id1)).mul(id1.tensor(x_mat))
    checks.append(check_bool("%s: crossings braid" % spec.label(), lhs == rhs))

    # The crossing matrix is the plain swap scaled by the form sign, so the
    # sign cancels against the swap's action on the (anti)symmetric
    # coevaluation: the crossing fixes it exactly.
    p_mat = x_mat.scale(eps_elt)
    checks.append(check_bool("%s: swap scales the coevaluation by the form sign"
                             % spec.label(),
                             p_mat.mul(u_mat) == u_mat.scale(eps_elt)))
    checks.append(check_bool("%s: swap scales the pairing by the form sign"
                             % spec.label(),
                             a_mat.mul(p_mat) == a_mat.scale(eps_elt)))
    checks.append(check_bool("%s: crossing fixes the coevaluation" % spec.label(),
                             x_mat.mul(u_mat) == u_mat))
    checks.append(check_bool("%s: pairing absorbs the crossing" % spec.label(),
                             a_mat.mul(x_mat) == a_mat))

    pair_val = a_mat.mul(u_mat)
    expected = ExactMatrix(1, 1, ring, {(0, 0): ring.from_int(spec.eps * m)})
    checks.append(check_bool("%s: pairing of the coevaluation is eps*m" % spec.label(),
                             pair_val == expected))
    zig1 = a_mat.tensor(id1).mul(id1.tensor(u_mat))
    zig2 = id1.tensor(a_mat).mul(u_mat.tensor(id1))
    checks.append(check_bool("%s: left zigzag straightens" % spec.label(), zig1 == id1))
    checks.append(check_bool("%s: right zigzag straightens" % spec.label(), zig2 == id1))

    slide1l = a_mat.tensor(id1).mul(id1.tensor(x_mat))
    slide1r = id1.tensor(a_mat).mul(x_mat.tensor(id1))
    checks.append(check_bool("%s: pairing slides across the crossing" % spec.label(),
                             slide1l == slide1r))
    slide2l = x_mat.tensor(id1).mul(id1.tensor(u_mat))
    slide2r = id1.tensor(x_mat).mul(u_mat.tensor(id1))
    checks.append(check_bool("%s: coevaluation slides across the crossing"
                             % spec.label(), slide2l == slide2r))
    return checks
