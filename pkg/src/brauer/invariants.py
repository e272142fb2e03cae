"""Ranks, kernels, commutants, and ideal spans under the tensor functor.

Everything here reduces to exact sparse elimination: diagram matrices are
vectorized into rows, infinitesimal invariance and commutation conditions
into linear systems, and two-sided ideal slices into iterated row spaces.
"""

from __future__ import annotations

from .diagram import enumerate_diagrams, identity as identity_diagram
from .elements import sigma
from .functor import (ExactMatrix, FunctorError, _morphism_to_spec_field,
                      functor_matrix, guard_cells)
from .linalg import EliminationBasis
from .linear import from_diagram, lin_compose, lin_tensor, make_morphism

__all__ = [
    "hom_rank", "kernel_dimension", "kernel_basis", "lie_generators",
    "commutant_dimension", "ideal_span_dimension",
    "tensor_ideal_span_dimension",
]


def _row_task(args):
    d, family, m, modulus, cols = args
    from .functor import group_spec

    spec = group_spec(family, m, modulus=modulus, allow_small_modulus=True)
    mat = functor_matrix(d, spec)
    return {i * cols + j: v for (i, j), v in mat.entries.items()}


def _vectorized_rows(k, l, spec, jobs=1):
    """One sparse row per (k, l) diagram: its matrix flattened row-major.

    Returns (diagrams, rows); with jobs > 1 the matrices are evaluated in a
    process pool, preserving the deterministic diagram order."""
    guard_cells(spec.m ** (k + l))
    diagrams = enumerate_diagrams(k, l)
    cols = spec.m ** k
    if jobs and jobs > 1 and len(diagrams) > 1:
        from concurrent.futures import ProcessPoolExecutor

        modulus = getattr(spec.ring, "p", None)
        tasks = [(d, spec.family, spec.m, modulus, cols) for d in diagrams]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row_task, tasks, chunksize=8))
        return diagrams, rows
    rows = []
    for d in diagrams:
        mat = functor_matrix(d, spec)
        rows.append({i * cols + j: v for (i, j), v in mat.entries.items()})
    return diagrams, rows


def _rank_of(rows, ring):
    basis = EliminationBasis(ring)
    for row in rows:
        basis.add_row(row)
    return basis.rank


def hom_rank(k, l, spec, jobs=1):
    """Rank of the span of all (k, l) diagram matrices."""
    _, rows = _vectorized_rows(k, l, spec, jobs=jobs)
    return _rank_of(rows, spec.ring)


def kernel_dimension(k, l, spec, jobs=1):
    """Dimension of the space of diagram combinations mapped to zero."""
    diagrams, rows = _vectorized_rows(k, l, spec, jobs=jobs)
    return len(diagrams) - _rank_of(rows, spec.ring)


def kernel_basis(k, l, spec, jobs=1):
    """Deterministic basis of the kernel, one morphism per basis vector.

    Solves for coefficient vectors x with sum_D x_D * matrix(D) = 0 by
    transposing the vectorized rows, then converts each nullspace vector to
    a morphism over the group's field at the loop value eps * m."""
    diagrams, rows = _vectorized_rows(k, l, spec, jobs=jobs)
    by_cell = {}
    for idx, row in enumerate(rows):
        for cell, v in row.items():
            by_cell.setdefault(cell, {})[idx] = v
    basis = EliminationBasis(spec.ring)
    for cell in sorted(by_cell):
        basis.add_row(by_cell[cell])
    vectors = basis.nullspace(range(len(diagrams)))
    ring = spec.ring
    delta = spec.delta_value()
    out = []
    for vec in vectors:
        terms = {diagrams[idx]: coeff for idx, coeff in vec.items()}
        out.append(make_morphism(k, l, terms, ring=ring, delta=delta))
    return out


def lie_generators(spec):
    """Basis of the form-preserving matrix Lie algebra: solutions of
    X^T G + G X = 0 over the group's field, as exact matrices."""
    m, ring = spec.m, spec.ring
    gram = spec.gram
    rows = []
    for a in range(m):
        for b in range(m):
            row = {}
            for c in range(m):
                if not ring.is_zero(gram[c][b]):
                    key = c * m + a
                    row[key] = ring.add(row.get(key, ring.zero()), gram[c][b])
                if not ring.is_zero(gram[a][c]):
                    key = c * m + b
                    row[key] = ring.add(row.get(key, ring.zero()), gram[a][c])
            rows.append(row)
    basis = EliminationBasis(ring)
    for row in rows:
        basis.add_row(row)
    out = []
    for vec in basis.nullspace(range(m * m)):
        entries = {}
        for key, v in vec.items():
            if isinstance(v, int):
                v = ring.from_int(v)
            entries[(key // m, key % m)] = v
        out.append(ExactMatrix(m, m, ring, entries))
    return out


def _reflection(spec):
    """Orientation-reversing isometry generating the second component of the
    orthogonal group; None for the connected symplectic family."""
    if spec.family != "orthogonal":
        return None
    ring, m = spec.ring, spec.m
    entries = {(i, i): ring.one() for i in range(1, m)}
    entries[(0, 0)] = ring.neg(ring.one())
    return ExactMatrix(m, m, ring, entries)


def derived_action(x_mat, r):
    """Derivation action on the r-fold tensor power: sum over positions of
    identity factors around one copy of the matrix."""
    ring = x_mat.ring
    m = x_mat.rows
    total = ExactMatrix.zero(m ** r, m ** r, ring)
    for i in range(r):
        mat = x_mat
        if i:
            mat = ExactMatrix.identity(m ** i, ring).tensor(mat)
        if r - 1 - i:
            mat = mat.tensor(ExactMatrix.identity(m ** (r - 1 - i), ring))
        total = total.add(mat)
    return total


def _commuting_rows(rho, n):
    """Linear conditions on an n x n unknown M for rho M - M rho = 0,
    unknowns indexed row-major."""
    ring = rho.ring
    by_row = {}
    by_col = {}
    for (a, c), v in rho.entries.items():
        by_row.setdefault(a, []).append((c, v))
        by_col.setdefault(c, []).append((a, v))
    for a in range(n):
        for b in range(n):
            row = {}
            for c, v in by_row.get(a, ()):
                key = c * n + b
                row[key] = ring.add(row.get(key, ring.zero()), v)
            for c, v in by_col.get(b, ()):
                key = a * n + c
                row[key] = ring.sub(row.get(key, ring.zero()), v)
            if row:
                yield row


def commutant_dimension(r, spec):
    """Dimension of the algebra of matrices on the r-fold tensor power
    commuting with the group action (infinitesimal action plus, for the
    orthogonal family, the reflection)."""
    n = spec.m ** r
    guard_cells(n * n)
    basis = EliminationBasis(spec.ring)
    for gen in lie_generators(spec):
        for row in _commuting_rows(derived_action(gen, r), n):
            basis.add_row(row)
    refl = _reflection(spec)
    if refl is not None:
        power = ExactMatrix.identity(1, spec.ring)
        for _ in range(r):
            power = power.tensor(refl)
        for row in _commuting_rows(power, n):
            basis.add_row(row)
    return n * n - basis.rank


def _rows_to_morphisms(basis, diagrams, k, l, ring, delta):
    out = []
    rows = basis.reduced_rows()
    for pivot in sorted(rows):
        terms = {}
        for idx, coeff in rows[pivot].items():
            terms[diagrams[idx]] = coeff
        out.append(make_morphism(k, l, terms, ring=ring, delta=delta))
    return out


def ideal_span_dimension(r, gen, spec):
    """Dimension of the two-sided ideal slice in degree (r, r) generated by
    a square morphism, padded with identity strands on the right.

    Computed in two stages: first the row space W of gen right-composed
    with every diagram, then the row space of every diagram left-composed
    with a basis of W."""
    gen = _morphism_to_spec_field(gen, spec)
    if gen.k != gen.l:
        raise FunctorError("ideal generator must be square, got (%d, %d)"
                           % (gen.k, gen.l))
    if gen.k > r:
        raise FunctorError("generator width %d exceeds degree %d" % (gen.k, r))
    ring, delta = spec.ring, spec.delta_value()
    padded = gen
    if gen.k < r:
        padded = lin_tensor(gen, from_diagram(identity_diagram(r - gen.k),
                                              ring=ring, delta=delta))
    diagrams = enumerate_diagrams(r, r)
    index = {d: i for i, d in enumerate(diagrams)}
    stage1 = EliminationBasis(ring)
    for d in diagrams:
        w = lin_compose(padded, from_diagram(d, ring=ring, delta=delta))
        stage1.add_row({index[s]: w.coeff(s) for s in w.support()})
    witnesses = _rows_to_morphisms(stage1, diagrams, r, r, ring, delta)
    stage2 = EliminationBasis(ring)
    for w in witnesses:
        for d in diagrams:
            full = lin_compose(from_diagram(d, ring=ring, delta=delta), w)
            stage2.add_row({index[s]: full.coeff(s) for s in full.support()})
    return stage2.rank


def tensor_ideal_span_dimension(k, l, spec, max_middle=None):
    """Dimension of the (k, l) slice of the tensor ideal generated by the
    vanishing symmetrizer on m + 1 strands: the span of all composites
    through a middle layer carrying one padded copy of it.

    Middle widths run over the correct parity up to ``max_middle``
    (default k + l + min(k, l))."""
    if (k + l) % 2:
        return 0
    ring, m = spec.ring, spec.m
    delta = spec.delta_value()
    base = m + 1
    gen = sigma(spec.eps, base, ring=ring, delta=delta)
    if max_middle is None:
        max_middle = k + l + min(k, l)
    targets = enumerate_diagrams(k, l)
    target_index = {d: i for i, d in enumerate(targets)}
    total = EliminationBasis(ring)
    for s in range(base, max_middle + 1):
        if (s - k) % 2:
            continue
        lower = enumerate_diagrams(k, s)
        lower_index = {d: i for i, d in enumerate(lower)}
        stage1 = EliminationBasis(ring)
        for a in range(0, s - base + 1):
            b = s - base - a
            mid = gen
            if a:
                mid = lin_tensor(from_diagram(identity_diagram(a), ring=ring,
                                              delta=delta), mid)
            if b:
                mid = lin_tensor(mid, from_diagram(identity_diagram(b), ring=ring,
                                                   delta=delta))
            for d in lower:
                w = lin_compose(mid, from_diagram(d, ring=ring, delta=delta))
                stage1.add_row({lower_index[s2]: w.coeff(s2) for s2 in w.support()})
        witnesses = _rows_to_morphisms(stage1, lower, k, s, ring, delta)
        for c in enumerate_diagrams(s, l):
            top = from_diagram(c, ring=ring, delta=delta)
            for w in witnesses:
                full = lin_compose(top, w)
                total.add_row({target_index[s2]: full.coeff(s2)
                               for s2 in full.support()})
    return total.rank
