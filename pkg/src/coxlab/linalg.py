"""Exact dense linear algebra over Q or F_p (row echelon, rank, kernel).

Matrices are lists of lists of field elements.  Everything here is plain
fraction-free-ish Gaussian elimination; the matrices in this project are
tiny (tens of rows), so clarity wins over pivoting tricks.
"""

from __future__ import annotations


def row_echelon(matrix, field):
    """Return (echelon_rows, pivot_columns) of a copy of ``matrix``."""
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][col] != field.zero:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(x, inv) for x in rows[rank]]
        for i in range(nrows):
            if i != rank and rows[i][col] != field.zero:
                f = rows[i][col]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rows[:rank], pivots


def rank(matrix, field) -> int:
    if not matrix:
        return 0
    _, pivots = row_echelon(matrix, field)
    return len(pivots)


def kernel_basis(matrix, field):
    """Basis of the right kernel {v : matrix @ v = 0}.

    One basis vector per free column; the free coordinate is set to one and
    the pivot coordinates are back-substituted from the reduced echelon form.
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    ech, pivots = row_echelon(matrix, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(ech, pivots):
            # reduced form: entry in the free column determines the pivot value
            v[pc] = field.neg(row[fc])
        basis.append(v)
    return basis


def solve_in_span(vectors, target, field):
    """Coefficients c with sum(c_i * vectors_i) = target, or None.

    ``vectors`` and ``target`` are coordinate lists of equal length.
    """
    if not vectors:
        return None if any(x != field.zero for x in target) else []
    ncols = len(vectors)
    aug = [[vectors[j][i] for j in range(ncols)] + [target[i]] for i in range(len(target))]
    ech, pivots = row_echelon(aug, field)
    if ncols in pivots:
        return None  # inconsistent
    sol = [field.zero] * ncols
    for row, pc in zip(ech, pivots):
        sol[pc] = row[ncols]
    return sol


def intersect_with_coordinate_subspace(span_rows, support, field):
    """Basis of span(span_rows) ∩ {v : v_i = 0 for i not in support}.

    Returns vectors in the ambient coordinates.  The spanning set is first
    reduced to a basis so the result is a genuine basis of the intersection.
    """
    if not span_rows:
        return []
    basis, _ = row_echelon(span_rows, field)
    if not basis:
        return []
    ncols = len(basis[0])
    off = [i for i in range(ncols) if i not in set(support)]
    if not off:
        return [list(r) for r in basis]
    # rows of constraint matrix: off-support coordinates of each basis row
    constraint = [[basis[j][i] for j in range(len(basis))] for i in off]
    combos = kernel_basis(constraint, field)
    out = []
    for c in combos:
        v = [field.zero] * ncols
        for j, cj in enumerate(c):
            if cj != field.zero:
                for i in range(ncols):
                    v[i] = field.add(v[i], field.mul(cj, basis[j][i]))
        out.append(v)
    return out
