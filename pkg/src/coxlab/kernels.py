"""Hot-kernel selection: compiled Groebner core with pure-Python fallback.

The compiled extension (coxlab._gbcore, built from _gbcore.pyx) implements
Buchberger over a prime field on packed exponent arrays.  When it is not
built, the pure-Python engine in coxlab.groebner serves the same calls; the
reduced Groebner basis is canonical, so both paths return identical output.

``IMPLEMENTATION`` names the active backend; benchmarks/bench_kernels.py
compares the two on the same inputs.
"""

from __future__ import annotations

from typing import Optional

try:
    from . import _gbcore  # compiled extension, optional

    HAVE_COMPILED = True
    IMPLEMENTATION = "compiled"
except ImportError:
    _gbcore = None
    HAVE_COMPILED = False
    IMPLEMENTATION = "pure"


def supports(field, order) -> bool:
    """The fast path covers prime fields under any matrix-encoded order."""
    from .ring import PrimeField

    return HAVE_COMPILED and isinstance(field, PrimeField)


def buchberger_gfp(gens, order, field):
    """Reduced Groebner basis over F_p through the selected backend."""
    from .ring import Polynomial, PrimeField

    if not isinstance(field, PrimeField):
        raise ValueError("kernel path requires a prime field")
    if not HAVE_COMPILED:
        from .groebner import buchberger

        return list(buchberger(list(gens), order, use_kernel=False).basis)

    ring = gens[0].ring
    n = ring.nvars
    keyrows = _order_key_rows(order, n)
    packed = [sorted(((m, int(c)) for m, c in g.terms.items())) for g in gens]
    out = _gbcore.buchberger(packed, keyrows, n, field.p)
    basis = []
    for terms in out:
        basis.append(Polynomial(ring, field, {tuple(m): c for m, c in terms}))
    return basis


def _order_key_rows(order, n: int) -> list[list[int]]:
    """Integer matrix whose row-wise products reproduce order.key.

    Row 0: all ones (coarse degree); row 1: weights; then negated unit rows
    in reverse sequence order.  A twist permutes the columns.
    """
    rows = [[1] * n, list(order.weights)]
    for i in reversed(order.sequence):
        row = [0] * n
        row[i] = -1
        rows.append(row)
    if order.perm is not None:
        # key(m) uses the permuted monomial: column j feeds position perm[j]
        rows = [[row[order.perm[j]] for j in range(n)] for row in rows]
    return rows
