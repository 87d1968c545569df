"""Weyl-action machinery on ideals: witnesses, twisted orders, cone checks.

The Weyl group permutes the curve variables but does not fix the relation
ideals; what survives is a monomial action: the permuted support of any
relation is again the support of some relation.  This module machine-checks
instances of that statement and its consequences for initial ideals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import linalg
from .groebner import GroebnerBasis, MonomialIdeal, buchberger, k_polynomial
from .picard import DivisorClass, WeylElement, act
from .ring import (
    Exponents,
    MonomialOrder,
    Polynomial,
    act_on_monomial,
    enumerate_monomials,
)

__all__ = [
    "hs_invariant",
    "ideal_graded_piece",
    "monomial_action_witness",
    "twisted_initial_check",
    "weight_action",
    "groebner_cone_spotcheck",
    "ActionReport",
]


def hs_invariant(ideal: MonomialIdeal, group_elements: Sequence[WeylElement]) -> bool:
    """True iff the K-polynomial is fixed by every listed element.

    Invariance under a generating set implies invariance under the group.
    """
    kp = k_polynomial(ideal)
    return all(kp.apply(g).terms == kp.terms for g in group_elements)


def ideal_graded_piece(gens: Sequence[Polynomial], degree: DivisorClass):
    """(monomials, rows): coordinates of a spanning set of the ideal's piece.

    The degree-D piece of an ideal with homogeneous generators q_i is
    spanned by all q_i * m with deg(q_i * m) = D.
    """
    ring = gens[0].ring
    field = gens[0].field
    monomials = enumerate_monomials(ring, degree)
    index = {m: i for i, m in enumerate(monomials)}
    rows = []
    for q in gens:
        dq = q.homogeneous_degree()
        if dq is None:
            raise ValueError("generators must be homogeneous")
        cof = DivisorClass(ring.r, tuple(a - b for a, b in zip(degree.coeffs, dq.coeffs)))
        for m in enumerate_monomials(ring, cof):
            row = [field.zero] * len(monomials)
            for qm, qc in q.terms.items():
                row[index[tuple(a + b for a, b in zip(qm, m))]] = qc
            rows.append(row)
    return monomials, rows


def graded_piece_dimension(gens: Sequence[Polynomial], degree: DivisorClass) -> int:
    monomials, rows = ideal_graded_piece(gens, degree)
    if not rows:
        return 0
    return linalg.rank(rows, gens[0].field)


@dataclass
class ActionReport:
    element: WeylElement
    support: tuple[Exponents, ...]
    mapped_support: tuple[Exponents, ...]
    witness: Optional[Polynomial]
    solution_dimension: int

    @property
    def is_witness(self) -> bool:
        return self.witness is not None


def _full_support_element(vectors, support_idx, field):
    """Combination of the vectors that is nonzero on every support index."""
    for v in vectors:
        if all(v[i] != field.zero for i in support_idx):
            return v
    # generic combination: scale by increasing powers until no coordinate dies
    for t in range(1, 20 * len(vectors) + 2):
        combo = [field.zero] * len(vectors[0])
        scale = field.one
        tt = field.coerce(t)
        for v in vectors:
            for i, x in enumerate(v):
                combo[i] = field.add(combo[i], field.mul(scale, x))
            scale = field.mul(scale, tt)
        if all(combo[i] != field.zero for i in support_idx):
            return combo
    return None


def monomial_action_witness(gens: Sequence[Polynomial], g: WeylElement,
                            f: Polynomial) -> ActionReport:
    """Search the ideal for an element supported exactly on g(mon(f)).

    The search solves a linear system inside one graded piece of the ideal,
    so it does not depend on any Groebner run.  Raises if f is not in the
    ideal's graded piece to begin with.
    """
    ring = f.ring
    field = f.field
    deg = f.homogeneous_degree()
    if deg is None:
        raise ValueError("f must be homogeneous")
    monomials, rows = ideal_graded_piece(gens, deg)
    index = {m: i for i, m in enumerate(monomials)}
    target = [field.zero] * len(monomials)
    for m, c in f.terms.items():
        target[index[m]] = c
    if linalg.solve_in_span(rows, target, field) is None:
        raise ValueError("f is not in the ideal in its degree")

    mapped_degree = act(g, deg)
    mapped_support = tuple(sorted(act_on_monomial(g, ring, m) for m in f.terms))
    mons2, rows2 = ideal_graded_piece(gens, mapped_degree)
    idx2 = {m: i for i, m in enumerate(mons2)}
    support_idx = [idx2[m] for m in mapped_support]
    inter = linalg.intersect_with_coordinate_subspace(rows2, support_idx, field)
    witness = None
    if inter:
        vec = _full_support_element(inter, support_idx, field)
        if vec is not None:
            witness = Polynomial(ring, field, {mons2[i]: vec[i] for i in support_idx})
    return ActionReport(
        element=g,
        support=tuple(sorted(f.terms)),
        mapped_support=mapped_support,
        witness=witness,
        solution_dimension=len(inter),
    )


def twisted_initial_check(gens: Sequence[Polynomial], order: MonomialOrder,
                          g: WeylElement) -> bool:
    """Machine check of g(in(I)) == in of I under the g^{-1}-twisted order."""
    ring = gens[0].ring
    gb = buchberger(list(gens), order)
    lhs = gb.initial.apply(g)
    twisted = order.twist(g.inverse())
    gb2 = buchberger(list(gens), twisted)
    rhs = gb2.initial
    return set(lhs.gens) == set(rhs.gens)


def weight_action(g: WeylElement, weights: Sequence[int]) -> tuple[int, ...]:
    """Permuted weight vector: (g w)_i = w_{g(i)}, so w(g(m)) = (g w)(m)."""
    perm = g.curve_perm
    return tuple(weights[perm[i]] for i in range(len(perm)))


def weight_is_generic(gb: GroebnerBasis, weights: Sequence[int]) -> bool:
    """Every reduced-basis element has a unique heaviest monomial."""
    for p in gb.basis:
        best = None
        tie = False
        for m in p.terms:
            w = sum(weights[i] * e for i, e in enumerate(m) if e)
            if best is None or w > best:
                best, tie = w, False
            elif w == best:
                tie = True
        if tie:
            return False
    return True


def groebner_cone_spotcheck(gens: Sequence[Polynomial], weights: Sequence[int],
                            g: WeylElement, order_template: MonomialOrder) -> Union[bool, str]:
    """Check g^{-1}(in_w(I)) == in_{gw}(I) for one weight and group element.

    Returns True/False, or the string 'nongeneric' when either weight fails
    the unique-heaviest-monomial test on its reduced basis (a cone boundary
    case: the identity is then not about a single monomial ideal).
    """
    ord_w = order_template.with_weights(weights)
    gb_w = buchberger(list(gens), ord_w)
    if not weight_is_generic(gb_w, weights):
        return "nongeneric"
    moved = weight_action(g, weights)
    ord_gw = order_template.with_weights(moved)
    gb_gw = buchberger(list(gens), ord_gw)
    if not weight_is_generic(gb_gw, moved):
        return "nongeneric"
    lhs = gb_w.initial.apply(g.inverse())
    return set(lhs.gens) == set(gb_gw.initial.gens)
