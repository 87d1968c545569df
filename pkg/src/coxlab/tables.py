"""Curated generator tables and weight vectors for M_4, M_5 and M_6.

The JSON files under coxlab/data mirror the published layout: one row per
Pic degree followed by its monomials, written in decreasing order for the
bundled weight-refined orders.  Loading machine-checks every row (degree of
each monomial equals the row label; monomials strictly decreasing) and
records discrepancies instead of repairing them: rows that fail a check are
quarantined but kept verbatim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .picard import DivisorClass
from .ring import (
    CoxRing,
    Exponents,
    MonomialOrder,
    QQ,
    cox_ring,
    order_from_names,
    parse_polynomial,
)

__all__ = ["ReferenceTables", "load_tables", "M6_GENERATOR_COUNT"]

M6_GENERATOR_COUNT = 116  # 81 quadratic + 34 cubic + 1 anticanonical cubic


@dataclass
class TableRow:
    degree: DivisorClass
    monomial_strings: tuple[str, ...]
    monomials: tuple[Optional[Exponents], ...]  # None where unparseable
    quarantined: bool = False
    notes: tuple[str, ...] = ()


@dataclass
class ReferenceTables:
    """All bundled data, validated; see ``notes`` for recorded discrepancies."""

    m4_order: MonomialOrder
    m4_generators: tuple[Exponents, ...]
    m5_order: MonomialOrder
    m5_weights: dict[str, int]
    m5_rows: tuple[TableRow, ...]
    m5_row_weights: tuple[tuple[int, ...], ...]
    m6_order: MonomialOrder
    m6_weights: dict[str, int]
    m6_quadratic_rows: tuple[TableRow, ...]
    m6_cubic_rows: tuple[TableRow, ...]
    m6_anticanonical_row: TableRow
    m5_search_weights: tuple[tuple[int, ...], ...]
    m5_search_variables: tuple[str, ...]
    notes: tuple[str, ...]

    # ----- derived generator sets -----
    def m5_generators(self) -> tuple[Exponents, ...]:
        """First two monomials of each conic row."""
        out = []
        for row in self.m5_rows:
            out.extend(row.monomials[:2])
        return tuple(out)

    def m6_generators(self) -> tuple[Exponents, ...]:
        """81 quadratics (first three columns), 34 cubics (first column),
        and the anticanonical cubic."""
        out = []
        for row in self.m6_quadratic_rows:
            out.extend(row.monomials[:3])
        for row in self.m6_cubic_rows:
            out.append(row.monomials[0])
        out.append(self.m6_anticanonical_row.monomials[0])
        return tuple(out)

    def emit(self) -> dict:
        """JSON-ready dump of the embedded data for audit."""
        def row_dump(row: TableRow):
            return {
                "degree": list(row.degree.coeffs),
                "monomials": list(row.monomial_strings),
                "quarantined": row.quarantined,
                "notes": list(row.notes),
            }

        return {
            "m4": {"generators": [ _name(4, m) for m in self.m4_generators ]},
            "m5": {
                "weights": self.m5_weights,
                "rows": [row_dump(r) for r in self.m5_rows],
                "row_weights": [list(w) for w in self.m5_row_weights],
            },
            "m6": {
                "weights": self.m6_weights,
                "quadratic_rows": [row_dump(r) for r in self.m6_quadratic_rows],
                "cubic_rows": [row_dump(r) for r in self.m6_cubic_rows],
                "anticanonical_row": row_dump(self.m6_anticanonical_row),
            },
            "search_weights": {
                "variables": list(self.m5_search_variables),
                "rows": [list(r) for r in self.m5_search_weights],
            },
            "notes": list(self.notes),
        }


def _name(r: int, exps: Exponents) -> str:
    return cox_ring(r).monomial_name(exps)


def _load_json(name: str) -> dict:
    with resources.files("coxlab.data").joinpath(name).open("r", encoding="utf-8") as fh:
        return json.load(fh)


def _parse_monomial(ring: CoxRing, text: str):
    poly = parse_polynomial(ring, QQ, text)
    if len(poly) != 1:
        raise ValueError(f"not a monomial: {text!r}")
    return poly.monomials()[0]


def _check_row(ring: CoxRing, order: Optional[MonomialOrder], raw: dict,
               label: str, notes: list[str]) -> TableRow:
    degree = DivisorClass(ring.r, tuple(raw["degree"]))
    strings = tuple(raw["monomials"])
    monomials: list[Optional[Exponents]] = []
    row_notes: list[str] = []
    quarantined = False
    for s in strings:
        try:
            m = _parse_monomial(ring, s)
        except ValueError as exc:
            monomials.append(None)
            row_notes.append(f"{label}: unparseable entry {s!r} ({exc})")
            quarantined = True
            continue
        if ring.degree(m) != degree:
            row_notes.append(f"{label}: {s} has degree {ring.degree(m).coeffs}, row says {degree.coeffs}")
            quarantined = True
        monomials.append(m)
    parsed = [m for m in monomials if m is not None]
    if order is not None:
        for a, b in zip(parsed, parsed[1:]):
            if order.compare(a, b) <= 0:
                row_notes.append(f"{label}: monomials not strictly decreasing at {_name(ring.r, a)} vs {_name(ring.r, b)}")
    notes.extend(row_notes)
    return TableRow(degree, strings, tuple(monomials), quarantined, tuple(row_notes))


_CACHE: Optional[ReferenceTables] = None


def load_tables() -> ReferenceTables:
    global _CACHE
    if _CACHE is not None:
        return _CACHE
    notes: list[str] = []

    m4 = _load_json("m4.json")
    r4 = cox_ring(4)
    m4_order = order_from_names(r4, m4["order_sequence"])
    m4_gens = tuple(_parse_monomial(r4, s) for s in m4["generators"])

    m5 = _load_json("m5.json")
    r5 = cox_ring(5)
    m5_order = order_from_names(r5, m5["order_sequence"], m5["weights"])
    m5_rows = []
    m5_row_weights = []
    for i, raw in enumerate(m5["rows"]):
        # the weight table carries ties, so rows are checked for weight
        # dominance of the first two monomials rather than a strict order
        row = _check_row(r5, None, raw, f"m5 row {i+1}", notes)
        m5_rows.append(row)
        weights = tuple(raw["weights"])
        m5_row_weights.append(weights)
        for s, w in zip(row.monomials, weights):
            got = sum(m5_order.weights[j] * e for j, e in enumerate(s))
            if got != w:
                notes.append(f"m5 row {i+1}: recorded weight {w} != recomputed {got}")
        if min(weights[:2]) <= max(weights[2:]):
            notes.append(f"m5 row {i+1}: first two monomials do not dominate by weight")

    m6 = _load_json("m6.json")
    r6 = cox_ring(6)
    m6_order = order_from_names(r6, m6["order_sequence"], m6["weights"])
    quad_rows = [
        _check_row(r6, m6_order, raw, f"m6 quadratic row {i+1}", notes)
        for i, raw in enumerate(m6["quadratic_rows"])
    ]
    cubic_rows = [
        _check_row(r6, m6_order, raw, f"m6 cubic row {i+1}", notes)
        for i, raw in enumerate(m6["cubic_rows"])
    ]
    seen_degrees: dict[tuple, int] = {}
    for i, row in enumerate(cubic_rows):
        if row.degree.coeffs in seen_degrees:
            j = seen_degrees[row.degree.coeffs]
            note = f"m6 cubic row {i+1}: degree repeats row {j+1} (distinct leading monomials)"
            notes.append(note)
            row.notes = row.notes + (note,)
            row.quarantined = True
        else:
            seen_degrees[row.degree.coeffs] = i
    anti = _check_row(r6, m6_order, m6["anticanonical_row"], "m6 anticanonical row", notes)

    t4 = _load_json("t4.json")
    search_vars = tuple(t4["variables"])
    search_rows = tuple(tuple(r) for r in t4["rows"])
    for i, rrow in enumerate(search_rows):
        if len(rrow) != len(search_vars):
            notes.append(f"search weight row {i+1}: expected {len(search_vars)} entries")

    _CACHE = ReferenceTables(
        m4_order=m4_order,
        m4_generators=m4_gens,
        m5_order=m5_order,
        m5_weights=dict(m5["weights"]),
        m5_rows=tuple(m5_rows),
        m5_row_weights=tuple(m5_row_weights),
        m6_order=m6_order,
        m6_weights=dict(m6["weights"]),
        m6_quadratic_rows=tuple(quad_rows),
        m6_cubic_rows=tuple(cubic_rows),
        m6_anticanonical_row=anti,
        m5_search_weights=search_rows,
        m5_search_variables=search_vars,
        notes=tuple(notes),
    )
    return _CACHE


def m6_ideal():
    """M_6 as a MonomialIdeal (116 generators)."""
    from .groebner import MonomialIdeal

    tables = load_tables()
    return MonomialIdeal.from_generators(cox_ring(6), tables.m6_generators())


def m5_ideal():
    from .groebner import MonomialIdeal

    tables = load_tables()
    return MonomialIdeal.from_generators(cox_ring(5), tables.m5_generators())


def m4_ideal():
    from .groebner import MonomialIdeal

    tables = load_tables()
    return MonomialIdeal.from_generators(cox_ring(4), tables.m4_generators)
