"""Plane realizations: from r points in P^2 to the conic-relation ideal Q_r.

Every exceptional-curve variable gets a defining plane form: e_i the
constant 1, f_ij the line through p_i and p_j, g_i the conic through the
five points other than p_i (for r = 5 the single g is the conic through all
five).  Linear dependencies among products of these forms, degree class by
degree class, generate Q_r.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import linalg
from .picard import DivisorClass, coarse_degree, ell, e_i
from .ring import CoxRing, Exponents, Polynomial, QQ, cox_ring, enumerate_monomials


# ---------------------------------------------------------------------------
# points and forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlanePoint:
    """Homogeneous coordinates (x : y : z); equality is up to scale."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 3 or all(c == 0 for c in self.coords):
            raise ValueError("need a nonzero coordinate triple")

    def normalized(self, field):
        first = next(c for c in self.coords if c != field.zero)
        inv = field.inv(first)
        return tuple(field.mul(c, inv) for c in self.coords)


def plane_point(x, y, z, field=QQ) -> PlanePoint:
    return PlanePoint((field.coerce(x), field.coerce(y), field.coerce(z)))


@lru_cache(maxsize=64)
def form_basis(degree: int) -> tuple[tuple[int, int, int], ...]:
    """Monomial basis of degree-d forms in x, y, z: x^d, x^(d-1)y, ..., z^d."""
    basis = []
    for i in range(degree, -1, -1):
        for j in range(degree - i, -1, -1):
            basis.append((i, j, degree - i - j))
    return tuple(basis)


@dataclass(frozen=True)
class PlaneForm:
    """Homogeneous form of fixed degree, as coefficients over form_basis."""

    degree: int
    coeffs: tuple

    def evaluate(self, point: PlanePoint, field):
        x, y, z = point.coords
        total = field.zero
        for (i, j, k), c in zip(form_basis(self.degree), self.coeffs):
            if c == field.zero:
                continue
            total = field.add(total, field.mul(c, _pow3(field, x, y, z, i, j, k)))
        return total

    def is_zero(self, field) -> bool:
        return all(c == field.zero for c in self.coeffs)

    def normalized(self, field) -> "PlaneForm":
        """First nonzero coefficient scaled to one."""
        for c in self.coeffs:
            if c != field.zero:
                inv = field.inv(c)
                return PlaneForm(self.degree, tuple(field.mul(x, inv) for x in self.coeffs))
        return self

    def multiply(self, other: "PlaneForm", field) -> "PlaneForm":
        d = self.degree + other.degree
        index = {m: i for i, m in enumerate(form_basis(d))}
        out = [field.zero] * len(index)
        b1, b2 = form_basis(self.degree), form_basis(other.degree)
        for m1, c1 in zip(b1, self.coeffs):
            if c1 == field.zero:
                continue
            for m2, c2 in zip(b2, other.coeffs):
                if c2 == field.zero:
                    continue
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                i = index[m]
                out[i] = field.add(out[i], field.mul(c1, c2))
        return PlaneForm(d, tuple(out))

    def gradient_at(self, point: PlanePoint, field):
        """(dF/dx, dF/dy, dF/dz) evaluated at the point."""
        x, y, z = point.coords
        grads = [field.zero, field.zero, field.zero]
        for (i, j, k), c in zip(form_basis(self.degree), self.coeffs):
            if c == field.zero:
                continue
            if i:
                grads[0] = field.add(grads[0], field.mul(c, field.mul(field.coerce(i), _pow3(field, x, y, z, i - 1, j, k))))
            if j:
                grads[1] = field.add(grads[1], field.mul(c, field.mul(field.coerce(j), _pow3(field, x, y, z, i, j - 1, k))))
            if k:
                grads[2] = field.add(grads[2], field.mul(c, field.mul(field.coerce(k), _pow3(field, x, y, z, i, j, k - 1))))
        return tuple(grads)


def _pow3(field, x, y, z, i, j, k):
    out = field.one
    for base, e in ((x, i), (y, j), (z, k)):
        for _ in range(e):
            out = field.mul(out, base)
    return out


CONSTANT_ONE = PlaneForm(0, (Fraction(1),))


def line_through(p: PlanePoint, q: PlanePoint, field) -> PlaneForm:
    """Line form via cross product of the coordinate vectors."""
    a = p.coords
    b = q.coords
    cx = field.sub(field.mul(a[1], b[2]), field.mul(a[2], b[1]))
    cy = field.sub(field.mul(a[2], b[0]), field.mul(a[0], b[2]))
    cz = field.sub(field.mul(a[0], b[1]), field.mul(a[1], b[0]))
    form = PlaneForm(1, (cx, cy, cz))
    if form.is_zero(field):
        raise ValueError("coincident points have no unique line")
    return form.normalized(field)


def conic_through(points: list[PlanePoint], field) -> PlaneForm:
    """The unique conic through five points; raises if not unique."""
    if len(points) != 5:
        raise ValueError("a conic is determined by five points")
    basis = form_basis(2)
    rows = []
    for p in points:
        x, y, z = p.coords
        rows.append([_pow3(field, x, y, z, i, j, k) for (i, j, k) in basis])
    kern = linalg.kernel_basis(rows, field)
    if len(kern) != 1:
        raise ValueError("degenerate configuration: conic through 5 points not unique")
    return PlaneForm(2, tuple(kern[0])).normalized(field)


# ---------------------------------------------------------------------------
# general position and Eckart configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PositionReport:
    ok: bool
    violations: tuple[str, ...]


def check_general_position(points: list[PlanePoint], field=QQ) -> PositionReport:
    """No three collinear; no six on a conic (checked when r >= 6)."""
    violations = []
    for i, j in itertools.combinations(range(len(points)), 2):
        a = points[i].normalized(field)
        b = points[j].normalized(field)
        if a == b:
            violations.append(f"points {i+1},{j+1} coincide")
    for triple in itertools.combinations(range(len(points)), 3):
        rows = [list(points[t].coords) for t in triple]
        if linalg.rank(rows, field) < 3:
            violations.append("collinear: " + ",".join(str(t + 1) for t in triple))
    if len(points) >= 6:
        basis = form_basis(2)
        for six in itertools.combinations(range(len(points)), 6):
            rows = []
            for t in six:
                x, y, z = points[t].coords
                rows.append([_pow3(field, x, y, z, i, j, k) for (i, j, k) in basis])
            if linalg.rank(rows, field) < 6:
                violations.append("coconic: " + ",".join(str(t + 1) for t in six))
    return PositionReport(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Realization:
    """Plane forms attached to the curve variables of k[E_r]."""

    ring: CoxRing
    field: object
    points: tuple[PlanePoint, ...]
    forms: tuple[Optional[PlaneForm], ...]  # indexed like ring variables; None = constant 1

    def form_of(self, name: str) -> PlaneForm:
        f = self.forms[self.ring.variable_index(name)]
        return f if f is not None else PlaneForm(0, (self.field.one,))


def realize(points: list[PlanePoint], field=QQ, r: Optional[int] = None) -> Realization:
    """Build the line and conic forms for the given blown-up points."""
    if r is None:
        r = len(points)
    if len(points) < r:
        raise ValueError(f"need {r} points, got {len(points)}")
    points = points[:r]
    report = check_general_position(points, field)
    if not report.ok:
        raise ValueError("points not in general position: " + "; ".join(report.violations))
    ring = cox_ring(r)
    forms: list[Optional[PlaneForm]] = [None] * ring.nvars
    for idx, name in enumerate(ring.names):
        if name.startswith("f"):
            i, j = int(name[1]), int(name[2])
            forms[idx] = line_through(points[i - 1], points[j - 1], field)
        elif name == "g":
            forms[idx] = conic_through(list(points), field)
        elif name.startswith("g"):
            i = int(name[1:])
            others = [points[j] for j in range(r) if j + 1 != i]
            forms[idx] = conic_through(others, field)
    return Realization(ring, field, tuple(points), tuple(forms))


def monomial_to_form(real: Realization, exps: Exponents) -> PlaneForm:
    """Product of the variable forms; degree equals the l-coefficient.

    Requires the monomial's class to have non-positive e-coefficients when
    written as m*l - sum(a_i e_i); e-variables contribute nothing.
    """
    deg = real.ring.degree(exps)
    if any(c > 0 for c in deg.coeffs[1:]):
        raise ValueError("monomial degree has a positive e-coefficient; no plane-form model")
    field = real.field
    out = PlaneForm(0, (field.one,))
    for i, e in enumerate(exps):
        f = real.forms[i]
        if f is None or e == 0:
            continue
        for _ in range(e):
            out = out.multiply(f, field)
    return out


def eckart_witnesses(points: list[PlanePoint], field=QQ) -> list[dict]:
    """All triples of exceptional curves meeting in one surface point (r=6).

    Two shapes occur: three realized curves (lines/conics) through a common
    plane point away from the blown-up points, and a curve pair tangent at a
    blown-up point p_i, which meets the exceptional divisor e_i in the same
    direction.  Both are detected exactly.
    """
    r = len(points)
    if r < 6:
        return []
    real = realize(points, field)
    ring = real.ring
    witnesses = []

    # three disjoint lines f_ab, f_cd, f_ef concurrent away from the points
    for part in _perfect_matchings(tuple(range(1, 7))):
        names = [f"f{a}{b}" for a, b in part]
        rows = [list(real.form_of(nm).coeffs) for nm in names]
        if linalg.rank(rows, field) < 3:
            witnesses.append({"curves": tuple(names), "kind": "concurrent-lines"})

    # e_i, f_ij, g_j: line p_i p_j tangent to the五-point conic g_j at p_i
    for i in range(1, 7):
        for j in range(1, 7):
            if i == j:
                continue
            line = real.form_of(f"f{min(i,j)}{max(i,j)}")
            conic = real.form_of(f"g{j}")
            grad = conic.gradient_at(points[i - 1], field)
            # tangency: the polar line at p_i is proportional to the line
            a, b = grad, line.coeffs
            cross = (
                field.sub(field.mul(a[1], b[2]), field.mul(a[2], b[1])),
                field.sub(field.mul(a[2], b[0]), field.mul(a[0], b[2])),
                field.sub(field.mul(a[0], b[1]), field.mul(a[1], b[0])),
            )
            if all(c == field.zero for c in cross):
                witnesses.append({
                    "curves": (f"e{i}", f"f{min(i,j)}{max(i,j)}", f"g{j}"),
                    "kind": "tangent-at-point",
                })
    return witnesses


def has_eckart_point(points: list[PlanePoint], field=QQ):
    """First Eckart witness or None; r < 6 has none by convention."""
    ws = eckart_witnesses(points, field)
    return ws[0] if ws else None


def _perfect_matchings(items: tuple[int, ...]):
    if not items:
        yield ()
        return
    first = items[0]
    for k in range(1, len(items)):
        pair = (first, items[k])
        rest = items[1:k] + items[k + 1:]
        for sub in _perfect_matchings(rest):
            yield (pair,) + sub


# ---------------------------------------------------------------------------
# relations and Q_r
# ---------------------------------------------------------------------------

def form_matrix(real: Realization, monomials: list[Exponents]):
    """Rows = coefficient vectors of the plane forms of the monomials."""
    return [list(monomial_to_form(real, m).coeffs) for m in monomials]


def relations_in_degree(real: Realization, degree: DivisorClass,
                        anchors: Optional[tuple[int, int]] = None) -> list[Polynomial]:
    """Kernel of the section matrix in one Pic degree, as polynomials.

    For a class whose sections span a space of codimension >= 1 the output
    is a kernel basis.  When possible each basis vector is anchored on a
    fixed independent pair, so conic classes yield relations supported on
    exactly 3 monomials.
    """
    ring = real.ring
    field = real.field
    monomials = enumerate_monomials(ring, degree)
    if not monomials:
        return []
    rows = form_matrix(real, monomials)
    ncols = len(rows[0])
    # columns = monomials for the rank computation
    mat = [[rows[j][i] for j in range(len(monomials))] for i in range(ncols)]
    rnk = linalg.rank(mat, field)
    dim_kernel = len(monomials) - rnk
    if dim_kernel == 0:
        return []

    if anchors is None:
        anchors = _independent_pair(rows, field)
    out = []
    if anchors is not None:
        ai, aj = anchors
        for k in range(len(monomials)):
            if k in (ai, aj):
                continue
            combo = linalg.solve_in_span([rows[ai], rows[aj]], rows[k], field)
            if combo is None:
                continue
            terms = {monomials[k]: field.one,
                     monomials[ai]: field.neg(combo[0]),
                     monomials[aj]: field.neg(combo[1])}
            out.append(Polynomial(ring, field, terms))
        if len(out) == dim_kernel:
            return out
    # fall back to a plain kernel basis
    kern = linalg.kernel_basis(mat, field)
    out = []
    for v in kern:
        terms = {m: c for m, c in zip(monomials, v) if c != field.zero}
        out.append(Polynomial(ring, field, terms))
    return out


def _independent_pair(rows, field):
    """Indices of the last two rows that are linearly independent."""
    n = len(rows)
    for j in range(n - 1, -1, -1):
        for i in range(j - 1, -1, -1):
            if linalg.rank([rows[i], rows[j]], field) == 2:
                return (i, j)
    return None


def build_qr(points: list[PlanePoint], field=QQ, r: Optional[int] = None) -> list[Polynomial]:
    """Generators of Q_r: 3-term relations, r-3 per conic class."""
    from .picard import enumerate_conics

    real = realize(points, field, r)
    gens = []
    for conic in enumerate_conics(real.ring.r):
        rels = relations_in_degree(real, conic)
        expected = real.ring.r - 3
        if len(rels) != expected:
            raise ValueError(
                f"conic {conic} yielded {len(rels)} relations, expected {expected};"
                " configuration is degenerate"
            )
        gens.extend(rels)
    return gens


STANDARD_POINTS_4 = (
    plane_point(1, 0, 0),
    plane_point(0, 1, 0),
    plane_point(0, 0, 1),
    plane_point(1, 1, 1),
)
