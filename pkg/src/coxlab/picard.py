"""Picard lattice of a Del Pezzo surface X_r (r = 4, 5, 6).

The lattice Z^{r+1} carries the basis (l, e_1, ..., e_r) where l is the
pullback of a plane line and the e_i are the exceptional divisors of the
blown-up points.  The intersection form is l.l = 1, e_i.e_j = -delta_ij,
l.e_i = 0, and the canonical class is K = -3l + e_1 + ... + e_r.

This module classifies the exceptional ((-1)-)curves and the conic bundle
classes, and builds the finite Weyl group W_r generated by the coordinate
transpositions of the e_i together with the quadratic Cremona involution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "DivisorClass",
    "CurveSet",
    "WeylElement",
    "WeylGroup",
    "ell",
    "e_i",
    "canonical_class",
    "intersect",
    "coarse_degree",
    "enumerate_exceptional",
    "enumerate_conics",
    "weyl_group",
    "act",
]

MIN_R = 4
MAX_R = 6


def _check_r(r: int) -> None:
    if not MIN_R <= r <= MAX_R:
        raise ValueError(f"r must be between {MIN_R} and {MAX_R}, got {r}")


@dataclass(frozen=True)
class DivisorClass:
    """Integer class m*l + a_1*e_1 + ... + a_r*e_r, stored as (m, a_1..a_r).

    Doubles as a Pic-multidegree for the Cox ring.
    """

    r: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_r(self.r)
        if len(self.coeffs) != self.r + 1:
            raise ValueError(
                f"expected {self.r + 1} coefficients, got {len(self.coeffs)}"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._same_lattice(other)
        return DivisorClass(self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._same_lattice(other)
        return DivisorClass(self.r, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.r, tuple(-a for a in self.coeffs))

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(self.r, tuple(n * a for a in self.coeffs))

    __rmul__ = __mul__

    def _same_lattice(self, other: "DivisorClass") -> None:
        if self.r != other.r:
            raise ValueError(f"mixed lattices: r={self.r} vs r={other.r}")

    def dot(self, other: "DivisorClass") -> int:
        return intersect(self, other)

    @property
    def self_intersection(self) -> int:
        return intersect(self, self)

    def __repr__(self):
        return f"DivisorClass(r={self.r}, {format_class(self)})"


def ell(r: int) -> DivisorClass:
    """The pullback of a plane line."""
    return DivisorClass(r, (1,) + (0,) * r)


def e_i(r: int, i: int) -> DivisorClass:
    """The i-th exceptional divisor (1-based)."""
    if not 1 <= i <= r:
        raise ValueError(f"index {i} out of range for r={r}")
    c = [0] * (r + 1)
    c[i] = 1
    return DivisorClass(r, tuple(c))


def canonical_class(r: int) -> DivisorClass:
    """K = -3l + e_1 + ... + e_r."""
    return DivisorClass(r, (-3,) + (1,) * r)


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection pairing: m1*m2 - sum(a_i*b_i)."""
    d1._same_lattice(d2)
    m = d1.coeffs[0] * d2.coeffs[0]
    return m - sum(a * b for a, b in zip(d1.coeffs[1:], d2.coeffs[1:]))


def coarse_degree(d: DivisorClass) -> int:
    """The Z-grading -K.D refining nothing: every exceptional class has degree 1."""
    return -intersect(canonical_class(d.r), d)


def format_class(d: DivisorClass) -> str:
    """Human-readable form like '2l - e1 - e2 - e3 - e4'."""
    parts = []
    m = d.coeffs[0]
    if m:
        parts.append(f"{m}l" if m not in (1, -1) else ("l" if m == 1 else "-l"))
    for i, a in enumerate(d.coeffs[1:], start=1):
        if a == 0:
            continue
        sign = "+" if a > 0 else "-"
        mag = abs(a)
        term = f"e{i}" if mag == 1 else f"{mag}e{i}"
        parts.append(f"{sign} {term}" if parts else (f"{term}" if a > 0 else f"-{term}"))
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CurveSet:
    """The exceptional curves of X_r in canonical order with printable labels.

    Order: e_1 < ... < e_r < f_12 < f_13 < ... < f_(r-1)r < g (r=5) or
    g_1 < ... < g_6 (r=6).  The labels follow the classical naming: e_i for
    exceptional divisors, f_ij for strict transforms of lines through two
    points, g/g_i for strict transforms of conics through five points.
    """

    r: int
    curves: tuple[DivisorClass, ...]
    names: tuple[str, ...]

    def __len__(self):
        return len(self.curves)

    def index(self, d: DivisorClass) -> int:
        return self.curves.index(d)

    def name_of(self, d: DivisorClass) -> str:
        return self.names[self.index(d)]

    def by_name(self, name: str) -> DivisorClass:
        return self.curves[self.names.index(name)]


@lru_cache(maxsize=None)
def enumerate_exceptional(r: int) -> CurveSet:
    """All classes C with K.C = -1 and C.C = -1, canonically ordered.

    The search runs over the finite coefficient box m in 0..2, a_i in -2..1
    that contains every solution for r <= 6; the result is assembled in the
    canonical label order e_i, f_ij, g(_i).
    """
    _check_r(r)
    k = canonical_class(r)
    solutions = set()
    for m in range(0, 3):
        for rest in itertools.product(range(-2, 2), repeat=r):
            d = DivisorClass(r, (m,) + rest)
            if intersect(k, d) == -1 and intersect(d, d) == -1:
                solutions.add(d)

    curves: list[DivisorClass] = []
    names: list[str] = []
    for i in range(1, r + 1):
        curves.append(e_i(r, i))
        names.append(f"e{i}")
    for i, j in itertools.combinations(range(1, r + 1), 2):
        curves.append(ell(r) - e_i(r, i) - e_i(r, j))
        names.append(f"f{i}{j}")
    if r == 5:
        curves.append(2 * ell(r) - sum((e_i(r, i) for i in range(1, 6)), DivisorClass(r, (0,) * 6)))
        names.append("g")
    elif r == 6:
        for i in range(1, 7):
            g = 2 * ell(r) - sum(
                (e_i(r, j) for j in range(1, 7) if j != i), DivisorClass(r, (0,) * 7)
            )
            curves.append(g)
            names.append(f"g{i}")

    if set(curves) != solutions:
        raise AssertionError("curve classification does not match the lattice search")
    return CurveSet(r, tuple(curves), tuple(names))


@lru_cache(maxsize=None)
def enumerate_conics(r: int) -> tuple[DivisorClass, ...]:
    """All classes C with -K.C = 2 and C.C = 0 (conic bundle classes)."""
    _check_r(r)
    k = canonical_class(r)
    found = []
    for m in range(0, 4):
        for rest in itertools.product(range(-2, 1), repeat=r):
            d = DivisorClass(r, (m,) + rest)
            if intersect(k, d) == -2 and intersect(d, d) == 0:
                found.append(d)
    found.sort(key=lambda d: (coarse_degree(d), d.coeffs))
    return tuple(found)


def _mat_vec(matrix: tuple[tuple[int, ...], ...], vec: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in matrix)


def _mat_mul(a, b):
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(a[i][k] * bt[j][k] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _mat_inv(matrix: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Exact inverse of a unimodular integer matrix."""
    n = len(matrix)
    m = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if m[i][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    inv = tuple(tuple(int(m[i][n + j]) for j in range(n)) for i in range(n))
    return inv


@dataclass(frozen=True)
class WeylElement:
    """A lattice automorphism preserving the pairing and fixing K.

    ``matrix`` acts on coefficient vectors (columns are the images of the
    basis classes); ``curve_perm`` is the induced permutation of the
    canonical CurveSet: curve i maps to curve curve_perm[i].
    """

    r: int
    matrix: tuple[tuple[int, ...], ...]

    def __call__(self, d: DivisorClass) -> DivisorClass:
        return act(self, d)

    @property
    def curve_perm(self) -> tuple[int, ...]:
        return _curve_perm(self.r, self.matrix)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self after other: (self*other)(D) = self(other(D))."""
        if self.r != other.r:
            raise ValueError("mixed lattices")
        return WeylElement(self.r, _mat_mul(self.matrix, other.matrix))

    __mul__ = compose

    def inverse(self) -> "WeylElement":
        return WeylElement(self.r, _mat_inv(self.matrix))

    def is_identity(self) -> bool:
        n = self.r + 1
        return all(self.matrix[i][j] == int(i == j) for i in range(n) for j in range(n))


@lru_cache(maxsize=None)
def _curve_perm(r: int, matrix) -> tuple[int, ...]:
    curves = enumerate_exceptional(r)
    lookup = {d.coeffs: i for i, d in enumerate(curves.curves)}
    perm = []
    for d in curves.curves:
        image = _mat_vec(matrix, d.coeffs)
        if image not in lookup:
            raise ValueError("matrix does not permute the exceptional curves")
        perm.append(lookup[image])
    return tuple(perm)


def act(g: WeylElement, d: DivisorClass) -> DivisorClass:
    if g.r != d.r:
        raise ValueError("mixed lattices")
    return DivisorClass(d.r, _mat_vec(g.matrix, d.coeffs))


def identity_element(r: int) -> WeylElement:
    n = r + 1
    return WeylElement(r, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def transposition(r: int, i: int, j: int) -> WeylElement:
    """The element exchanging e_i and e_j (and fixing the other basis classes)."""
    n = r + 1
    mat = [[int(a == b) for b in range(n)] for a in range(n)]
    mat[i][i] = mat[j][j] = 0
    mat[i][j] = mat[j][i] = 1
    return WeylElement(r, tuple(tuple(row) for row in mat))


def cremona(r: int) -> WeylElement:
    """The quadratic Cremona involution based at the first three points.

    l -> 2l - e1 - e2 - e3, e1 -> l - e2 - e3, e2 -> l - e1 - e3,
    e3 -> l - e1 - e2, e_i -> e_i otherwise.
    """
    _check_r(r)
    n = r + 1
    cols = [[0] * n for _ in range(n)]
    cols[0] = [2, -1, -1, -1] + [0] * (r - 3)
    cols[1] = [1, 0, -1, -1] + [0] * (r - 3)
    cols[2] = [1, -1, 0, -1] + [0] * (r - 3)
    cols[3] = [1, -1, -1, 0] + [0] * (r - 3)
    for i in range(4, n):
        cols[i][i] = 1
    mat = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return WeylElement(r, mat)


def weyl_generators(r: int) -> tuple[WeylElement, ...]:
    """The r-1 adjacent e-transpositions plus the Cremona involution."""
    gens = [transposition(r, i, i + 1) for i in range(1, r)]
    gens.append(cremona(r))
    return tuple(gens)


@dataclass(frozen=True)
class WeylGroup:
    r: int
    elements: tuple[WeylElement, ...]
    generators: tuple[WeylElement, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]


@lru_cache(maxsize=None)
def weyl_group(r: int) -> WeylGroup:
    """Breadth-first closure of the generators; identity comes first.

    Elements are deduplicated by matrix equality; the ordering is the BFS
    discovery order, which is deterministic given the generator list.  The
    closure is batched through numpy int64 products (entries stay tiny, so
    the arithmetic is exact); matrices are stored back as plain int tuples.
    """
    import numpy as np

    _check_r(r)
    gens = weyl_generators(r)
    n = r + 1
    gen_arr = np.array([g.matrix for g in gens], dtype=np.int64)
    ident = np.eye(n, dtype=np.int64)
    seen = {ident.tobytes()}
    order = [ident]
    frontier = np.array([ident])
    while len(frontier):
        # products gen @ el for every (gen, el) pair in one einsum
        prod = np.einsum("gij,fjk->gfik", gen_arr, frontier).reshape(-1, n, n)
        fresh = []
        for mat in prod:
            key = mat.tobytes()
            if key not in seen:
                seen.add(key)
                order.append(mat)
                fresh.append(mat)
        frontier = np.array(fresh) if fresh else np.empty((0, n, n), dtype=np.int64)
    elements = tuple(
        WeylElement(r, tuple(tuple(int(x) for x in row) for row in mat)) for mat in order
    )
    return WeylGroup(r, elements, gens)


def orbit(seeds: list[DivisorClass], gens: tuple[WeylElement, ...]) -> set[DivisorClass]:
    """Closure of a set of classes under a generating set."""
    out = set(seeds)
    frontier = list(seeds)
    while frontier:
        d = frontier.pop()
        for g in gens:
            image = act(g, d)
            if image not in out:
                out.add(image)
                frontier.append(image)
    return out
