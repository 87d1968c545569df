"""The graph L_r of exceptional curves and quadratic initial-ideal search.

Vertices are the exceptional curves; two are joined when their intersection
number is one, and the edge gets the conic class of the sum of its
endpoints as color (r-1 edges per color).  Quadratic initial ideals of the
conic-relation ideal are edge ideals of subgraphs with r-3 edges per color
class; this module enumerates such selections, filters them by multigraded
Hilbert data, classifies them up to the Weyl group, and certifies
realizability by explicit weight vectors.

For r = 6 it also provides the combinatorial obstruction used to rule out
small candidates: any three curves not forming a triangle extend to a
10-vertex independent set of every candidate omitting them, capping the
candidate's codimension at 17 while the relation ideal has codimension 18.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from . import linalg
from .groebner import MonomialIdeal, binom_target, buchberger, stable_count
from .picard import (
    DivisorClass,
    WeylGroup,
    coarse_degree,
    enumerate_conics,
    enumerate_exceptional,
    intersect,
    weyl_generators,
    weyl_group,
)
from .ring import CoxRing, Exponents, MonomialOrder, Polynomial, cox_ring

__all__ = [
    "CurveGraph",
    "SubgraphSelection",
    "build_graph",
    "quadratic_candidates",
    "filter_candidates",
    "orbit_classes",
    "find_realizing_weight",
    "realize_by_weight",
    "search_quadratic_gb",
    "config_witness",
    "small_candidate_obstruction",
]


# ---------------------------------------------------------------------------
# the curve graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CurveGraph:
    r: int
    edges: tuple[tuple[int, int], ...]          # curve index pairs, i < j
    colors: tuple[tuple[int, ...], ...]          # conic class coeffs per edge
    color_classes: tuple[tuple[int, ...], ...]   # edge ids per conic, conic order

    @property
    def curves(self):
        return enumerate_exceptional(self.r)

    @property
    def conics(self) -> tuple[DivisorClass, ...]:
        return ordered_conics(self.r)

    def edge_id(self, i: int, j: int) -> int:
        return self._edge_index()[(min(i, j), max(i, j))]

    @lru_cache(maxsize=None)
    def _edge_index(self):
        return {e: k for k, e in enumerate(self.edges)}

    def adjacency(self) -> list[list[int]]:
        n = len(self.curves)
        adj = [[0] * n for _ in range(n)]
        for i, j in self.edges:
            adj[i][j] = adj[j][i] = 1
        return adj

    def edge_names(self) -> list[tuple[str, str]]:
        names = self.curves.names
        return [(names[i], names[j]) for i, j in self.edges]

    def to_dot(self) -> str:
        names = self.curves.names
        lines = [f"graph L{self.r} {{"]
        for i, j in self.edges:
            c = self.colors[self.edge_id(i, j)]
            lines.append(f'  {names[i]} -- {names[j]} [color_class="{c}"];')
        lines.append("}")
        return "\n".join(lines)


@lru_cache(maxsize=8)
def ordered_conics(r: int) -> tuple[DivisorClass, ...]:
    """Conic classes sorted with the degree-1 pencils first."""
    return tuple(sorted(enumerate_conics(r), key=lambda c: (c.coeffs[0], c.coeffs)))


@lru_cache(maxsize=8)
def build_graph(r: int) -> CurveGraph:
    curves = enumerate_exceptional(r)
    n = len(curves)
    edges = []
    colors = []
    for i, j in itertools.combinations(range(n), 2):
        if intersect(curves.curves[i], curves.curves[j]) == 1:
            edges.append((i, j))
            colors.append((curves.curves[i] + curves.curves[j]).coeffs)
    by_color = defaultdict(list)
    for eid, c in enumerate(colors):
        by_color[c].append(eid)
    classes = tuple(tuple(by_color[c.coeffs]) for c in ordered_conics(r))
    if any(len(cl) != r - 1 for cl in classes):
        raise AssertionError("each color class must have r-1 edges")
    return CurveGraph(r, tuple(edges), tuple(colors), classes)


# ---------------------------------------------------------------------------
# selections
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubgraphSelection:
    """r-3 edges chosen in every color class; the edge ideal is their
    squarefree quadratic monomial ideal."""

    r: int
    edge_ids: tuple[int, ...]

    @classmethod
    def from_mask(cls, r: int, mask: int) -> "SubgraphSelection":
        return cls(r, tuple(e for e in range(len(build_graph(r).edges)) if (mask >> e) & 1))

    @property
    def mask(self) -> int:
        return sum(1 << e for e in self.edge_ids)

    def monomials(self) -> list[Exponents]:
        graph = build_graph(self.r)
        n = len(graph.curves)
        out = []
        for eid in self.edge_ids:
            i, j = graph.edges[eid]
            exps = [0] * n
            exps[i] += 1
            exps[j] += 1
            out.append(tuple(exps))
        return out

    def edge_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_generators(cox_ring(self.r), self.monomials())

    def variables_used(self) -> frozenset[int]:
        graph = build_graph(self.r)
        out = set()
        for eid in self.edge_ids:
            out.update(graph.edges[eid])
        return frozenset(out)

    def per_class_valid(self) -> bool:
        graph = build_graph(self.r)
        chosen = set(self.edge_ids)
        return all(len(chosen & set(cl)) == self.r - 3 for cl in graph.color_classes)


def selection_from_ideal(ideal: MonomialIdeal) -> Optional[SubgraphSelection]:
    """Selection whose edge ideal is ``ideal``, or None if not of that shape."""
    graph = build_graph(ideal.ring.r)
    index = graph._edge_index()
    ids = []
    for g in ideal.gens:
        if sum(g) != 2:
            return None
        sup = tuple(i for i, e in enumerate(g) if e)
        if len(sup) != 2 or sup not in index:
            return None
        ids.append(index[sup])
    sel = SubgraphSelection(ideal.ring.r, tuple(sorted(ids)))
    return sel if sel.per_class_valid() else None


def quadratic_candidates(r: int) -> Iterator[SubgraphSelection]:
    """All per-class choices of r-3 edges (243 for r=4, 6^10 for r=5).

    For r = 6 the stream is astronomically large; use the pruned search or
    the obstruction machinery instead.
    """
    graph = build_graph(r)
    per_class = [list(itertools.combinations(cl, r - 3)) for cl in graph.color_classes]
    for combo in itertools.product(*per_class):
        ids = tuple(sorted(e for pair in combo for e in pair))
        yield SubgraphSelection(r, ids)


@dataclass(frozen=True)
class FilterVerdict:
    selection: SubgraphSelection
    stable_ok: bool
    invariant: bool
    omits_variable: bool

    @property
    def passed(self) -> bool:
        return self.stable_ok and self.invariant


def filter_candidates(candidates: Iterable[SubgraphSelection], r: int,
                      max_m: int = 3) -> list[FilterVerdict]:
    """Hilbert filter: stabilized counts binom(m+2,2) and Weyl-invariance.

    Whether the selection omits a variable is recorded, not used to reject:
    one realizable r=5 class involves all 16 variables, so the
    all-variables test is a hypothesis for the generation theorem rather
    than a property of initial ideals.
    """
    from .symmetry import hs_invariant

    gens = weyl_generators(r)
    n = len(enumerate_exceptional(r))
    out = []
    for sel in candidates:
        ideal = sel.edge_ideal()
        stable_ok = all(stable_count(ideal, m) == binom_target(m) for m in range(max_m + 1))
        invariant = stable_ok and hs_invariant(ideal, gens)
        out.append(FilterVerdict(sel, stable_ok, invariant, len(sel.variables_used()) < n))
    return out


# ---------------------------------------------------------------------------
# orbits of selections
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8)
def _edge_permutations(r: int) -> list[tuple[int, ...]]:
    """For every group element, the induced permutation of edge ids."""
    graph = build_graph(r)
    index = graph._edge_index()
    perms = []
    for el in weyl_group(r).elements:
        cp = el.curve_perm
        row = []
        for i, j in graph.edges:
            a, b = cp[i], cp[j]
            row.append(index[(min(a, b), max(a, b))])
        perms.append(tuple(row))
    return perms


def canonical_mask(r: int, mask: int) -> int:
    """Lexicographically minimal image of the edge set under the group."""
    best = None
    for perm in _edge_permutations(r):
        img = 0
        m = mask
        while m:
            b = m & -m
            img |= 1 << perm[b.bit_length() - 1]
            m ^= b
        if best is None or img < best:
            best = img
    return best


def _canonical_masks_batch(r: int, masks: Sequence[int]) -> list[int]:
    """canonical_mask over many masks at once (numpy, int64 masks only)."""
    import numpy as np

    perms = _edge_permutations(r)
    nedges = len(build_graph(r).edges)
    if nedges > 62:
        return [canonical_mask(r, m) for m in masks]
    pm = np.array(perms, dtype=np.int64)
    inv = np.argsort(pm, axis=1)
    pows = 1 << np.arange(nedges, dtype=np.int64)
    bits = np.zeros((len(masks), nedges), dtype=np.int64)
    for k, mask in enumerate(masks):
        m = mask
        while m:
            b = m & -m
            bits[k, b.bit_length() - 1] = 1
            m ^= b
    best = np.full(len(masks), np.iinfo(np.int64).max, dtype=np.int64)
    for g in range(pm.shape[0]):
        np.minimum(best, bits[:, inv[g]] @ pows, out=best)
    return [int(x) for x in best]


def orbit_classes(selections: Iterable[SubgraphSelection],
                  group: Optional[WeylGroup] = None) -> list[SubgraphSelection]:
    """Deduplicate selections up to the Weyl action; returns representatives.

    Passing a trivial group (single identity element) keeps every selection.
    """
    reps: dict[int, SubgraphSelection] = {}
    trivial = group is not None and len(group) == 1
    for sel in selections:
        key = sel.mask if trivial else canonical_mask(sel.r, sel.mask)
        reps.setdefault(key, sel)
    return [reps[k] for k in sorted(reps)]


# ---------------------------------------------------------------------------
# realizing weights
# ---------------------------------------------------------------------------

def _dominance_rows(sel: SubgraphSelection):
    graph = build_graph(sel.r)
    n = len(graph.curves)
    chosen = set(sel.edge_ids)

    def exps(eid):
        i, j = graph.edges[eid]
        v = [0] * n
        v[i] += 1
        v[j] += 1
        return v

    rows = []
    for cl in graph.color_classes:
        for c in cl:
            if c not in chosen:
                continue
            for u in cl:
                if u in chosen:
                    continue
                ec, eu = exps(c), exps(u)
                rows.append([a - b for a, b in zip(eu, ec)])
    return rows


def find_realizing_weight(sel: SubgraphSelection) -> Optional[tuple[int, ...]]:
    """Integer weight vector making every chosen edge strictly outweigh the
    unchosen edges of its color class, or None when the cone is empty.

    Feasibility is located with floating-point linear programming, then the
    rounded integer vector is verified exactly; only exact verification can
    accept a weight.
    """
    from scipy.optimize import linprog

    rows = _dominance_rows(sel)
    n = len(rows[0])
    res = linprog(c=[0] * n, A_ub=rows, b_ub=[-1] * len(rows),
                  bounds=[(None, None)] * n, method="highs")
    if not res.success:
        return None
    for scale in (1, 10, 100, 1000, 10**4, 10**6):
        w = [round(x * scale) for x in res.x]
        if all(sum(a * wi for a, wi in zip(row, w)) <= -1 for row in rows):
            return tuple(w)
    return None


@dataclass(frozen=True)
class RealizeReport:
    dominant: bool
    initial_matches: Optional[bool]

    @property
    def realized(self) -> bool:
        return self.dominant and bool(self.initial_matches)


def realize_by_weight(sel: SubgraphSelection, weights: Sequence[int], points,
                      order_template: Optional[MonomialOrder] = None,
                      field=None) -> RealizeReport:
    """Two-stage check that a weight realizes the selection as initial ideal.

    Stage one asks, for every chosen edge, for two strictly smaller
    monomials in its color class under the weight-refined order (ties fall
    through to the revlex tiebreak).  Stage two runs Buchberger on the
    conic relations at the given points and compares initial ideals.
    """
    from .geometry import build_qr
    from .ring import QQ

    field = field or QQ
    ring = cox_ring(sel.r)
    graph = build_graph(sel.r)
    order = (order_template or MonomialOrder(ring)).with_weights(weights)
    chosen = set(sel.edge_ids)

    def exps(eid):
        i, j = graph.edges[eid]
        v = [0] * len(graph.curves)
        v[i] += 1
        v[j] += 1
        return tuple(v)

    dominant = True
    for cl in graph.color_classes:
        for c in (e for e in cl if e in chosen):
            smaller = sum(
                1 for u in cl if u != c and order.compare(exps(u), exps(c)) < 0
            )
            if smaller < 2:
                dominant = False
    if not dominant:
        return RealizeReport(False, None)
    gens = build_qr(list(points), field, sel.r)
    gb = buchberger(gens, order)
    initial = gb.initial
    matches = set(initial.gens) == set(sel.edge_ideal().gens)
    return RealizeReport(True, matches)


# ---------------------------------------------------------------------------
# the pruned r=5 search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchResult:
    hilbert_classes: tuple[SubgraphSelection, ...]
    realizable: tuple[SubgraphSelection, ...]
    weights: tuple[tuple[int, ...], ...]      # one realizing weight per class
    omits_variable: tuple[bool, ...]
    survivor_count: int


def _r5_search_tables():
    """Static data for the pruned depth-first enumeration."""
    r = 5
    graph = build_graph(r)
    curves = graph.curves
    n = len(curves)
    names = curves.names
    fvars = [i for i, nm in enumerate(names) if nm.startswith("f")]
    fpos = {v: k for k, v in enumerate(fvars)}

    pairs_per_class = [list(itertools.combinations(cl, 2)) for cl in graph.color_classes]
    class_of_edge = {}
    for ci, cl in enumerate(graph.color_classes):
        for eid in cl:
            class_of_edge[eid] = ci

    # edge metadata: touched-f bit for e-f edges, e-g flag, endpoints for f-f
    edge_kind = []
    for eid, (i, j) in enumerate(graph.edges):
        ki, kj = names[i][0], names[j][0]
        if {ki, kj} == {"e", "f"}:
            fv = i if ki == "f" else j
            edge_kind.append(("ef", 1 << fpos[fv]))
        elif {ki, kj} == {"e", "g"}:
            edge_kind.append(("eg", 0))
        else:
            edge_kind.append(("ff", (i, j)))

    # coarse-3 divisor classes: monomial kill-masks and Weyl orbits
    index = graph._edge_index()
    deg3 = defaultdict(list)
    for combo in itertools.combinations_with_replacement(range(n), 3):
        d = (curves.curves[combo[0]] + curves.curves[combo[1]] + curves.curves[combo[2]]).coeffs
        emask = 0
        for a, b in itertools.combinations(sorted(set(combo)), 2):
            if (a, b) in index:
                emask |= 1 << index[(a, b)]
        deg3[d].append(emask)
    gens = weyl_generators(r)
    orbit_of = {}
    norbits = 0
    from .picard import orbit as curve_orbit

    for d in deg3:
        if d in orbit_of:
            continue
        orb = {x.coeffs for x in curve_orbit([DivisorClass(r, d)], gens)} & set(deg3)
        for x in orb:
            orbit_of[x] = norbits
        norbits += 1
    ready_at = defaultdict(list)
    for d, masks in deg3.items():
        dep = 0
        for mk in masks:
            m = mk
            while m:
                b = m & -m
                dep = max(dep, class_of_edge[b.bit_length() - 1])
                m ^= b
        ready_at[dep].append((orbit_of[d], tuple(masks)))
    return graph, fvars, fpos, pairs_per_class, edge_kind, dict(ready_at), norbits


def _r5_stage2(args):
    """Depth-first completion of one stage-1 prefix; returns leaf masks."""
    (prefix_sel, touched, estab0, pairs_per_class, edge_kind, ready_at, fvars, fpos) = args
    untouched = frozenset(v for v in fvars if not (touched >> fpos[v]) & 1)
    out = []
    estab = list(estab0)

    def count(masks, sel):
        return sum(1 for mk in masks if not (mk & sel))

    def check(depth, sel):
        undo = []
        for oid, masks in ready_at.get(depth, ()):
            c = count(masks, sel)
            if estab[oid] is None:
                undo.append((oid, None))
                estab[oid] = c
            elif estab[oid] != c:
                for o, old in reversed(undo):
                    estab[o] = old
                return None
        return undo

    def dfs(depth, sel, g_touched, badff):
        if depth == 10:
            if (g_touched and badff == 0) or (not g_touched and badff == 1):
                out.append(sel)
            return
        for pair in pairs_per_class[depth]:
            nsel = sel | (1 << pair[0]) | (1 << pair[1])
            ng, nbad = g_touched, badff
            for eid in pair:
                kind, data = edge_kind[eid]
                if kind == "eg":
                    ng = True
                elif kind == "ff":
                    i, j = data
                    if i in untouched and j in untouched:
                        nbad += 1
            if nbad > 1:
                continue
            undo = check(depth, nsel)
            if undo is None:
                continue
            dfs(depth + 1, nsel, ng, nbad)
            for o, old in reversed(undo):
                estab[o] = old

    dfs(5, prefix_sel, False, 0)
    return out


def _r5_survivors(workers: int = 1) -> list[int]:
    """All selections passing the cheap stabilized-count and coarse-3
    orbit-constancy pruning, as 40-bit edge masks."""
    (graph, fvars, fpos, pairs_per_class, edge_kind, ready_at, norbits) = _r5_search_tables()

    # stage 1: the five degree-1 pencils; exactly 7 of the 10 f's touched
    prefixes = []
    for combo in itertools.product(*pairs_per_class[:5]):
        sel = 0
        touched = 0
        for pair in combo:
            for eid in pair:
                sel |= 1 << eid
                kind, data = edge_kind[eid]
                if kind == "ef":
                    touched |= data
        if bin(touched).count("1") != 7:
            continue
        # establish coarse-3 constraints decided within stage 1
        estab = [None] * norbits
        ok = True
        for depth in range(5):
            for oid, masks in ready_at.get(depth, ()):
                c = sum(1 for mk in masks if not (mk & sel))
                if estab[oid] is None:
                    estab[oid] = c
                elif estab[oid] != c:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            prefixes.append((sel, touched, tuple(estab)))

    jobs = [
        (sel, touched, estab, pairs_per_class, edge_kind, ready_at, fvars, fpos)
        for sel, touched, estab in prefixes
    ]
    if workers > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            chunks = pool.map(_r5_stage2, jobs)
    else:
        chunks = [_r5_stage2(j) for j in jobs]
    out = sorted(m for chunk in chunks for m in chunk)
    return out


def search_quadratic_gb(r: int = 5, workers: int = 1,
                        points=None, field=None, confirm_with_gb: bool = True) -> SearchResult:
    """Exhaustive (pruned) classification of realizable quadratic initial
    ideals of the conic-relation ideal up to the Weyl group.

    Pipeline: pruned enumeration -> orbit canonicalization -> Hilbert
    filter on representatives -> weight-cone feasibility with exact
    certificates -> optional Buchberger confirmation at sample points.
    """
    from .ring import QQ

    if r != 5:
        raise ValueError("the exhaustive search is implemented for r = 5")
    survivors = _r5_survivors(workers)
    reps: dict[int, int] = {}
    for canon, mask in zip(_canonical_masks_batch(5, survivors), survivors):
        reps.setdefault(canon, mask)

    hilbert_classes = []
    realizable = []
    weights = []
    omits = []
    verdicts = filter_candidates(
        [SubgraphSelection.from_mask(5, reps[k]) for k in sorted(reps)], 5
    )
    for verdict in verdicts:
        if not verdict.passed:
            continue
        hilbert_classes.append(verdict.selection)
        w = find_realizing_weight(verdict.selection)
        if w is None:
            continue
        if confirm_with_gb and points is not None:
            report = realize_by_weight(verdict.selection, w, points, field=field)
            if not report.realized:
                continue
        realizable.append(verdict.selection)
        weights.append(w)
        omits.append(verdict.omits_variable)
    return SearchResult(
        tuple(hilbert_classes),
        tuple(realizable),
        tuple(weights),
        tuple(omits),
        len(survivors),
    )


# ---------------------------------------------------------------------------
# r = 6: configuration witnesses and the small-candidate obstruction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConfigWitness:
    hub: int                      # c_1: meets every h
    spokes: tuple[int, ...]       # c_2..c_6
    rungs: tuple[int, ...]        # h_2..h_6, pairwise disjoint
    conic: DivisorClass           # the color whose sections are the c_i h_i


def is_triangle(r: int, triple: Sequence[int]) -> bool:
    curves = enumerate_exceptional(r).curves
    return all(
        intersect(curves[a], curves[b]) == 1
        for a, b in itertools.combinations(triple, 2)
    )


def config_witness(triple: Sequence[int], r: int = 6) -> Optional[ConfigWitness]:
    """Hub-and-spoke witness for a non-triangle triple, None for triangles.

    The witness is a conic class whose five sections c_i h_i avoid the
    triple, with the h_i pairwise disjoint, each h_i meeting only c_i among
    the spokes, and a hub curve c_1 meeting every h_i.
    """
    if r != 6:
        raise ValueError("configuration witnesses are a 27-curve statement")
    graph = build_graph(6)
    curves = graph.curves.curves
    n = len(curves)
    aset = frozenset(triple)
    if len(aset) != 3:
        raise ValueError("need three distinct curves")
    adj = graph.adjacency()

    for conic_idx, cl in enumerate(graph.color_classes):
        sections = [graph.edges[eid] for eid in cl]
        endpoints = {v for e in sections for v in e}
        if endpoints & aset:
            continue
        for orientation in itertools.product((0, 1), repeat=len(sections)):
            rungs = tuple(sections[k][o] for k, o in enumerate(orientation))
            spokes = tuple(sections[k][1 - o] for k, o in enumerate(orientation))
            if any(
                adj[a][b]
                for a, b in itertools.combinations(rungs, 2)
            ):
                continue
            if any(
                adj[rungs[i]][spokes[j]]
                for i in range(5)
                for j in range(5)
                if i != j
            ):
                continue
            for hub in range(n):
                if hub in aset or hub in endpoints:
                    continue
                if all(adj[hub][h] for h in rungs):
                    return ConfigWitness(
                        hub, spokes, rungs, graph.conics[conic_idx]
                    )
    if not is_triangle(6, triple):
        raise AssertionError("non-triangle triple without witness")
    return None


@dataclass(frozen=True)
class ObstructionVerdict:
    kind: str                              # 'codim-certificate' or 'triangle-flagged'
    omitted_triple: tuple[int, ...]
    independent_set: Optional[tuple[int, ...]]
    codim_bound: Optional[int]


def small_candidate_obstruction(ideal: MonomialIdeal) -> ObstructionVerdict:
    """Certify codim <= 17 for an r=6 quadratic candidate missing three
    variables spanning a non-triangle; triangle-only omissions are flagged
    for the weight-infeasibility route instead.

    The certificate is a 10-vertex set independent in the candidate's
    graph: the five spokes of a configuration witness, two rungs whose
    sections the candidate does not use, and the three omitted variables.
    """
    if ideal.ring.r != 6:
        raise ValueError("the obstruction applies to r = 6 candidates")
    graph = build_graph(6)
    n = len(graph.curves)
    used = ideal.variables_used()
    omitted = sorted(set(range(n)) - used)
    if len(omitted) < 3:
        raise ValueError("candidate omits fewer than three variables")

    chosen_edges = set()
    index = graph._edge_index()
    for g in ideal.gens:
        sup = tuple(i for i, e in enumerate(g) if e)
        if len(sup) == 2 and sup in index:
            chosen_edges.add(index[sup])

    for triple in itertools.combinations(omitted, 3):
        if is_triangle(6, triple):
            continue
        witness = config_witness(triple)
        cl = next(
            c for c, conic in enumerate(graph.conics) if conic == witness.conic
        )
        free = []
        for k, eid in enumerate(graph.color_classes[cl]):
            if eid not in chosen_edges:
                free.append(k)
        if len(free) < 2:
            continue
        a, b = free[:2]
        indep = tuple(sorted(set(witness.spokes) | {witness.rungs[a], witness.rungs[b]} | set(triple)))
        if len(indep) != 10:
            continue
        # machine-verify independence against the candidate's generators
        indep_set = set(indep)
        if any(sup <= indep_set for sup in ideal.supports()):
            continue
        return ObstructionVerdict("codim-certificate", triple, indep, n - len(indep))
    return ObstructionVerdict("triangle-flagged", tuple(omitted[:3]), None, None)
