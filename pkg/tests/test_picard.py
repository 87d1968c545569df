import itertools
import random

import numpy as np
import pytest

from coxlab import picard as P


def brute_force_pairing(c1, c2):
    # independent oracle: expand the bilinear form on the basis directly
    total = c1[0] * c2[0]
    for a, b in zip(c1[1:], c2[1:]):
        total -= a * b
    return total


def test_intersection_examples():
    l4 = P.ell(4)
    assert P.intersect(l4, l4) == 1
    e1 = P.e_i(4, 1)
    assert P.intersect(e1, e1) == -1
    assert P.intersect(P.e_i(4, 1), P.e_i(4, 2)) == 0
    k6 = P.canonical_class(6)
    assert P.intersect(k6, k6) == brute_force_pairing(k6.coeffs, k6.coeffs) == 3


def test_intersect_rejects_mixed_lattices():
    with pytest.raises(ValueError):
        P.intersect(P.ell(4), P.ell(5))


@pytest.mark.parametrize("r,expected", [(4, 10), (5, 16), (6, 27)])
def test_exceptional_counts(r, expected):
    curves = P.enumerate_exceptional(r)
    assert len(curves) == expected
    k = P.canonical_class(r)
    for c in curves.curves:
        assert P.intersect(k, c) == -1
        assert P.intersect(c, c) == -1
    assert len(set(curves.curves)) == expected


@pytest.mark.parametrize("r,expected", [(4, 5), (5, 10), (6, 27)])
def test_conic_counts(r, expected):
    conics = P.enumerate_conics(r)
    assert len(conics) == expected
    k = P.canonical_class(r)
    for c in conics:
        assert P.intersect(k, c) == -2
        assert P.intersect(c, c) == 0


def test_conic_shapes_r6():
    shapes = {(1, 0): 0, (2, -1): 0, (3, -2): 0}
    for c in P.enumerate_conics(6):
        shapes[(c.coeffs[0], min(c.coeffs[1:]))] += 1
    assert shapes == {(1, 0): 6, (2, -1): 15, (3, -2): 6}


def test_r_out_of_range():
    with pytest.raises(ValueError):
        P.enumerate_exceptional(7)
    with pytest.raises(ValueError):
        P.enumerate_conics(3)


@pytest.mark.parametrize("r,size", [(4, 120), (5, 1920), (6, 51840)])
def test_weyl_group_sizes(r, size):
    assert len(P.weyl_group(r)) == size


def test_identity_fixes_every_curve():
    group = P.weyl_group(4)
    assert group.identity.curve_perm == tuple(range(10))


def test_cremona_images():
    sig = P.cremona(6)
    assert P.act(sig, P.ell(6)).coeffs == (2, -1, -1, -1, 0, 0, 0)
    assert P.act(sig, P.e_i(6, 1)).coeffs == (1, 0, -1, -1, 0, 0, 0)
    assert sig.compose(sig).is_identity()


def test_all_elements_preserve_form_and_fix_K():
    # batch-verified for the full group of every rank
    for r in (4, 5, 6):
        group = P.weyl_group(r)
        mats = np.array([el.matrix for el in group], dtype=np.int64)
        q = np.diag([1] + [-1] * r).astype(np.int64)
        assert (np.einsum("nji,jk,nkl->nil", mats, q, mats) == q).all()
        k = np.array(P.canonical_class(r).coeffs, dtype=np.int64)
        assert (mats @ k == k).all()


def test_action_is_transitive_on_curves_and_conics():
    for r in (4, 5, 6):
        group = P.weyl_group(r)
        curves = P.enumerate_exceptional(r)
        orb = P.orbit([curves.curves[0]], group.generators)
        assert orb == set(curves.curves)
        conics = P.enumerate_conics(r)
        orb = P.orbit([conics[0]], group.generators)
        assert orb == set(conics)


def test_generators_fix_curve_and_conic_sets():
    for r in (4, 5, 6):
        curves = set(P.enumerate_exceptional(r).curves)
        conics = set(P.enumerate_conics(r))
        for g in P.weyl_generators(r):
            assert {P.act(g, c) for c in curves} == curves
            assert {P.act(g, c) for c in conics} == conics


def test_curve_perm_composition():
    rng = random.Random(0)
    group = P.weyl_group(5)
    n = len(P.enumerate_exceptional(5))
    for _ in range(20):
        a, b = rng.choice(group.elements), rng.choice(group.elements)
        pa, pb = a.curve_perm, b.curve_perm
        assert a.compose(b).curve_perm == tuple(pa[pb[i]] for i in range(n))


def test_inverse_roundtrip():
    rng = random.Random(1)
    group = P.weyl_group(5)
    for _ in range(10):
        g = rng.choice(group.elements)
        assert g.compose(g.inverse()).is_identity()


def test_form_preservation_pointwise_basis():
    for r in (4, 5, 6):
        basis = [P.ell(r)] + [P.e_i(r, i) for i in range(1, r + 1)]
        for g in P.weyl_generators(r):
            for d1, d2 in itertools.product(basis, repeat=2):
                assert P.intersect(P.act(g, d1), P.act(g, d2)) == P.intersect(d1, d2)


def test_coarse_degrees():
    for r in (4, 5, 6):
        for c in P.enumerate_exceptional(r).curves:
            assert P.coarse_degree(c) == 1
        for c in P.enumerate_conics(r):
            assert P.coarse_degree(c) == 2
    assert P.coarse_degree(-P.canonical_class(6)) == 3
    assert P.coarse_degree(-P.canonical_class(4)) == 5


def test_act_fixes_K_spot_check_full_W5():
    k = P.canonical_class(5)
    for el in P.weyl_group(5):
        assert P.act(el, k) == k


def test_canonical_curve_order_and_labels():
    curves = P.enumerate_exceptional(5)
    assert curves.names[:5] == ("e1", "e2", "e3", "e4", "e5")
    assert curves.names[5] == "f12"
    assert curves.names[-1] == "g"
    curves6 = P.enumerate_exceptional(6)
    assert curves6.names[-6:] == ("g1", "g2", "g3", "g4", "g5", "g6")
    assert curves6.by_name("f34").coeffs == (1, 0, 0, -1, -1, 0, 0)
