# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Buchberger core over a prime field.

Polynomials are dense exponent rows with int64 coefficients in [0, p),
kept sorted descending by order key.  Monomial orders arrive as an integer
matrix: key(m) = keyrows @ m compared lexicographically; keys add under
monomial multiplication, so shifted reducer terms get keys by addition and
every comparison is a short int64 loop.  The reduced Groebner basis is
canonical, hence identical to the pure engine's output.
"""

import heapq

import numpy as np

cimport numpy as cnp

ctypedef cnp.int64_t I64


cdef class Poly:
    cdef public object exps    # (t, n) int64 ndarray, sorted desc by key
    cdef public object keys    # (t, k) int64 ndarray
    cdef public object coeffs  # (t,) int64 ndarray

    def __init__(self, exps, keys, coeffs):
        self.exps = exps
        self.keys = keys
        self.coeffs = coeffs


cdef long long inv_mod(long long a, long long p):
    cdef long long old_r = a % p, r = p
    cdef long long old_s = 1, s = 0
    cdef long long q, tmp
    while r != 0:
        q = old_r / r
        tmp = old_r - q * r; old_r = r; r = tmp
        tmp = old_s - q * s; old_s = s; s = tmp
    return old_s % p


cdef Poly make_poly(list terms, I64[:, :] keyrows, Py_ssize_t n, long long p):
    """terms: list of (exps tuple, coeff); collects, drops zeros, sorts."""
    cdef Py_ssize_t k = keyrows.shape[0]
    cdef dict acc = {}
    for exps, c in terms:
        key = tuple(exps)
        acc[key] = (acc.get(key, 0) + c) % p
    items = [(e, c) for e, c in acc.items() if c % p]
    cdef Py_ssize_t t = len(items)
    exps_arr = np.zeros((t, n), dtype=np.int64)
    keys_arr = np.zeros((t, k), dtype=np.int64)
    coeff_arr = np.zeros(t, dtype=np.int64)
    cdef I64[:, :] ev = exps_arr
    cdef I64[:, :] kv = keys_arr
    cdef I64[:] cv = coeff_arr
    cdef Py_ssize_t i, j, row
    i = 0
    for e, c in items:
        for j in range(n):
            ev[i, j] = e[j]
        cv[i] = c % p
        i += 1
    for i in range(t):
        for row in range(k):
            for j in range(n):
                kv[i, row] += keyrows[row, j] * ev[i, j]
    order = sorted(range(t), key=lambda idx: tuple(keys_arr[idx]), reverse=True)
    return Poly(exps_arr[order], keys_arr[order], coeff_arr[order])


cdef Poly reduce_full(Poly f, list basis, I64[:, :] leads, Py_ssize_t nbasis,
                      Py_ssize_t n, Py_ssize_t k, long long p):
    """Full normal form of f against basis; tail-reduced.

    ``leads`` holds the basis lead exponents contiguously so the reducer
    search runs without touching the Poly objects.
    """
    cdef I64[:, :] cur_e = f.exps
    cdef I64[:, :] cur_k = f.keys
    cdef I64[:] cur_c = f.coeffs
    cdef Py_ssize_t cur_len = cur_c.shape[0]
    cdef Py_ssize_t cur_pos = 0

    cdef Py_ssize_t cap = cur_len + 64
    out_e = np.zeros((cap, n), dtype=np.int64)
    out_k = np.zeros((cap, k), dtype=np.int64)
    out_c = np.zeros(cap, dtype=np.int64)
    cdef I64[:, :] oe = out_e
    cdef I64[:, :] ok_ = out_k
    cdef I64[:] oc = out_c
    cdef Py_ssize_t out_len = 0

    cdef Poly g
    cdef I64[:, :] ge, gk
    cdef I64[:] gc
    cdef Py_ssize_t i, j, t, gi, ci, bi, hit
    cdef bint div_ok
    cdef long long factor, val
    cdef I64[:, :] ne_, nk_
    cdef I64[:] nc_
    cdef Py_ssize_t new_len, gt
    cdef int cmp_

    while cur_pos < cur_len:
        # find a reducer whose lead divides the current lead
        hit = -1
        with nogil:
            for bi in range(nbasis):
                div_ok = True
                for j in range(n):
                    if leads[bi, j] > cur_e[cur_pos, j]:
                        div_ok = False
                        break
                if div_ok:
                    hit = bi
                    break
        if hit < 0:
            if out_len == cap:
                cap *= 2
                out_e2 = np.zeros((cap, n), dtype=np.int64)
                out_k2 = np.zeros((cap, k), dtype=np.int64)
                out_c2 = np.zeros(cap, dtype=np.int64)
                out_e2[:out_len] = out_e[:out_len]
                out_k2[:out_len] = out_k[:out_len]
                out_c2[:out_len] = out_c[:out_len]
                out_e, out_k, out_c = out_e2, out_k2, out_c2
                oe = out_e; ok_ = out_k; oc = out_c
            for j in range(n):
                oe[out_len, j] = cur_e[cur_pos, j]
            for j in range(k):
                ok_[out_len, j] = cur_k[cur_pos, j]
            oc[out_len] = cur_c[cur_pos]
            out_len += 1
            cur_pos += 1
            continue

        g = <Poly>basis[hit]
        ge = g.exps
        gk = g.keys
        gc = g.coeffs
        gt = gc.shape[0]
        factor = (cur_c[cur_pos] * inv_mod(gc[0], p)) % p
        # merge cur[cur_pos+1:] with -factor * shifted tail of g
        new_len = 0
        ne = np.zeros((cur_len - cur_pos - 1 + gt - 1, n), dtype=np.int64)
        nk = np.zeros((cur_len - cur_pos - 1 + gt - 1, k), dtype=np.int64)
        nc = np.zeros(cur_len - cur_pos - 1 + gt - 1, dtype=np.int64)
        ne_ = ne; nk_ = nk; nc_ = nc
        ci = cur_pos + 1
        gi = 1
        while ci < cur_len or gi < gt:
            if ci < cur_len and gi < gt:
                cmp_ = 0
                for j in range(k):
                    val = gk[gi, j] + cur_k[cur_pos, j] - gk[0, j]
                    if cur_k[ci, j] > val:
                        cmp_ = 1
                        break
                    if cur_k[ci, j] < val:
                        cmp_ = -1
                        break
            elif ci < cur_len:
                cmp_ = 1
            else:
                cmp_ = -1
            if cmp_ == 1:
                for j in range(n):
                    ne_[new_len, j] = cur_e[ci, j]
                for j in range(k):
                    nk_[new_len, j] = cur_k[ci, j]
                nc_[new_len] = cur_c[ci]
                new_len += 1
                ci += 1
            elif cmp_ == -1:
                val = (p - (factor * gc[gi]) % p) % p
                if val:
                    for j in range(n):
                        ne_[new_len, j] = ge[gi, j] + cur_e[cur_pos, j] - ge[0, j]
                    for j in range(k):
                        nk_[new_len, j] = gk[gi, j] + cur_k[cur_pos, j] - gk[0, j]
                    nc_[new_len] = val
                    new_len += 1
                gi += 1
            else:
                val = (cur_c[ci] - (factor * gc[gi]) % p) % p
                if val:
                    for j in range(n):
                        ne_[new_len, j] = cur_e[ci, j]
                    for j in range(k):
                        nk_[new_len, j] = cur_k[ci, j]
                    nc_[new_len] = val
                    new_len += 1
                ci += 1
                gi += 1
        cur_e = ne_[:new_len]
        cur_k = nk_[:new_len]
        cur_c = nc_[:new_len]
        cur_len = new_len
        cur_pos = 0

    return Poly(out_e[:out_len].copy(), out_k[:out_len].copy(), out_c[:out_len].copy())


cdef Poly monic(Poly f, long long p):
    if f.coeffs.shape[0] == 0:
        return f
    cdef long long inv = inv_mod(f.coeffs[0], p)
    f.coeffs = (f.coeffs * inv) % p
    return f


cdef tuple lcm_and_key(I64[:, :] leads, Py_ssize_t i, Py_ssize_t j,
                       I64[:, :] keyrows, Py_ssize_t n):
    cdef Py_ssize_t k = keyrows.shape[0]
    cdef Py_ssize_t t, row
    lcm_buf = np.empty(n, dtype=np.int64)
    key_buf = np.zeros(k, dtype=np.int64)
    cdef I64[:] lb = lcm_buf
    cdef I64[:] kb = key_buf
    with nogil:
        for t in range(n):
            lb[t] = leads[i, t] if leads[i, t] > leads[j, t] else leads[j, t]
        for row in range(k):
            for t in range(n):
                kb[row] += keyrows[row, t] * lb[t]
    return tuple(key_buf.tolist()), tuple(lcm_buf.tolist())


cdef bint criteria_skip(I64[:, :] leads, Py_ssize_t nbasis, Py_ssize_t i,
                        Py_ssize_t j, I64[:] lcm, Py_ssize_t n) nogil:
    cdef Py_ssize_t t, kk
    cdef long long deg_lcm = 0, deg_a = 0, deg_b = 0
    for t in range(n):
        deg_lcm += lcm[t]
        deg_a += leads[i, t]
        deg_b += leads[j, t]
    if deg_lcm == deg_a + deg_b:
        return True  # coprime leads
    cdef bint div, strict_a, strict_b
    for kk in range(nbasis):
        if kk == i or kk == j:
            continue
        div = True
        for t in range(n):
            if leads[kk, t] > lcm[t]:
                div = False
                break
        if not div:
            continue
        strict_a = False
        strict_b = False
        for t in range(n):
            if (leads[i, t] if leads[i, t] > leads[kk, t] else leads[kk, t]) != lcm[t]:
                strict_a = True
                break
        for t in range(n):
            if (leads[j, t] if leads[j, t] > leads[kk, t] else leads[kk, t]) != lcm[t]:
                strict_b = True
                break
        if strict_a and strict_b:
            return True
    return False


cdef Poly s_poly(Poly a, Poly b, tuple lcm, I64[:, :] keyrows, Py_ssize_t n, long long p):
    cdef I64[:, :] ae = a.exps
    cdef I64[:, :] be = b.exps
    cdef I64[:] ac = a.coeffs
    cdef I64[:] bc = b.coeffs
    cdef Py_ssize_t t, j
    cdef long long ca = inv_mod(ac[0], p)
    cdef long long cb = inv_mod(bc[0], p)
    terms = []
    for t in range(ae.shape[0]):
        terms.append((tuple(ae[t, j] + lcm[j] - ae[0, j] for j in range(n)),
                      (ac[t] * ca) % p))
    for t in range(be.shape[0]):
        terms.append((tuple(be[t, j] + lcm[j] - be[0, j] for j in range(n)),
                      (p - (bc[t] * cb) % p) % p))
    return make_poly(terms, keyrows, n, p)


cdef list interreduce(list basis, I64[:, :] leads, Py_ssize_t nbasis,
                      I64[:, :] keyrows, Py_ssize_t n, long long p):
    cdef Py_ssize_t i, j, t
    cdef bint redundant, div, same
    cdef Py_ssize_t k = keyrows.shape[0]
    keep = []
    for i in range(nbasis):
        redundant = False
        for j in range(nbasis):
            if i == j:
                continue
            div = True
            for t in range(n):
                if leads[j, t] > leads[i, t]:
                    div = False
                    break
            if not div:
                continue
            same = True
            for t in range(n):
                if leads[j, t] != leads[i, t]:
                    same = False
                    break
            if not same or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(basis[i])
    cdef Py_ssize_t nkeep = len(keep)
    keep_leads = np.zeros((nkeep, n), dtype=np.int64)
    cdef Poly q
    for i in range(nkeep):
        q = <Poly>keep[i]
        keep_leads[i] = q.exps[0]
    reduced = []
    other_leads = np.zeros((nkeep - 1 if nkeep else 0, n), dtype=np.int64)
    for i in range(nkeep):
        others = [keep[j] for j in range(nkeep) if j != i]
        other_leads[:i] = keep_leads[:i]
        other_leads[i:] = keep_leads[i + 1:]
        nf = reduce_full(<Poly>keep[i], others, other_leads, nkeep - 1, n, k, p)
        reduced.append(monic(nf, p))
    reduced.sort(key=lambda poly: tuple((<Poly>poly).keys[0]))
    return reduced


def buchberger(gens, keyrows_list, Py_ssize_t n, long long p):
    """Reduced Groebner basis over F_p; returns a list of term lists."""
    keyrows_arr = np.array(keyrows_list, dtype=np.int64)
    cdef I64[:, :] keyrows = keyrows_arr
    cdef Py_ssize_t k = keyrows_arr.shape[0]

    basis = []
    for g in gens:
        poly = make_poly(list(g), keyrows, n, p)
        if poly.coeffs.shape[0] == 0:
            continue
        basis.append(monic(poly, p))
    if not basis:
        raise ValueError("empty generating set")

    cdef Py_ssize_t cap = 2 * len(basis) + 64
    leads_arr = np.zeros((cap, n), dtype=np.int64)
    cdef I64[:, :] leads = leads_arr
    cdef Py_ssize_t nbasis = len(basis)
    cdef Py_ssize_t i, j, m
    cdef Poly q
    for i in range(nbasis):
        q = <Poly>basis[i]
        leads_arr[i] = q.exps[0]

    heap = []
    for i in range(nbasis):
        for j in range(i):
            key, lcm = lcm_and_key(leads, i, j, keyrows, n)
            heapq.heappush(heap, (key, i, j, lcm))

    cdef Poly s, nf
    lcm_buf = np.zeros(n, dtype=np.int64)
    cdef I64[:] lcm_view = lcm_buf
    cdef Py_ssize_t t
    while heap:
        _, i, j, lcm = heapq.heappop(heap)
        for t in range(n):
            lcm_view[t] = lcm[t]
        if criteria_skip(leads, nbasis, i, j, lcm_view, n):
            continue
        s = s_poly(<Poly>basis[i], <Poly>basis[j], lcm, keyrows, n, p)
        if s.coeffs.shape[0] == 0:
            continue
        nf = reduce_full(s, basis, leads, nbasis, n, k, p)
        if nf.coeffs.shape[0] == 0:
            continue
        nf = monic(nf, p)
        basis.append(nf)
        if nbasis == cap:
            cap *= 2
            grown = np.zeros((cap, n), dtype=np.int64)
            grown[:nbasis] = leads_arr[:nbasis]
            leads_arr = grown
            leads = leads_arr
        leads_arr[nbasis] = nf.exps[0]
        nbasis += 1
        m = nbasis - 1
        for i in range(m):
            key, lcm = lcm_and_key(leads, m, i, keyrows, n)
            heapq.heappush(heap, (key, m, i, lcm))

    reduced = interreduce(basis, leads, nbasis, keyrows, n, p)
    out = []
    cdef Poly rp
    for rp in reduced:
        out.append([
            (tuple(int(x) for x in rp.exps[t]), int(rp.coeffs[t]))
            for t in range(rp.coeffs.shape[0])
        ])
    return out
