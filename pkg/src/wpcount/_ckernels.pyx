# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contracts as ``_pykernels``."""

import numpy as np
cimport numpy as cnp

ctypedef long long i64


cdef inline i64 _apply(i64 x, i64 shift, const i64[:] exp_table, const i64[:] log_table, i64 qm1) noexcept nogil:
    if x == 0:
        return 0
    return exp_table[(shift + log_table[x]) % qm1]


def orbit_rep_support_counts(i64 q, weights, exp_table, log_table, allowed=None):
    cdef i64 m = len(weights)
    cdef i64 qm1 = q - 1
    cdef i64 total = q ** m
    cdef const i64[:] ex = np.ascontiguousarray(exp_table, dtype=np.int64)
    cdef const i64[:] lg = np.ascontiguousarray(log_table, dtype=np.int64)
    cdef i64[:, :] shifts = (np.arange(qm1, dtype=np.int64)[:, None]
                            * np.asarray(weights, dtype=np.int64)[None, :]) % qm1
    cdef const unsigned char[:] ok
    cdef bint filtered = allowed is not None
    if filtered:
        ok = np.ascontiguousarray(allowed, dtype=np.uint8)
    out_arr = np.zeros(1 << m, dtype=np.int64)
    cdef i64[:] out = out_arr
    cdef i64[64] x
    cdef i64 c, rest, i, l, t, mask
    cdef bint rep
    with nogil:
        for c in range(1, total):
            if filtered and not ok[c]:
                continue
            rest = c
            mask = 0
            for i in range(m - 1, -1, -1):
                x[i] = rest % q
                rest = rest // q
                if x[i] != 0:
                    mask |= (<i64>1) << i
            rep = True
            for l in range(1, qm1):
                for i in range(m):
                    t = _apply(x[i], shifts[l, i], ex, lg, qm1)
                    if t != x[i]:
                        if t < x[i]:
                            rep = False
                        break
                if not rep:
                    break
            if rep:
                out[mask] += 1
    return out_arr


def fixed_counts(i64 q, weights, exp_table, log_table, allowed=None):
    cdef i64 m = len(weights)
    cdef i64 qm1 = q - 1
    cdef i64 total = q ** m
    cdef const i64[:] ex = np.ascontiguousarray(exp_table, dtype=np.int64)
    cdef const i64[:] lg = np.ascontiguousarray(log_table, dtype=np.int64)
    cdef i64[:, :] shifts = (np.arange(qm1, dtype=np.int64)[:, None]
                            * np.asarray(weights, dtype=np.int64)[None, :]) % qm1
    cdef const unsigned char[:] ok
    cdef bint filtered = allowed is not None
    if filtered:
        ok = np.ascontiguousarray(allowed, dtype=np.uint8)
    out_arr = np.zeros(qm1, dtype=np.int64)
    cdef i64[:] out = out_arr
    cdef i64[64] x
    cdef i64 c, rest, i, l
    cdef bint fixed
    with nogil:
        for c in range(1, total):
            if filtered and not ok[c]:
                continue
            rest = c
            for i in range(m - 1, -1, -1):
                x[i] = rest % q
                rest = rest // q
            for l in range(qm1):
                fixed = True
                for i in range(m):
                    if _apply(x[i], shifts[l, i], ex, lg, qm1) != x[i]:
                        fixed = False
                        break
                if fixed:
                    out[l] += 1
    return out_arr


def support_counts(i64 q, i64 m, allowed=None):
    cdef i64 total = q ** m
    cdef const unsigned char[:] ok
    cdef bint filtered = allowed is not None
    if filtered:
        ok = np.ascontiguousarray(allowed, dtype=np.uint8)
    out_arr = np.zeros(1 << m, dtype=np.int64)
    cdef i64[:] out = out_arr
    cdef i64 c, rest, i, mask
    with nogil:
        for c in range(1, total):
            if filtered and not ok[c]:
                continue
            rest = c
            mask = 0
            for i in range(m - 1, -1, -1):
                if rest % q != 0:
                    mask |= (<i64>1) << i
                rest = rest // q
            out[mask] += 1
    return out_arr


cdef inline i64 _field_add(i64 x, i64 y, i64 p, i64 q) noexcept nogil:
    cdef i64 out = 0, place = 1
    while place < q:
        out += (((x // place) % p + (y // place) % p) % p) * place
        place *= p
    return out


def zero_mask(i64 q, i64 p, i64 m, exp_table, log_table, exps, coef_logs):
    cdef i64 qm1 = q - 1
    cdef i64 total = q ** m
    cdef const i64[:] ex = np.ascontiguousarray(exp_table, dtype=np.int64)
    cdef const i64[:] lg = np.ascontiguousarray(log_table, dtype=np.int64)
    cdef const i64[:, :] E = np.ascontiguousarray(np.asarray(exps, dtype=np.int64).reshape(-1, m))
    cdef const i64[:] C = np.ascontiguousarray(coef_logs, dtype=np.int64)
    cdef i64 nterms = E.shape[0]
    out_arr = np.zeros(total, dtype=np.uint8)
    cdef unsigned char[:] out = out_arr
    cdef i64[64] x
    cdef i64 c, rest, i, j, k, value
    cdef bint vanish
    with nogil:
        for c in range(total):
            rest = c
            for i in range(m - 1, -1, -1):
                x[i] = rest % q
                rest = rest // q
            value = 0
            for j in range(nterms):
                vanish = False
                k = C[j]
                for i in range(m):
                    if E[j, i] > 0:
                        if x[i] == 0:
                            vanish = True
                            break
                        k += E[j, i] * lg[x[i]]
                if not vanish:
                    value = _field_add(value, ex[k % qm1], p, q)
            out[c] = value == 0
    return out_arr
