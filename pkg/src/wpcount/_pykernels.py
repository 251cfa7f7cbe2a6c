"""NumPy implementation of the enumeration kernels.

Tuples ``(x_0, ..., x_{m-1})`` of field-element indices are encoded as
``sum(x_i * q**(m-1-i))`` so integer order is lexicographic order.  The group
element ``lambda = g**l`` sends ``x_i`` to ``exp[(l*w_i + log x_i) % (q-1)]``.
Work is chunked so memory stays bounded near the enumeration limit.
"""

import numpy as np

CHUNK = 1 << 18


def _digits(codes, q, m):
    out = np.empty((m, codes.size), dtype=np.int64)
    rest = codes.copy()
    for i in range(m - 1, -1, -1):
        rest, out[i] = np.divmod(rest, q)
    return out


def _act(digits, shifts, exp_table, log_table, q):
    # shifts[i] = l * w_i mod (q-1)
    logs = log_table[digits]
    moved = exp_table[(logs + shifts[:, None]) % (q - 1)]
    return np.where(digits == 0, 0, moved)


def _encode(digits, q):
    code = np.zeros(digits.shape[1], dtype=np.int64)
    for row in digits:
        code = code * q + row
    return code


def _support(digits):
    mask = np.zeros(digits.shape[1], dtype=np.int64)
    for i, row in enumerate(digits):
        mask |= (row != 0).astype(np.int64) << i
    return mask


def _chunks(q, m, allowed):
    total = q**m
    for start in range(1, total, CHUNK):
        codes = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        if allowed is not None:
            codes = codes[np.asarray(allowed[codes], dtype=bool)]
        if codes.size:
            yield codes, _digits(codes, q, m)


def _shift_table(q, weights):
    w = np.asarray(weights, dtype=np.int64)
    ls = np.arange(q - 1, dtype=np.int64)
    return (ls[:, None] * w[None, :]) % (q - 1)


def orbit_rep_support_counts(q, weights, exp_table, log_table, allowed=None):
    m = len(weights)
    shifts = _shift_table(q, weights)
    out = np.zeros(1 << m, dtype=np.int64)
    for codes, digits in _chunks(q, m, allowed):
        is_rep = np.ones(codes.size, dtype=bool)
        for l in range(1, q - 1):
            moved = _encode(_act(digits, shifts[l], exp_table, log_table, q), q)
            is_rep &= moved >= codes
        out += np.bincount(_support(digits)[is_rep], minlength=1 << m)
    return out


def fixed_counts(q, weights, exp_table, log_table, allowed=None):
    m = len(weights)
    shifts = _shift_table(q, weights)
    out = np.zeros(q - 1, dtype=np.int64)
    for codes, digits in _chunks(q, m, allowed):
        for l in range(q - 1):
            moved = _act(digits, shifts[l], exp_table, log_table, q)
            out[l] += int(np.all(moved == digits, axis=0).sum())
    return out


def support_counts(q, m, allowed=None):
    out = np.zeros(1 << m, dtype=np.int64)
    for _codes, digits in _chunks(q, m, allowed):
        out += np.bincount(_support(digits), minlength=1 << m)
    return out


def _field_add(x, y, p, q):
    out = np.zeros_like(x)
    place = 1
    while place < q:
        out += ((x // place % p + y // place % p) % p) * place
        place *= p
    return out


def zero_mask(q, p, m, exp_table, log_table, exps, coef_logs):
    total = q**m
    out = np.zeros(total, dtype=np.uint8)
    exps = np.asarray(exps, dtype=np.int64)
    for start in range(0, total, CHUNK):
        codes = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        digits = _digits(codes, q, m)
        logs = log_table[digits]
        value = np.zeros(codes.size, dtype=np.int64)
        for e, c in zip(exps, coef_logs):
            used = e > 0
            vanish = np.any(digits[used] == 0, axis=0)
            k = (c + (logs * e[:, None]).sum(axis=0)) % (q - 1)
            term = np.where(vanish, 0, exp_table[k])
            value = _field_add(value, term, p, q)
        out[start : start + codes.size] = value == 0
    return out
