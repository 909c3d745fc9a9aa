# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; see ``_pykernels`` for the reference semantics."""
import numpy as np
cimport numpy as cnp

from libc.stdint cimport int64_t

cnp.import_array()

cdef int64_t COEFF_LIMIT = (<int64_t>1) << 62


def kaplan_range(int64_t p, int64_t q, int64_t r, int64_t rho, int64_t sigma,
                 int64_t p_inv_q, int64_t q_inv_p, int64_t r_inv,
                 int64_t k_lo, int64_t k_hi):
    cdef int64_t pq = p * q
    cdef int64_t q_shift = q * r_inv % pq
    cdef Py_ssize_t count = k_hi - k_lo + 1
    out = np.zeros(count, dtype=np.int64)
    cdef int64_t[::1] o = out
    cdef int64_t f0 = r_inv * (k_lo % pq) % pq
    cdef int64_t f, g, lim, total
    cdef Py_ssize_t j, m
    with nogil:
        for j in range(count):
            lim = (k_lo + j) // r
            total = 0
            f = f0
            for m in range(p):
                g = f - q_shift
                if g < 0:
                    g += pq
                if f <= lim or g <= lim:
                    if f * p_inv_q % q <= rho:
                        if f <= lim and f * q_inv_p % p <= sigma:
                            total += 1
                        if g <= lim and g * q_inv_p % p <= sigma:
                            total -= 1
                    else:
                        if f <= lim and f * q_inv_p % p > sigma:
                            total -= 1
                        if g <= lim and g * q_inv_p % p > sigma:
                            total += 1
                f -= r_inv
                if f < 0:
                    f += pq
            o[j] = total
            f0 += r_inv
            if f0 >= pq:
                f0 -= pq
    return out


def mobius_series(steps, Py_ssize_t length):
    out = np.zeros(length, dtype=np.int64)
    if length == 0:
        return out
    cdef int64_t[::1] c = out
    cdef Py_ssize_t d, i
    cdef int64_t v
    cdef bint bad = False
    c[0] = 1
    for step in steps:
        d = step[0]
        if d >= length:
            continue
        if step[1] > 0:
            with nogil:
                for i in range(length - 1, d - 1, -1):
                    v = c[i] - c[i - d]
                    if v >= COEFF_LIMIT or v <= -COEFF_LIMIT:
                        bad = True
                        break
                    c[i] = v
        else:
            with nogil:
                for i in range(d, length):
                    v = c[i] + c[i - d]
                    if v >= COEFF_LIMIT or v <= -COEFF_LIMIT:
                        bad = True
                        break
                    c[i] = v
        if bad:
            raise OverflowError("coefficient left the 62-bit safety range")
    return out


def long_divide(num, den):
    cdef const int64_t[::1] dv = np.ascontiguousarray(den, dtype=np.int64)
    rem_arr = np.array(num, dtype=np.int64, copy=True)
    cdef int64_t[::1] rem = rem_arr
    cdef Py_ssize_t dd = dv.shape[0] - 1
    cdef Py_ssize_t nn = rem.shape[0]
    cdef int64_t lead = dv[dd]
    if lead != 1 and lead != -1:
        raise ValueError("divisor must have leading coefficient +-1")
    if nn - 1 < dd:
        return np.zeros(1, dtype=np.int64), rem_arr
    quot_arr = np.zeros(nn - dd, dtype=np.int64)
    cdef int64_t[::1] quot = quot_arr
    nz_arr = np.flatnonzero(np.asarray(dv[:dd])).astype(np.intp)
    cdef Py_ssize_t[::1] nz = nz_arr
    cdef Py_ssize_t nnz = nz.shape[0]
    cdef Py_ssize_t i, t, j
    cdef int64_t coef, v
    cdef bint bad = False
    with nogil:
        for i in range(nn - dd - 1, -1, -1):
            coef = rem[i + dd] * lead
            if coef == 0:
                continue
            quot[i] = coef
            rem[i + dd] = 0
            for t in range(nnz):
                j = nz[t]
                v = rem[i + j] - coef * dv[j]
                if v >= COEFF_LIMIT or v <= -COEFF_LIMIT:
                    bad = True
                    break
                rem[i + j] = v
            if bad:
                break
    if bad:
        raise OverflowError("coefficient left the 62-bit safety range")
    return quot_arr, rem_arr[:dd] if dd else np.zeros(1, dtype=np.int64)
