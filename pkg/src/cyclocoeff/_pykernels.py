"""Reference kernels in plain Python and numpy.

Used when the compiled ``_kernels`` extension is not importable, and by the
benchmark as the baseline. Signatures match the extension exactly.
"""
import numpy as np

# Coefficients are kept below this so a single add can never wrap int64.
COEFF_LIMIT = 1 << 62


def kaplan_range(p, q, r, rho, sigma, p_inv_q, q_inv_p, r_inv, k_lo, k_hi):
    pq = p * q
    q_shift = q * r_inv % pq
    out = np.zeros(k_hi - k_lo + 1, dtype=np.int64)
    f0 = r_inv * (k_lo % pq) % pq
    for j in range(k_hi - k_lo + 1):
        lim = (k_lo + j) // r
        total = 0
        f = f0
        for _ in range(p):
            g = f - q_shift
            if g < 0:
                g += pq
            # f and g share their p-part, so one of them decides the sign class
            if f <= lim or g <= lim:
                a = f * p_inv_q % q
                if a <= rho:
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
        out[j] = total
        f0 += r_inv
        if f0 >= pq:
            f0 -= pq
    return out


def _check(c):
    if c.size and int(np.abs(c).max()) >= COEFF_LIMIT:
        raise OverflowError("coefficient left the 62-bit safety range")


def mobius_series(steps, length):
    """Power series prod (1 - x^d)^sign truncated to ``length`` terms.

    ``steps`` is a sequence of ``(d, sign)`` with sign in {+1, -1}, applied in
    the given order to the series 1.
    """
    c = np.zeros(length, dtype=np.int64)
    if length == 0:
        return c
    c[0] = 1
    for d, sign in steps:
        if d >= length:
            continue
        if sign > 0:
            c[d:] -= c[:-d].copy()
        else:
            rows = -(-length // d)
            buf = np.zeros(rows * d, dtype=np.int64)
            buf[:length] = c
            c = np.cumsum(buf.reshape(rows, d), axis=0).reshape(-1)[:length].copy()
        _check(c)
    return c


def long_divide(num, den):
    """Quotient and remainder of ``num / den`` for a +-1 leading ``den``."""
    num = np.asarray(num, dtype=np.int64)
    den = np.asarray(den, dtype=np.int64)
    dd = den.size - 1
    lead = int(den[-1])
    if lead not in (1, -1):
        raise ValueError("divisor must have leading coefficient +-1")
    rem = num.copy()
    if num.size - 1 < dd:
        return np.zeros(1, dtype=np.int64), rem
    quot = np.zeros(num.size - dd, dtype=np.int64)
    nz = np.flatnonzero(den[:-1])
    for i in range(num.size - dd - 1, -1, -1):
        c = int(rem[i + dd]) * lead
        if c:
            quot[i] = c
            rem[i + dd] = 0
            rem[i + nz] -= c * den[nz]
            _check(rem[i + nz])
    return quot, rem[:dd] if dd else np.zeros(1, dtype=np.int64)
