"""Ground-truth integer polynomial arithmetic for Phi_n and Psi_n.

Phi_n is expanded as the truncated power series
``prod_{e | rad(n)} (1 - x^(n/e))^mu(e)``, which needs one linear pass per
squarefree divisor. A slower route through repeated exact long division of
``x^n - 1`` is kept in :func:`cyclotomic_poly_by_division` as a cross-check.
"""
from __future__ import annotations

import os
import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from itertools import combinations
from math import prod

import numpy as np

from . import _backend
from .arith import as_factorization, euler_phi
from .errors import InexactDivision, TooLarge

DEFAULT_CAP = 1 << 22


def get_cap() -> int:
    """Degree cap for full expansions; ``CYCLO_CAP`` overrides the default."""
    raw = os.environ.get("CYCLO_CAP")
    return int(raw) if raw else DEFAULT_CAP


@dataclass(frozen=True, eq=False)
class CoeffVector:
    """Dense coefficients, index = degree. Trailing zeros are trimmed."""

    coeffs: np.ndarray
    n: int = 0
    _hash: int = field(default=0, init=False, repr=False)

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.int64)
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else c[:0]
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs.tolist())

    def __eq__(self, other):
        if isinstance(other, CoeffVector):
            return np.array_equal(self.coeffs, other.coeffs)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def tolist(self) -> list[int]:
        return self.coeffs.tolist()

    def coeff(self, k: int) -> int:
        """Coefficient of x^k, zero past the degree."""
        return int(self.coeffs[k]) if 0 <= k < self.coeffs.size else 0


def x_pow_minus_one(n: int) -> CoeffVector:
    c = np.zeros(n + 1, dtype=np.int64)
    c[0], c[n] = -1, 1
    return CoeffVector(c, n)


def _check_cap(length: int, cap: int | None) -> None:
    cap = get_cap() if cap is None else cap
    if length > cap + 1:
        raise TooLarge(f"expansion of {length} coefficients exceeds cap {cap}")


def _mobius_steps(n: int, invert: bool) -> list[tuple[int, int]]:
    """(d, exponent) pairs for prod (1 - x^d)^exponent; multiplications first."""
    primes = as_factorization(n).primes
    steps = []
    for size in range(len(primes) + 1):
        for combo in combinations(primes, size):
            if invert and size == 0:
                continue
            sign = -1 if size % 2 else 1
            steps.append((n // prod(combo), -sign if invert else sign))
    steps.sort(key=lambda s: -s[1])
    return steps


def cyclotomic_series(n: int, length: int, cap: int | None = None) -> np.ndarray:
    """First ``length`` coefficients of Phi_n viewed as a power series."""
    _check_cap(length - 1, cap)
    if n == 1:
        out = np.zeros(length, dtype=np.int64)
        out[:2] = [-1, 1][:length]
        return out
    return _backend.mobius_series(_mobius_steps(n, False), length)


class _Memo:
    """LRU memo bounded by total stored coefficients; safe across threads."""

    def __init__(self):
        self._lock = threading.Lock()
        self._data: OrderedDict = OrderedDict()
        self._size = 0

    def get(self, key):
        with self._lock:
            v = self._data.get(key)
            if v is not None:
                self._data.move_to_end(key)
            return v

    def put(self, key, value: CoeffVector, budget: int):
        with self._lock:
            if key in self._data or len(value) > budget:
                return
            self._data[key] = value
            self._size += len(value)
            while self._size > budget:
                _, old = self._data.popitem(last=False)
                self._size -= len(old)

    def clear(self):
        with self._lock:
            self._data.clear()
            self._size = 0


_memo = _Memo()


def cyclotomic_poly(n: int, cap: int | None = None) -> CoeffVector:
    if n < 1:
        raise ValueError("n must be positive")
    cap = get_cap() if cap is None else cap
    _check_cap(euler_phi(n), cap)
    hit = _memo.get(("phi", n))
    if hit is not None:
        return hit
    out = CoeffVector(phi_coeffs(n, cap), n)
    _memo.put(("phi", n), out, cap)
    return out


def phi_coeffs(n: int, cap: int | None = None) -> np.ndarray:
    """Uncached coefficient array of Phi_n, for sweeps."""
    deg = euler_phi(n)
    _check_cap(deg, cap)
    return cyclotomic_series(n, deg + 1, cap)


def psi_coeffs(n: int, cap: int | None = None) -> np.ndarray:
    """Uncached coefficient array of Psi_n, for sweeps."""
    if n == 1:
        return np.ones(1, dtype=np.int64)
    deg = n - euler_phi(n)
    _check_cap(deg, cap)
    # the (1 - x^d) form differs from prod (x^d - 1) by an overall sign of -1
    return -_backend.mobius_series(_mobius_steps(n, True), deg + 1)


def inverse_cyclotomic_poly(n: int, cap: int | None = None) -> CoeffVector:
    """Psi_n = (x^n - 1) / Phi_n."""
    if n < 1:
        raise ValueError("n must be positive")
    cap = get_cap() if cap is None else cap
    _check_cap(n - euler_phi(n), cap)
    hit = _memo.get(("psi", n))
    if hit is not None:
        return hit
    out = CoeffVector(psi_coeffs(n, cap), n)
    _memo.put(("psi", n), out, cap)
    return out


def negate_variable(f: CoeffVector) -> CoeffVector:
    """f(-x)."""
    c = f.coeffs.copy()
    c[1::2] *= -1
    return CoeffVector(c, 0)


def exact_div(num: CoeffVector, den: CoeffVector) -> CoeffVector:
    if len(den) == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(num) == 0:
        return CoeffVector(num.coeffs, 0)
    quot, rem = _backend.long_divide(num.coeffs, den.coeffs)
    if np.any(rem):
        raise InexactDivision("nonzero remainder")
    return CoeffVector(quot, 0)


def poly_mul(a: CoeffVector, b: CoeffVector) -> CoeffVector:
    """Exact product by Kronecker substitution at x = 2^64."""
    if len(a) == 0 or len(b) == 0:
        return CoeffVector(np.zeros(0, dtype=np.int64))
    bound = int(np.abs(a.coeffs).max()) * int(np.abs(b.coeffs).max()) * min(len(a), len(b))
    if bound >= 1 << 62:
        raise OverflowError("product coefficients may leave 64-bit range")
    length = len(a) + len(b) - 1
    offset = 1 << 63
    # shift every digit into [0, 2^64) so the bytes decode as unsigned limbs
    shifted = _to_big(a.coeffs) * _to_big(b.coeffs) + offset * _ones_base(length)
    raw = np.frombuffer(shifted.to_bytes(8 * length, "little"), dtype="<u8")
    return CoeffVector((raw - np.uint64(offset)).view(np.int64))


def _to_big(c: np.ndarray) -> int:
    """Evaluate the polynomial at 2^64 exactly."""
    raw = int.from_bytes(c.astype("<i8").view("<u8").tobytes(), "little")
    return raw - _twos_fix(c)


def _ones_base(length: int) -> int:
    """Sum of 2^(64 i) for i < length."""
    return int.from_bytes(b"\x01\x00\x00\x00\x00\x00\x00\x00" * length, "little")


def _twos_fix(c: np.ndarray) -> int:
    """Correction turning the unsigned reading of int64 limbs into the signed value."""
    neg = (c < 0).astype(np.uint8)
    if not neg.any():
        return 0
    limbs = np.zeros(neg.size * 8 + 8, dtype=np.uint8)
    # each negative limb was read as v + 2^64, i.e. 2^(64 (i+1)) too large
    limbs[8 : 8 + 8 * neg.size : 8] = neg
    return int.from_bytes(limbs.tobytes(), "little")


def cyclotomic_poly_by_division(n: int, _cache: dict = {}) -> CoeffVector:
    """Phi_n as (x^n - 1) divided by every Phi_d, d a proper divisor of n.

    Slow reference path (quadratic long division); meant for small n.
    """
    if n in _cache:
        return _cache[n]
    out = x_pow_minus_one(n)
    for d in as_factorization(n).divisors()[:-1]:
        out = exact_div(out, cyclotomic_poly_by_division(d))
    out = CoeffVector(out.coeffs, n)
    _cache[n] = out
    return out
