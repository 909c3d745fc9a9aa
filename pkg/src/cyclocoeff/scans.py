"""Parameter sweeps over many indices n.

Every sweep returns its findings in ascending n order, whatever the worker
count; the kernels release the GIL so a thread pool gives real parallelism.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .arith import factorize, primes_up_to
from .kaplan import full_coefficients, make_kaplan_context
from .polys import phi_coeffs, psi_coeffs
from .properties import check_jump_one, coeff_set


@dataclass
class ScanResult:
    mode: str
    scanned: int = 0
    findings: list[dict] = field(default_factory=list)

    def summary(self) -> dict:
        return {"mode": self.mode, "scanned": self.scanned, "findings": len(self.findings)}


def _pmap(fn: Callable, items: Iterable, threads: int):
    if threads <= 1:
        return map(fn, items)
    pool = ThreadPoolExecutor(max_workers=threads)
    try:
        return list(pool.map(fn, items, chunksize=64))
    finally:
        pool.shutdown()


def ternary_triples(max_n: int) -> list[tuple[int, int, int]]:
    """Odd prime triples p < q < r with pqr <= max_n, sorted by pqr."""
    primes = [p for p in primes_up_to(max_n // 15) if p > 2]
    out = []
    for i, p in enumerate(primes):
        if p * p * p > max_n:
            break
        for j in range(i + 1, len(primes)):
            q = primes[j]
            if p * q * q > max_n:
                break
            for r in primes[j + 1 :]:
                if p * q * r > max_n:
                    break
                out.append((p, q, r))
    out.sort(key=lambda t: t[0] * t[1] * t[2])
    return out


def jump_scan(
    max_n: int, ternary_only: bool = True, source: str = "oracle", threads: int = 1
) -> ScanResult:
    """Report every n <= max_n whose Phi_n breaks the jump-one property."""
    if ternary_only:
        items = ternary_triples(max_n)
    else:
        items = list(range(1, max_n + 1))

    def one(item):
        if ternary_only:
            p, q, r = item
            n = p * q * r
            if source == "kaplan":
                c = full_coefficients(make_kaplan_context(p, q, r))
            else:
                c = phi_coeffs(n)
        else:
            n = item
            c = phi_coeffs(n)
        ok, k = check_jump_one(c)
        if ok:
            return None
        return {"n": n, "k": k, "delta": int(c[k] - c[k - 1])}

    res = ScanResult("jump")
    for found in _pmap(one, items, threads):
        res.scanned += 1
        if found is not None:
            res.findings.append(found)
    return res


def convex_scan(max_n: int, which: str = "phi", factors: int = 3, threads: int = 1) -> ScanResult:
    """Report every non-convex Phi_n (or Psi_n) over the admissible n <= max_n.

    For ``phi`` admissibility bounds the prime factor count with multiplicity;
    for ``psi`` it bounds the number of distinct odd prime factors.
    """
    if which == "phi":
        keep = lambda f: f.big_omega <= factors  # noqa: E731
        coeffs = phi_coeffs
    elif which == "psi":
        keep = lambda f: f.odd_omega <= factors  # noqa: E731
        coeffs = psi_coeffs
    else:
        raise ValueError(f"unknown polynomial family {which!r}")
    ns = [n for n in range(1, max_n + 1) if keep(factorize(n))]

    def one(n):
        s = coeff_set(coeffs(n))
        if s.convex:
            return None
        return {"n": n, "which": which, "min": s.min, "max": s.max, "gaps": list(s.gaps)}

    res = ScanResult("convex")
    for found in _pmap(one, ns, threads):
        res.scanned += 1
        if found is not None:
            res.findings.append(found)
    return res


def optimal_scan(max_n: int, threads: int = 1) -> ScanResult:
    """List the ternary n <= max_n whose coefficient spread equals p."""
    triples = ternary_triples(max_n)

    def one(t):
        p, q, r = t
        c = phi_coeffs(p * q * r)
        lo, hi = int(c.min()), int(c.max())
        if hi - lo != p:
            return None
        return {"n": p * q * r, "p": p, "q": q, "r": r, "min": lo, "max": hi}

    res = ScanResult("optimal")
    for found in _pmap(one, triples, threads):
        res.scanned += 1
        if found is not None:
            res.findings.append(found)
    return res


def kaplan_oracle_mismatches(triple) -> np.ndarray:
    """Indices where the Kaplan path and the oracle disagree (empty when sound)."""
    p, q, r = triple
    a = full_coefficients(make_kaplan_context(p, q, r))
    b = phi_coeffs(p * q * r)
    return np.flatnonzero(a != b)
