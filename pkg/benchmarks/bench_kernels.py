"""Compare the compiled kernels against the numpy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from cyclocoeff import _pykernels
from cyclocoeff.kaplan import _kernel_args, make_kaplan_context
from cyclocoeff.polys import _mobius_steps, x_pow_minus_one

try:
    from cyclocoeff import _kernels
except ImportError:
    _kernels = None


def cases():
    ctx = make_kaplan_context(17, 29, 41)
    kargs = _kernel_args(ctx)
    deg = ctx.triple.degree
    yield "kaplan_range 17*29*41", lambda k: k.kaplan_range(*kargs, 0, deg)

    n = 530689
    steps = _mobius_steps(n, invert=False)
    yield "mobius_series n=530689", lambda k: k.mobius_series(steps, 449281)

    num = x_pow_minus_one(20213).coeffs
    den = x_pow_minus_one(17).coeffs
    yield "long_divide (x^20213-1)/(x^17-1)", lambda k: k.long_divide(num, den)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    print(f"{'kernel':40s} {'python ms':>10s} {'compiled ms':>12s} {'speedup':>8s}")
    for name, fn in cases():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        if _kernels is None:
            print(f"{name:40s} {py:10.2f} {'n/a':>12s} {'n/a':>8s}")
            continue
        a, b = fn(_pykernels), fn(_kernels)
        if isinstance(a, tuple):
            assert all(np.array_equal(x, y) for x, y in zip(a, b))
        else:
            assert np.array_equal(a, b)
        cc = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:40s} {py:10.2f} {cc:12.2f} {py / cc:7.1f}x")


if __name__ == "__main__":
    main()
