"""Time the compiled kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from skewcodes import _kernels, field_make
from skewcodes.homs import candidate_images
from skewcodes.petit import PetitAlgebra


def tables(mod, ctx):
    return mod.make_tables(ctx.p, ctx.q, ctx.r, np.asarray(ctx._exp, dtype=np.int64),
                           np.asarray(ctx._log, dtype=np.int64), np.asarray(ctx._zech, dtype=np.int64),
                           ctx.frob_table)


def cases():
    ctx = field_make(5, 2)
    A = PetitAlgebra.constacyclic(ctx, 1, 4, 4)
    _, sig, f0 = A.kernel_args
    rng = np.random.default_rng(0)
    g, h = rng.integers(0, 25, 4).tolist(), rng.integers(0, 25, 4).tolist()
    cands = candidate_images(A, "all", prefilter=True)
    big = PetitAlgebra.constacyclic(field_make(3, 2), 1, 4, 2)
    cands_big = candidate_images(big, "all", prefilter=False)
    rows = rng.integers(0, 25, (3, 6)).tolist()
    yield "petit_mul F_25 m=4", ctx, lambda K, T: K.petit_mul(T, sig, f0, g, h), 2000
    yield "left_powers F_25 m=4 x16", ctx, lambda K, T: K.left_powers(T, sig, f0, g, 16), 500
    yield "scan_homs F_25 m=4 (624 images)", ctx, lambda K, T: K.scan_homs(T, sig, 0, ctx.xi, f0, f0, cands), 3
    b_ctx = big.ctx
    _, bsig, bf0 = big.kernel_args
    yield "scan_homs F_9 m=4 (6560 images)", b_ctx, lambda K, T: K.scan_homs(T, bsig, 0, b_ctx.xi, bf0, bf0,
                                                                                 cands_big), 1
    yield "weight_distribution F_25 k=3 n=6", ctx, lambda K, T: K.weight_distribution(T, rows, 6), 1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels.compiled is None:
        raise SystemExit("compiled kernels are not built; reinstall with Cython available")
    print(f"{'kernel':38s} {'cython':>12s} {'python':>12s} {'speedup':>9s}")
    for name, ctx, fn, number in cases():
        res = {}
        for label, mod in (("cython", _kernels.compiled), ("python", _kernels.pure)):
            T = tables(mod, ctx)
            res[label] = min(timeit.repeat(lambda: fn(mod, T), number=number, repeat=args.repeat)) / number
        print(f"{name:38s} {res['cython'] * 1e6:10.1f}us {res['python'] * 1e6:10.1f}us "
              f"{res['python'] / res['cython']:8.1f}x")


if __name__ == "__main__":
    main()
