"""Side-by-side timing of the good-semigroup axiom kernels.

Runs each check (pairwise min closure, closure under addition, pair
lifting) on identical inputs through the loop kernel (numba-compiled
unless ARFCURVES_NO_NUMBA is set or numba is missing) and the vectorized
numpy fallback, and prints best-of-five wall times.

Usage: python3 benchmarks/bench_kernels.py
"""

import itertools
import time

import numpy as np

from arfcurves import kernels
from arfcurves.mult_tree import MultiplicityTree, tree_to_semigroup

PAIRS = {
    "min": (kernels._loop_min_violation, kernels._np_min_violation),
    "sum": (kernels._loop_sum_violation, kernels._np_sum_violation),
    "lift": (kernels._loop_lift_violation, kernels._np_lift_violation),
}


def kernel_inputs(small, conductor):
    """The flattened grid arguments that is_good feeds the kernels."""
    d = len(conductor)
    arr = np.array(small, dtype=np.int64).reshape(len(small), d)
    dims = tuple(c + 1 for c in conductor)
    grid = np.zeros(dims, dtype=bool)
    grid[tuple(arr.T)] = True
    ext = np.pad(grid, [(0, 1)] * d, mode="edge")
    return {
        "min": (arr, grid.reshape(-1), kernels.flat_strides(dims)),
        "sum": (arr, grid.reshape(-1), kernels.flat_strides(dims),
                np.array(conductor, dtype=np.int64)),
        "lift": (arr, ext.reshape(-1), kernels.flat_strides(ext.shape),
                 np.array(ext.shape, dtype=np.int64)),
    }


def full_box(delta):
    return sorted(itertools.product(*(range(c + 1) for c in delta))), delta


def tree_case():
    tree = MultiplicityTree([[16, 8, 4, 4, 2, 2], [8, 4, 4, 2, 2]], splits=(1,))
    S = tree_to_semigroup(tree)
    return list(S.small_elements), S.conductor


def best_of(fn, args, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        begin = time.perf_counter()
        result = fn(*args)
        elapsed = time.perf_counter() - begin
        best = min(best, elapsed)
        if elapsed > 0.5:
            break
    return int(result), best


def main():
    label = "numba" if kernels.NUMBA_ENABLED else "plain python (numba disabled)"
    print("loop kernels: %s" % label)
    print("%-24s %6s %12s %12s %8s" % ("case", "n", "loop ms", "numpy ms", "ratio"))
    cases = [
        ("arf tree d=2", *tree_case(), ("min", "sum", "lift")),
        ("box 40x40", *full_box((40, 40)), ("min", "sum")),
        ("box 13^3", *full_box((13, 13, 13)), ("min", "sum")),
        ("box 14x14", *full_box((14, 14)), ("lift",)),
        ("box 5^3", *full_box((5, 5, 5)), ("lift",)),
    ]
    for name, small, delta, checks in cases:
        inputs = kernel_inputs(small, delta)
        for check in checks:
            loop_fn, np_fn = PAIRS[check]
            args = inputs[check]
            if kernels.NUMBA_ENABLED:
                loop_fn(*args)  # compile outside the timed region
            loop_code, loop_time = best_of(loop_fn, args)
            np_code, np_time = best_of(np_fn, args)
            assert loop_code == np_code, (name, check, loop_code, np_code)
            print("%-24s %6d %12.3f %12.3f %7.1fx" % (
                "%s %s" % (name, check), len(small),
                loop_time * 1e3, np_time * 1e3, np_time / loop_time))


if __name__ == "__main__":
    main()
