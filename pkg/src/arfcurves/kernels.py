"""Integer-grid kernels for the good-semigroup axiom checks.

Every check exists in two interchangeable variants: a loop kernel compiled
with numba, and a vectorized numpy fallback.  The fallback is selected when
numba is missing or the environment variable ARFCURVES_NO_NUMBA is set to a
nonempty value.  benchmarks/bench_kernels.py times the two side by side.

Conventions: a membership grid over the box [0, delta] (or [0, delta+1] for
the padded grid used by the pair-lifting check) is passed as a flattened
C-order boolean array plus its element strides, so a vector v sits at flat
index sum(v[c] * strides[c]).  Checks return the encoded position of the
lexicographically first violation, or -1 when the property holds.
"""

import os

import numpy as np

NUMBA_DISABLED = bool(os.environ.get("ARFCURVES_NO_NUMBA"))


def flat_strides(dims):
    """C-order element strides for a box with the given axis sizes."""
    d = len(dims)
    strides = np.ones(d, dtype=np.int64)
    for c in range(d - 2, -1, -1):
        strides[c] = strides[c + 1] * dims[c + 1]
    return strides


# ---------------------------------------------------------------------------
# Loop kernels (numba-compiled when enabled).


def _loop_min_violation(small, grid, strides):
    n, d = small.shape
    for i in range(n):
        for j in range(i + 1, n):
            flat = 0
            for c in range(d):
                a = small[i, c]
                b = small[j, c]
                flat += (a if a < b else b) * strides[c]
            if not grid[flat]:
                return i * n + j
    return -1


def _loop_sum_violation(small, grid, strides, delta):
    n, d = small.shape
    for i in range(n):
        for j in range(i, n):
            flat = 0
            for c in range(d):
                s = small[i, c] + small[j, c]
                if s > delta[c]:
                    s = delta[c]
                flat += s * strides[c]
            if not grid[flat]:
                return i * n + j
    return -1


def _loop_lift_violation(small, ext, ext_strides, ext_dims):
    # Pair-lifting axiom: for members a != b agreeing at a pivot coordinate,
    # some member must exceed both at the pivot, equal min(a, b) where they
    # differ, and dominate them where they agree.  Witnesses are complete
    # inside the padded box, searched here with an odometer walk.
    n, d = small.shape
    lo = np.empty(d, np.int64)
    cur = np.empty(d, np.int64)
    fixed = np.empty(d, np.bool_)
    for i in range(n):
        for j in range(i + 1, n):
            for pivot in range(d):
                if small[i, pivot] != small[j, pivot]:
                    continue
                for c in range(d):
                    a = small[i, c]
                    b = small[j, c]
                    if a == b:
                        fixed[c] = False
                        lo[c] = a + 1 if c == pivot else a
                    else:
                        fixed[c] = True
                        lo[c] = a if a < b else b
                    cur[c] = lo[c]
                found = False
                while True:
                    flat = 0
                    for c in range(d):
                        flat += cur[c] * ext_strides[c]
                    if ext[flat]:
                        found = True
                        break
                    k = d - 1
                    while k >= 0:
                        if fixed[k]:
                            k -= 1
                            continue
                        cur[k] += 1
                        if cur[k] < ext_dims[k]:
                            break
                        cur[k] = lo[k]
                        k -= 1
                    if k < 0:
                        break
                if not found:
                    return (i * n + j) * d + pivot
    return -1


# ---------------------------------------------------------------------------
# Vectorized numpy fallbacks.


def _np_min_violation(small, grid, strides):
    n = small.shape[0]
    for i in range(n):
        rest = small[i + 1:]
        if rest.size == 0:
            continue
        ok = grid[np.minimum(small[i], rest) @ strides]
        bad = np.flatnonzero(~ok)
        if bad.size:
            return i * n + (i + 1 + int(bad[0]))
    return -1


def _np_sum_violation(small, grid, strides, delta):
    n = small.shape[0]
    for i in range(n):
        ok = grid[np.minimum(small[i] + small[i:], delta) @ strides]
        bad = np.flatnonzero(~ok)
        if bad.size:
            return i * n + (i + int(bad[0]))
    return -1


def _np_lift_violation(small, ext, ext_strides, ext_dims):
    n, d = small.shape
    ext_nd = ext.reshape(tuple(int(s) for s in ext_dims))
    for i in range(n):
        for j in range(i + 1, n):
            a, b = small[i], small[j]
            eq = a == b
            if not eq.any():
                continue
            m = np.minimum(a, b)
            for pivot in np.flatnonzero(eq):
                index = tuple(
                    slice(int(a[c]) + (1 if c == pivot else 0), None) if eq[c]
                    else int(m[c])
                    for c in range(d))
                if not ext_nd[index].any():
                    return (i * n + j) * d + int(pivot)
    return -1


NUMBA_ENABLED = False
if not NUMBA_DISABLED:
    try:
        from numba import njit
    except ImportError:
        pass
    else:
        _loop_min_violation = njit(cache=True)(_loop_min_violation)
        _loop_sum_violation = njit(cache=True)(_loop_sum_violation)
        _loop_lift_violation = njit(cache=True)(_loop_lift_violation)
        NUMBA_ENABLED = True

first_min_violation = _loop_min_violation if NUMBA_ENABLED else _np_min_violation
first_sum_violation = _loop_sum_violation if NUMBA_ENABLED else _np_sum_violation
first_lift_violation = _loop_lift_violation if NUMBA_ENABLED else _np_lift_violation
