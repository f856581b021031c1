"""Enumeration prefilter for the exhaustive search.

For a fixed largest weight a1 the search walks every pairing

    q1 = {a1, a2, b1, b2},  q2 = {a1, a2, c1, c2},  q3 = {b1, b2, c1, c2}
    a2 <= a1,  b2 <= b1 <= a1,  c2 <= c1 <= a1

under each of the three sign placements with a single minus, and keeps the
candidates whose unit-class and p1 localization sums vanish. Both conditions
are checked exactly by clearing denominators:

    s1 P2 P3 + s2 P1 P3 + s3 P1 P2 = 0
    s1 E1 P2 P3 + s2 E2 P1 P3 + s3 E3 P1 P2 = 0

with P the weight products and E the sums of squared weights. Each surviving
row is (a2, b1, b2, c1, c2, k), where k indexes the minus sign position.

Two interchangeable backends: a numba kernel and a vectorized numpy version.
Terms are bounded by 12 * a1^10, which fits in int64 for a1 <= MAX_INT64_BOUND;
beyond that the numpy backend switches to Python integers.
"""

from __future__ import annotations

import numpy as np

from ._jit import NUMBA_AVAILABLE, njit

MAX_INT64_BOUND = 60

_SIGNS = np.array([[-1, 1, 1], [1, -1, 1], [1, 1, -1]], dtype=np.int64)


@njit(cache=True)
def _scan_numba(a1, out, fill):
    n = 0
    for a2 in range(1, a1 + 1):
        pa = a1 * a2
        sa = a1 * a1 + a2 * a2
        for b1 in range(1, a1 + 1):
            for b2 in range(1, b1 + 1):
                pb = b1 * b2
                sb = b1 * b1 + b2 * b2
                P1 = pa * pb
                E1 = sa + sb
                for c1 in range(1, a1 + 1):
                    for c2 in range(1, c1 + 1):
                        pc = c1 * c2
                        sc = c1 * c1 + c2 * c2
                        P2 = pa * pc
                        P3 = pb * pc
                        E2 = sa + sc
                        E3 = sb + sc
                        t1 = P2 * P3
                        t2 = P1 * P3
                        t3 = P1 * P2
                        for k in range(3):
                            s1 = _SIGNS[k, 0]
                            s2 = _SIGNS[k, 1]
                            s3 = _SIGNS[k, 2]
                            if s1 * t1 + s2 * t2 + s3 * t3 != 0:
                                continue
                            if s1 * E1 * t1 + s2 * E2 * t2 + s3 * E3 * t3 != 0:
                                continue
                            if fill:
                                out[n, 0] = a2
                                out[n, 1] = b1
                                out[n, 2] = b2
                                out[n, 3] = c1
                                out[n, 4] = c2
                                out[n, 5] = k
                            n += 1
    return n


def scan_numba(a1: int) -> np.ndarray:
    if a1 > MAX_INT64_BOUND:
        raise OverflowError(f"int64 kernel is only exact for a1 <= {MAX_INT64_BOUND}")
    dummy = np.zeros((0, 6), dtype=np.int64)
    count = _scan_numba(a1, dummy, False)
    out = np.zeros((count, 6), dtype=np.int64)
    _scan_numba(a1, out, True)
    return out


def _pairs(a1: int, dtype):
    hi, lo = np.tril_indices(a1)
    return (hi + 1).astype(dtype), (lo + 1).astype(dtype)


def scan_numpy(a1: int) -> np.ndarray:
    dtype = np.int64 if a1 <= MAX_INT64_BOUND else object
    # (x1, x2) pairs with x2 <= x1, ordered by x1 then x2
    x1, x2 = _pairs(a1, dtype)
    pp = x1 * x2
    ss = x1 * x1 + x2 * x2
    pb, pc = pp[:, None], pp[None, :]
    sb, sc = ss[:, None], ss[None, :]
    rows = []
    for a2 in range(1, a1 + 1):
        pa = a1 * a2
        sa = a1 * a1 + a2 * a2
        P1 = pa * pb
        P2 = pa * pc
        P3 = pb * pc
        t1, t2, t3 = P2 * P3, P1 * P3, P1 * P2
        E1, E2, E3 = sa + sb, sa + sc, sb + sc
        for k, (s1, s2, s3) in enumerate(((-1, 1, 1), (1, -1, 1), (1, 1, -1))):
            mask = (s1 * t1 + s2 * t2 + s3 * t3) == 0
            if not mask.any():
                continue
            mask &= (s1 * E1 * t1 + s2 * E2 * t2 + s3 * E3 * t3) == 0
            ib, ic = np.nonzero(mask)
            for i, j in zip(ib, ic):
                rows.append((a2, int(x1[i]), int(x2[i]), int(x1[j]), int(x2[j]), k))
    rows.sort()
    return np.array(rows, dtype=np.int64).reshape(-1, 6)


def default_backend() -> str:
    return "numba" if NUMBA_AVAILABLE else "numpy"


def scan(a1: int, backend: str | None = None) -> np.ndarray:
    """Surviving candidates for largest weight ``a1``, sorted row-wise."""
    backend = backend or default_backend()
    if backend == "numba" and a1 <= MAX_INT64_BOUND:
        if not NUMBA_AVAILABLE:
            raise RuntimeError("numba backend requested but numba is disabled or missing")
        return scan_numba(a1)
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    return scan_numpy(a1)
