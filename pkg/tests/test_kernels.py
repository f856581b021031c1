import os
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest

from circleweights import kernels
from circleweights._jit import NUMBA_AVAILABLE

needs_numba = pytest.mark.skipif(not NUMBA_AVAILABLE, reason="numba disabled or missing")


def python_scan(a1):
    """Row-by-row reference with Fractions."""
    rows = []
    signs = ((-1, 1, 1), (1, -1, 1), (1, 1, -1))
    for a2 in range(1, a1 + 1):
        for b1 in range(1, a1 + 1):
            for b2 in range(1, b1 + 1):
                for c1 in range(1, a1 + 1):
                    for c2 in range(1, c1 + 1):
                        pts = ((a1, a2, b1, b2), (a1, a2, c1, c2), (b1, b2, c1, c2))
                        for k, s in enumerate(signs):
                            unit = sum(Fraction(si, w[0] * w[1] * w[2] * w[3]) for si, w in zip(s, pts))
                            p1 = sum(
                                Fraction(si * sum(x * x for x in w), w[0] * w[1] * w[2] * w[3])
                                for si, w in zip(s, pts)
                            )
                            if unit == 0 and p1 == 0:
                                rows.append((a2, b1, b2, c1, c2, k))
    return rows


@pytest.mark.parametrize("a1", [2, 3, 4, 5, 6])
def test_numpy_matches_python_reference(a1):
    assert kernels.scan_numpy(a1).tolist() == [list(r) for r in python_scan(a1)]


@needs_numba
@pytest.mark.parametrize("a1", range(2, 21))
def test_backends_agree(a1):
    np.testing.assert_array_equal(kernels.scan_numba(a1), kernels.scan_numpy(a1))


def test_object_dtype_path_agrees(monkeypatch):
    expected = {a1: kernels.scan_numpy(a1) for a1 in (5, 9)}
    monkeypatch.setattr(kernels, "MAX_INT64_BOUND", 1)
    for a1, rows in expected.items():
        np.testing.assert_array_equal(kernels.scan_numpy(a1), rows)


@needs_numba
def test_numba_refuses_overflow():
    with pytest.raises(OverflowError):
        kernels.scan_numba(kernels.MAX_INT64_BOUND + 1)


def test_int64_bound_is_safe():
    b = kernels.MAX_INT64_BOUND
    # |s1 E1 P2 P3| + |s2 E2 P1 P3| + |s3 E3 P1 P2| <= 3 * (4 b^2) * b^8
    assert 12 * b**10 < np.iinfo(np.int64).max


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.scan(4, backend="fortran")


def test_env_flag_disables_jit():
    env = dict(os.environ, CIRCLEWEIGHTS_DISABLE_JIT="1")
    out = subprocess.run(
        [
            sys.executable,
            "-c",
            "from circleweights import kernels, _jit;"
            "print(_jit.NUMBA_AVAILABLE, kernels.default_backend(), len(kernels.scan(6)))",
        ],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.split() == ["False", "numpy", str(len(kernels.scan_numpy(6)))]
