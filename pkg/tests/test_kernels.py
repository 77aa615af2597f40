"""The compiled and pure-Python kernels must agree exactly."""

import os
import random

import pytest

from circinv import _backend, _pykernels

try:
    from circinv import _ckernels
except ImportError:
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def test_backend_selected():
    assert _backend.BACKEND in ("cython", "python")
    if os.environ.get("CIRCINV_PURE_PYTHON"):
        assert _backend.kernels is _pykernels
    elif _ckernels is not None:
        assert _backend.kernels is _ckernels


@pytest.mark.parametrize(
    "n, i, image, expected",
    [
        (8, 1, 8, 0),
        (5, 3, 4, 4),
        (8, 2, 6, 6),  # tie |2-6| == |2-(-2)| keeps the original
        (5, 5, 1, 6),
        (5, 1, 5, 0),
    ],
)
def test_minimize_path(kern, n, i, image, expected):
    assert kern.minimize_path(n, i, image) == expected


def test_nearest_lift_example(kern):
    assert list(kern.nearest_lift([3, 5, 4, 1, 2])) == [3, 0, 4, 6, 7]


def test_shi_length_examples(kern):
    assert kern.shi_length([3, 5, 4, 1, 2]) == 7
    assert kern.shi_length([3, 0, 4, 6, 7]) == 3
    # floors: 57//3 = 19, 49//3 = 16, -8//3 = -3
    assert kern.shi_length([-40, 17, 9]) == 38


@needs_ext
def test_compiled_matches_python():
    rng = random.Random(11)
    for _ in range(400):
        n = rng.randint(3, 25)
        perm = rng.sample(range(1, n + 1), n)
        images = [x + rng.randint(-5, 5) * n for x in perm]
        assert _ckernels.shi_length(images) == _pykernels.shi_length(images)
        assert list(_ckernels.nearest_lift(perm)) == list(_pykernels.nearest_lift(perm))
        scan_c = _ckernels.frame_scan(perm)
        scan_py = _pykernels.frame_scan(perm)
        assert scan_c == scan_py
        assert list(_ckernels.uncross(scan_c[3])) == list(_pykernels.uncross(scan_py[3]))

