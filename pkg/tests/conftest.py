import sys
import random

import pytest

from circinv import _pykernels, affine, lift
from circinv.perm import CircularArrangement

try:
    from circinv import _ckernels
except ImportError:  # extension not built
    _ckernels = None

KERNEL_MODULES = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    KERNEL_MODULES.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=KERNEL_MODULES)
def kern(request):
    return request.param


@pytest.fixture(params=KERNEL_MODULES)
def backend(request, monkeypatch):
    """Route the high-level API through one specific kernel module."""
    monkeypatch.setattr(affine, "kernels", request.param)
    monkeypatch.setattr(lift, "kernels", request.param)
    return request.param


def random_arrangement(rng: random.Random, n: int) -> CircularArrangement:
    return CircularArrangement(tuple(rng.sample(range(1, n + 1), n)))


def random_affine(rng: random.Random, n: int, spread: int = 3) -> affine.ExtendedAffinePermutation:
    perm = rng.sample(range(1, n + 1), n)
    return affine.ExtendedAffinePermutation(
        n, tuple(x + rng.randint(-spread, spread) * n for x in perm)
    )


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
