import numpy as np
import pytest

from opineq.rng import stream


@pytest.fixture
def rng():
    return stream(20240814, "tests")


@pytest.fixture
def spd_pair(rng):
    from opineq.generators import random_spd
    from opineq.hermitian import SpectralInterval

    iv = SpectralInterval(0.5, 3.0)
    return random_spd(4, iv, rng), random_spd(4, iv, rng)


def assert_close(a, b, tol=1e-10):
    __tracebackhide__ = True
    np.testing.assert_allclose(a, b, rtol=0, atol=tol)
