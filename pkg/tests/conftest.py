import numpy as np
import pytest

from app.services.catalog import default_catalog


@pytest.fixture(autouse=True)
def _fresh_catalog():
    default_catalog.cache_clear()
    yield
    default_catalog.cache_clear()


def assert_symmetric_hadamard(H, order=None):
    a = H.as_int()
    n = H.order
    if order is not None:
        assert n == order
    assert np.array_equal(a @ a.T, n * np.eye(n, dtype=np.int64))
    assert np.array_equal(a, a.T)
