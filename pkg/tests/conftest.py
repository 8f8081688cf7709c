import numpy as np
import pytest

from densecap import random_state


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_unitary(rng, dim=2):
    """Haar-ish unitary from the QR of a complex Ginibre matrix."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_states(n, seed, rank=4):
    return [random_state(seed=(seed, i), rank=rank) for i in range(n)]
