import pytest

import bewc
from bewc.codes import RandomCodeParams
from bewc.gf2 import BitMatrix


@pytest.fixture
def ex1():
    """The 4-bit self-dual base code whose codebook has 4 cosets of 4 words."""
    return bewc.from_generator(BitMatrix.from_strings(["1001", "0110"]), "ex1")


def random_code(n: int, dim: int, seed: int, alpha: float = 0.5):
    return bewc.random_base(RandomCodeParams(n=n, dim=dim, alpha=alpha, seed=seed))
