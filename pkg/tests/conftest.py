import random

import hypothesis
import pytest

from weylg.fixtures import load_example
from weylg.lattice import SqrtBraidingTensor

hypothesis.settings.register_profile("det", derandomize=True)
hypothesis.settings.load_profile("det")


@pytest.fixture(scope="session")
def zeta11():
    return load_example("zeta11")


@pytest.fixture(scope="session")
def zeta7():
    return load_example("zeta7")


@pytest.fixture(scope="session")
def zeta3():
    return load_example("zeta3")


@pytest.fixture(scope="session")
def a2():
    return load_example("a2")


def random_tensor(rng: random.Random, modulus=None, rank=None, degree=None):
    modulus = modulus or rng.randint(2, 30)
    rank = rank or rng.randint(2, 3)
    degree = degree or rng.randint(2, 4)
    entries = {}
    import itertools

    for idx in itertools.product(range(1, rank + 1), repeat=degree):
        entries[idx] = rng.randrange(modulus)
    return SqrtBraidingTensor.from_entries(modulus, rank, degree, entries)


def random_rank2_profile_tensor(rng: random.Random, modulus, degree):
    profile = [rng.randrange(modulus) for _ in range(degree + 1)]
    return SqrtBraidingTensor.from_rank2_profile(modulus, degree, profile)
