import itertools

import numpy as np
import pytest

from smdiscord import BellDiagonalParams, EntropyParams, validate_bell_params


def valid_bell_grid(step: float):
    """All (c1, c2, c3) on a lattice of the given step that are valid states."""
    n = int(round(2 / step))
    axis = np.linspace(-1.0, 1.0, n + 1)
    out = []
    for c in itertools.product(axis, repeat=3):
        c = tuple(round(float(x), 12) for x in c)
        if validate_bell_params(*c).valid:
            out.append(BellDiagonalParams(*c))
    return out


def random_valid_bell(rng, n: int):
    out = []
    while len(out) < n:
        c = rng.uniform(-1, 1, 3)
        if validate_bell_params(*c).valid:
            out.append(BellDiagonalParams(*c))
    return out


# The seven entropy settings used for the oracle comparison.
ORACLE_ENTROPIES = [
    EntropyParams.sharma_mittal(0.5, 0.4),
    EntropyParams.sharma_mittal(2.0, 3.0),
    EntropyParams.renyi(0.5),
    EntropyParams.renyi(2.0),
    EntropyParams.tsallis(0.5),
    EntropyParams.tsallis(2.0),
    EntropyParams.von_neumann(),
]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
