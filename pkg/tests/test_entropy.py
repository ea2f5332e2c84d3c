import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from smdiscord.entropy import (
    EntropyParams,
    binary_entropy,
    entropy,
    entropy_of_spectra,
    renyi_entropy,
    shannon_entropy,
    sharma_mittal_entropy,
    tsallis_entropy,
)
from smdiscord.errors import NumericalDomainError, ValidationError

LIMIT_QS = [0.3, 0.5, 2.0, 5.0]
EPSILONS = [1e-2, 1e-3, 1e-4]


def random_distribution(rng, n):
    w = rng.random(n)
    return w / w.sum()


probabilities = st.lists(st.floats(0.0, 1.0), min_size=1, max_size=8).filter(
    lambda xs: sum(xs) > 1e-3
).map(lambda xs: np.array(xs) / sum(xs))
orders = st.floats(0.05, 6.0).filter(lambda x: abs(x - 1) > 1e-3)


def test_sharma_mittal_examples():
    assert sharma_mittal_entropy([1, 0, 0, 0], 0.5, 0.4) == 0.0
    for q, r in [(0.5, 0.4), (2.0, 3.0), (5.0, 0.2)]:
        assert_allclose(sharma_mittal_entropy([0.5, 0.5], q, r),
                        (2 ** (1 - r) - 1) / (1 - r), rtol=1e-13)
    assert_allclose(sharma_mittal_entropy([0.5, 0.5], 2, 3), 0.375, rtol=1e-14)


def test_renyi_examples():
    for q in (0.3, 0.5, 2.0, 7.0):
        assert_allclose(renyi_entropy([0.5, 0.5], q), 1.0, rtol=1e-14)
        assert renyi_entropy([1, 0], q) == 0.0
    p, q = 0.4, 0.5
    expected = math.log2(3 * (p / 3) ** q + (1 - p) ** q) / (1 - q)
    assert_allclose(renyi_entropy([1 - p, p / 3, p / 3, p / 3], q), expected, rtol=1e-14)


def test_tsallis_examples():
    for q in (0.3, 0.5, 2.0):
        assert_allclose(tsallis_entropy([0.5, 0.5], q), (2 ** (1 - q) - 1) / (1 - q), rtol=1e-14)
    assert tsallis_entropy([1, 0, 0], 0.5) == 0.0
    assert_allclose(tsallis_entropy([0.5, 0.5], 2), 0.5, rtol=1e-14)


def test_shannon_examples():
    assert shannon_entropy([0.5, 0.5]) == 1.0
    assert shannon_entropy([1, 0, 0, 0]) == 0.0
    assert shannon_entropy([0.25] * 4) == 2.0


def test_dispatch_examples():
    assert_allclose(entropy([0.5, 0.5], EntropyParams.sharma_mittal(2, 3)), 0.375)
    assert entropy([0.5, 0.5], EntropyParams.von_neumann()) == 1.0
    assert entropy([1, 0], EntropyParams.renyi(0.5)) == 0.0


def test_params_aliases_and_validation():
    assert EntropyParams("sm", 0.5, 0.4).kind == "sharma_mittal"
    assert EntropyParams("vn").q is None
    with pytest.raises(ValidationError):
        EntropyParams("boltzmann", 0.5)
    with pytest.raises(ValidationError):
        EntropyParams("sharma_mittal", 0.5)
    for bad in [(0.0, 0.4), (-1.0, 0.4), (1.0, 0.4), (1 + 1e-9, 0.4), (0.5, 1.0)]:
        with pytest.raises(NumericalDomainError):
            EntropyParams.sharma_mittal(*bad)
    with pytest.raises(NumericalDomainError):
        renyi_entropy([0.5, 0.5], 1.0)


def test_probability_vector_rules():
    assert tsallis_entropy([1.0 + 1e-12, -1e-12], 2) == pytest.approx(0.0, abs=1e-11)
    with pytest.raises(ValidationError):
        shannon_entropy([1.1, -0.1])
    with pytest.raises(ValidationError):
        shannon_entropy([0.3, 0.3])
    with pytest.raises(ValidationError):
        shannon_entropy([])


@settings(max_examples=100, deadline=None)
@given(probabilities, orders, st.floats(-3.0, 6.0).filter(lambda x: abs(x - 1) > 1e-3), st.randoms())
def test_permutation_invariance(p, q, r, rnd):
    perm = list(p)
    rnd.shuffle(perm)
    for ent in (EntropyParams.sharma_mittal(q, r), EntropyParams.renyi(q),
                EntropyParams.tsallis(q), EntropyParams.von_neumann()):
        assert abs(entropy(p, ent) - entropy(perm, ent)) <= 1e-12 * max(1.0, abs(entropy(p, ent)))


@settings(max_examples=100, deadline=None)
@given(probabilities, orders, st.floats(-3.0, 6.0).filter(lambda x: abs(x - 1) > 1e-3))
def test_non_negativity(p, q, r):
    for ent in (EntropyParams.sharma_mittal(q, r), EntropyParams.renyi(q),
                EntropyParams.tsallis(q), EntropyParams.von_neumann()):
        assert entropy(p, ent) >= -1e-12


@pytest.mark.parametrize("q", [0.05, 0.3, 0.5, 2.0, 5.0])
@pytest.mark.parametrize("r", [-1.0, 0.05, 0.4, 3.0, 5.0])
def test_binary_entropy_non_increasing(q, r):
    theta = np.linspace(0, 1, 401)
    for ent in (EntropyParams.sharma_mittal(q, r), EntropyParams.renyi(q),
                EntropyParams.tsallis(q), EntropyParams.von_neumann()):
        h = np.array([binary_entropy(t, ent) for t in theta])
        assert np.all(np.diff(h) <= 1e-12)


def test_entropy_of_spectra_matches_scalar(rng):
    spectra = np.array([random_distribution(rng, 4) for _ in range(30)])
    spectra[0] = [1, 0, 0, 0]
    for ent in (EntropyParams.sharma_mittal(0.5, 0.4), EntropyParams.renyi(2.0),
                EntropyParams.tsallis(0.5), EntropyParams.von_neumann()):
        got = entropy_of_spectra(spectra, ent)
        ref = [entropy(s, ent) for s in spectra]
        assert_allclose(got, ref, atol=1e-13)


@pytest.mark.parametrize("q", LIMIT_QS)
def test_limit_r_to_q_gives_tsallis(q, rng):
    for n in range(2, 9):
        p = random_distribution(rng, n)
        gaps = [max(abs(sharma_mittal_entropy(p, q, q + s * eps) - tsallis_entropy(p, q))
                    for s in (1, -1)) for eps in EPSILONS]
        assert gaps == sorted(gaps, reverse=True)
        assert gaps[-1] < 1e-3


@pytest.mark.parametrize("q", LIMIT_QS)
def test_limit_r_to_one_gives_renyi(q, rng):
    # Stated target: the base-2 Renyi entropy. The log-free two-parameter form
    # tends to the natural-log Renyi entropy, so this stays red for most inputs.
    for n in range(2, 9):
        p = random_distribution(rng, n)
        gaps = [max(abs(sharma_mittal_entropy(p, q, 1 + s * eps) - renyi_entropy(p, q))
                    for s in (1, -1)) for eps in EPSILONS]
        assert gaps[-1] < 1e-3


def test_limit_q_r_to_one_gives_shannon(rng):
    # Same base mismatch as the Renyi rung: the limit is Shannon entropy in nats.
    for n in range(2, 9):
        p = random_distribution(rng, n)
        eps = 1e-4
        assert abs(sharma_mittal_entropy(p, 1 + eps, 1 + eps) - shannon_entropy(p)) < 1e-3


@pytest.mark.parametrize("q", LIMIT_QS)
def test_limits_equal_ln2_times_base2_values(q, rng):
    for n in range(2, 9):
        p = random_distribution(rng, n)
        for s in (1, -1):
            assert_allclose(sharma_mittal_entropy(p, q, 1 + s * 1e-5),
                            math.log(2) * renyi_entropy(p, q), atol=1e-4)
            assert_allclose(sharma_mittal_entropy(p, 1 + s * 1e-5, 1 + s * 1e-5),
                            math.log(2) * shannon_entropy(p), atol=1e-4)
