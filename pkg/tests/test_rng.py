"""Known-answer and distribution tests for the splitmix64 seeding layer."""

import numpy as np
import pytest

from circenergy.rng import GAMMA, MASK64, SplitMix64, mix64, splitmix64, trial_seed

# First four outputs of the reference splitmix64 stream seeded with 0.
SEED0_STREAM = (
    0xE220A8397B1DCDAF,
    0x6E789E6AA1B965F4,
    0x06C45D188009454F,
    0xF88BB8A8724C81EC,
)


def test_seed0_known_stream():
    stream = SplitMix64(0)
    assert tuple(stream.next_uint64() for _ in range(4)) == SEED0_STREAM


def test_outputs_are_positional():
    # output j of a stream seeded with s is mix64(s + (j+1)*GAMMA)
    seed = 0x1234_5678_9ABC_DEF0
    stream = SplitMix64(seed)
    outputs = [stream.next_uint64() for _ in range(10)]
    for j, value in enumerate(outputs):
        assert value == mix64((seed + (j + 1) * GAMMA) & MASK64)


def test_splitmix64_matches_stream_step():
    for seed in (0, 1, 42, MASK64):
        assert splitmix64(seed) == SplitMix64(seed).next_uint64()


def test_trial_seed_known_values():
    assert trial_seed(0, 0) == SEED0_STREAM[0]
    assert trial_seed(0, 1) == splitmix64(1)
    assert trial_seed(5, 3) == splitmix64(6)


def test_trial_seed_accepts_numpy_indices():
    assert trial_seed(7, np.int64(9)) == trial_seed(7, 9)


def test_trial_seed_rejects_negative_index():
    with pytest.raises(ValueError):
        trial_seed(0, -1)


def test_trial_seeds_distinct():
    seeds = {trial_seed(99, i) for i in range(10_000)}
    assert len(seeds) == 10_000


def test_uniform_open_interval():
    stream = SplitMix64(7)
    u = stream.uniforms(100_000)
    assert u.min() > 0.0 and u.max() < 1.0
    assert abs(u.mean() - 0.5) < 0.005


def test_uniforms_reproducible():
    a = SplitMix64(123).uniforms(50)
    b = SplitMix64(123).uniforms(50)
    assert np.array_equal(a, b)
    c = SplitMix64(124).uniforms(50)
    assert not np.array_equal(a, c)


def test_gaussian_moments():
    draws = SplitMix64(11).gaussians(40_000, mu=2.0, sigma=3.0)
    assert abs(draws.mean() - 2.0) < 4.0 * 3.0 / np.sqrt(40_000)
    assert abs(draws.std() - 3.0) < 0.05


def test_bernoulli_frequency():
    draws = SplitMix64(13).bernoullis(40_000, 0.3)
    assert set(np.unique(draws)) <= {0.0, 1.0}
    assert abs(draws.mean() - 0.3) < 4.0 * np.sqrt(0.3 * 0.7 / 40_000)
