import math

import numpy as np
import pytest
import torch

from gamedda import games
from gamedda.games import CONNECT4, OTHELLO6, encode_planes
from gamedda.nn.evaluate import NetworkEvaluator
from gamedda.nn.network import NetworkConfig, PolicyValueNet, build_network

from conftest import random_midgame_state


@pytest.fixture(scope="module")
def c4_net():
    return build_network(CONNECT4, preset="desk", seed=123)


@pytest.fixture(scope="module")
def c4_eval(c4_net):
    return NetworkEvaluator(c4_net)


def test_deterministic_without_dropout(c4_eval):
    state = games.new_game(CONNECT4)
    planes = encode_planes([state], 1)
    a = c4_eval.evaluate(planes)
    b = c4_eval.evaluate(planes)
    assert a.value == b.value
    assert np.array_equal(a.policy, b.policy)


def test_seeded_dropout_reproducible(c4_eval):
    state = games.new_game(CONNECT4)
    planes = encode_planes([state], 1)
    a = c4_eval.evaluate(planes, p_drop=0.95, rng_seed=42)
    b = c4_eval.evaluate(planes, p_drop=0.95, rng_seed=42)
    c = c4_eval.evaluate(planes, p_drop=0.95, rng_seed=43)
    assert a.value == b.value and np.array_equal(a.policy, b.policy)
    assert a.value != c.value or not np.array_equal(a.policy, c.policy)


def test_unseeded_dropout_fresh_randomness(c4_eval):
    state = games.new_game(CONNECT4)
    planes = encode_planes([state], 1)
    results = {c4_eval.evaluate(planes, p_drop=0.9).value for _ in range(5)}
    assert len(results) > 1


def test_policy_normalized_value_bounded(c4_eval, rng):
    for _ in range(5):
        state = random_midgame_state(CONNECT4, rng)
        for p_drop in (0.0, 0.5, 0.95):
            r = c4_eval.evaluate_state(state, p_drop=p_drop)
            assert -1.0 <= r.value <= 1.0
            assert (r.policy >= 0).all()
            assert abs(r.policy.sum() - 1.0) < 1e-5


def test_zero_dropout_bit_identical_to_plain(c4_net):
    state = games.new_game(CONNECT4)
    x = torch.from_numpy(encode_planes([state], 1)).permute(2, 0, 1).unsqueeze(0)
    c4_net.eval()
    with torch.no_grad():
        plain = c4_net(x)
        damped = c4_net(x, p_drop=0.0, generator=torch.Generator().manual_seed(0))
    assert torch.equal(plain[0], damped[0])
    assert torch.equal(plain[1], damped[1])


def test_dropout_not_rescaled():
    """With p close to 1 nearly all hidden units die; because survivors are
    not rescaled the damaged value must shrink toward the output bias."""
    net = build_network(CONNECT4, preset="desk", seed=5)
    state = games.new_game(CONNECT4)
    x = torch.from_numpy(encode_planes([state], 1)).permute(2, 0, 1).unsqueeze(0)
    net.eval()
    with torch.no_grad():
        bias_only = torch.tanh(net.value_out.bias)
        damaged = [
            net(x, p_drop=0.95, generator=torch.Generator().manual_seed(k))[1] for k in range(30)
        ]
    gaps = [float(abs(d - bias_only)) for d in damaged]
    with torch.no_grad():
        plain_gap = float(abs(net(x)[1] - bias_only))
    assert np.mean(gaps) < max(plain_gap, 0.5)


def test_shape_mismatch_rejected(c4_eval):
    with pytest.raises(ValueError):
        c4_eval.evaluate(np.zeros((8, 8, 3), dtype=np.float32))


def test_p_drop_out_of_range_rejected(c4_eval):
    state = games.new_game(CONNECT4)
    planes = encode_planes([state], 1)
    with pytest.raises(ValueError):
        c4_eval.evaluate(planes, p_drop=0.96)
    with pytest.raises(ValueError):
        c4_eval.evaluate(planes, p_drop=-0.1)


def test_paper_scale_config_blocks():
    assert NetworkConfig.for_variant(CONNECT4, "paper").n_res_blocks == 2
    assert NetworkConfig.for_variant(OTHELLO6, "paper").n_res_blocks == 2
    assert NetworkConfig.for_variant(games.OTHELLO8, "paper").n_res_blocks == 5
    assert NetworkConfig.for_variant(CONNECT4, "paper").n_filters == 256
    assert NetworkConfig.for_variant(CONNECT4, "paper").kernel_size == 3
