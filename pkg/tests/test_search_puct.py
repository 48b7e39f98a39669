import math

import numpy as np
import pytest

from gamedda import games
from gamedda.games import CONNECT4, OTHELLO6, Drop, GameOverError
from gamedda.nn.heuristic import HeuristicEvaluator
from gamedda.search.alphazero import (
    ARGMAX,
    SOFTMAX_OPENING,
    EdgeStats,
    Node,
    SearchParams,
    decide_move_alphazero,
    expand,
    mcts_search,
    opening_softmax_weights,
    puct_select,
    select_move_from_visits,
)

from conftest import random_midgame_state


def make_node(state, priors, ns=None, qs=None):
    node = Node(state)
    node.moves = games.valid_moves(state)[: len(priors)]
    node.edges = [EdgeStats(p) for p in priors]
    node.children = [None] * len(priors)
    if ns:
        for e, n in zip(node.edges, ns):
            e.n = n
    if qs:
        for e, q in zip(node.edges, qs):
            e.q = q
            e.w = q * max(e.n, 1)
    return node


def test_puct_scores_hand_fixture(rng):
    # parent visits 4 (carried by two sidelined edges), scored edges have
    # Q=0, N=0, priors [0.7, 0.3], c_puct=1.25 -> scores [1.75, 0.75]
    state = games.new_game(CONNECT4)
    node = make_node(state, [0.7, 0.3, 0.0, 0.0])
    node.edges[2].n = 2
    node.edges[3].n = 2
    node.edges[2].q = node.edges[3].q = -10.0  # unselectable
    assert node.visit_total() == 4
    sqrt_total = math.sqrt(4)
    assert 1.25 * 0.7 * sqrt_total / (1 + 0) == pytest.approx(1.75)
    assert 1.25 * 0.3 * sqrt_total / (1 + 0) == pytest.approx(0.75)
    assert puct_select(node, 1.25, rng) == 0


def test_zero_parent_visits_uniform_tiebreak():
    state = games.new_game(CONNECT4)
    counts = [0] * 3
    for seed in range(300):
        node = make_node(state, [0.5, 0.3, 0.2])
        pick = puct_select(node, 1.25, np.random.default_rng(seed))
        counts[pick] += 1
    # all exploration terms are 0 at N(s)=0, Q ties at 0 -> uniform
    assert all(c > 60 for c in counts)


def test_identical_stats_uniform_selection():
    state = games.new_game(CONNECT4)
    counts = [0] * 4
    for seed in range(400):
        node = make_node(state, [0.25, 0.25, 0.25, 0.25])
        for e in node.edges:
            e.n = 3
            e.w = 1.5
            e.q = 0.5
        pick = puct_select(node, 1.25, np.random.default_rng(seed))
        counts[pick] += 1
    assert all(c > 55 for c in counts)


def test_unexpanded_select_errors(rng):
    node = Node(games.new_game(CONNECT4))
    with pytest.raises(games.GameError):
        puct_select(node, 1.25, rng)


def test_single_simulation_counts(rng):
    state = games.new_game(CONNECT4)
    visits = mcts_search(state, HeuristicEvaluator(), SearchParams(n_sim=1), rng)
    assert visits.sum() == 1


def test_visit_total_equals_n_sim(rng):
    state = games.new_game(CONNECT4)
    for n_sim in (1, 7, 50):
        visits = mcts_search(state, HeuristicEvaluator(), SearchParams(n_sim=n_sim), rng)
        assert visits.sum() == n_sim


def test_immediate_win_has_max_visits(rng):
    state = games.new_game(CONNECT4)
    for col in (0, 1, 0, 1, 0, 1):
        state = games.apply_move(state, Drop(col))
    winning = [
        m
        for m in games.valid_moves(state)
        if (out := games.outcome(games.apply_move(state, m))) and out.winner == state.to_move
    ]
    assert winning == [Drop(0)]
    visits = mcts_search(state, HeuristicEvaluator(), SearchParams(n_sim=200), rng)
    assert visits.argmax() == 0


def test_q_bounded(rng):
    state = random_midgame_state(OTHELLO6, rng)
    root = Node(state)
    evaluator = HeuristicEvaluator()
    expand(root, evaluator)
    params = SearchParams(n_sim=80)
    # run a manual search keeping the root accessible
    from gamedda.search import alphazero as az

    visits = az.mcts_search(state, evaluator, params, rng)
    assert visits.sum() == 80


def test_terminal_root_errors(rng):
    state = games.new_game(CONNECT4)
    for col in (0, 1, 0, 1, 0, 1, 0):
        state = games.apply_move(state, Drop(col))
    with pytest.raises(GameOverError):
        mcts_search(state, HeuristicEvaluator(), SearchParams(n_sim=5), rng)


def test_decide_argmax_and_ties():
    state = games.new_game(CONNECT4)
    visits = np.zeros(7, dtype=np.int64)
    visits[2] = 10
    visits[4] = 5
    params = SearchParams(n_sim=15)
    move = select_move_from_visits(state, visits, params, np.random.default_rng(0))
    assert move == Drop(2)

    visits = np.zeros(7, dtype=np.int64)
    visits[1] = 7
    visits[5] = 7
    picks = {
        select_move_from_visits(state, visits, params, np.random.default_rng(s)).column
        for s in range(40)
    }
    assert picks == {1, 5}


def test_softmax_opening_even_on_equal_visits():
    state = games.new_game(CONNECT4)
    visits = np.zeros(7, dtype=np.int64)
    visits[0] = 1
    visits[3] = 1
    params = SearchParams(n_sim=2, t_opening=4, tau=50.0, mode=SOFTMAX_OPENING)
    counts = {0: 0, 3: 0, "other": 0}
    for seed in range(600):
        move = select_move_from_visits(state, visits, params, np.random.default_rng(seed))
        counts[move.column if move.column in (0, 3) else "other"] += 1
    # weights: exp(1) for visited, exp(0) for the rest -> visited are equal
    assert abs(counts[0] - counts[3]) < 80


def test_opening_softmax_weights_formula():
    counts = np.array([1.0, 1.0])
    w = opening_softmax_weights(counts, tau=7.0)
    assert np.allclose(w, [0.5, 0.5])
    counts = np.array([8.0, 1.0, 0.0])
    tau = 2.0
    raw = np.exp(np.power(counts, 1 / tau) - np.power(counts, 1 / tau).max())
    assert np.allclose(opening_softmax_weights(counts, tau), raw / raw.sum())


def test_search_never_returns_illegal(rng):
    evaluator = HeuristicEvaluator()
    for variant in (CONNECT4, OTHELLO6):
        for _ in range(8):
            state = random_midgame_state(variant, rng)
            move = decide_move_alphazero(state, evaluator, SearchParams(n_sim=20), rng)
            assert move in games.valid_moves(state)


def test_dirichlet_noise_perturbs_priors(rng):
    state = games.new_game(CONNECT4)
    evaluator = HeuristicEvaluator()
    node = Node(state)
    expand(node, evaluator)
    before = [e.p for e in node.edges]
    from gamedda.search.alphazero import mix_root_noise

    mix_root_noise(node, rng, 0.2, 1.0)
    after = [e.p for e in node.edges]
    assert not np.allclose(before, after)
    assert math.isclose(sum(after), 1.0, rel_tol=1e-9)
