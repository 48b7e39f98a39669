"""Engine vs independent slow oracle on random games.

A quick 60-games-per-variant pass runs here; the full >=1000-game sweep is
acceptance criterion 3 in test_acceptance.py, sharing check_games_agree.
"""

import numpy as np

from gamedda import games
from gamedda.games import CONNECT4, OTHELLO6, OTHELLO8, Drop, Pass, Place

from oracle_rules import OracleC4, OracleOthello


def _check_c4_game(rng) -> None:
    state = games.new_game(CONNECT4)
    board = OracleC4.initial()
    while True:
        oracle_result = OracleC4.result(board)
        engine_out = games.outcome(state)
        assert (engine_out is None) == (oracle_result is None)
        if engine_out is not None:
            assert engine_out.winner == oracle_result
            return
        moves = games.valid_moves(state)
        assert sorted(m.column for m in moves) == OracleC4.legal_columns(board)
        move = moves[rng.integers(len(moves))]
        state = games.apply_move(state, move)
        board = OracleC4.drop(board, move.column, -state.to_move)
        assert np.array_equal(state.cells, np.array(board, dtype=np.int8))


def _check_othello_game(variant, rng) -> None:
    oracle = OracleOthello(variant.rows)
    state = games.new_game(variant)
    board = oracle.initial()
    while True:
        oracle_result = oracle.result(board, state.to_move)
        engine_out = games.outcome(state)
        assert (engine_out is None) == (oracle_result is None)
        if engine_out is not None:
            assert engine_out.winner == oracle_result
            return
        moves = games.valid_moves(state)
        oracle_cells = oracle.legal_cells(board, state.to_move)
        if moves == [Pass()]:
            assert oracle_cells == []
            mover = state.to_move
            state = games.apply_move(state, Pass())
            continue
        assert sorted((m.row, m.col) for m in moves) == sorted(oracle_cells)
        move = moves[rng.integers(len(moves))]
        mover = state.to_move
        state = games.apply_move(state, move)
        board = oracle.place(board, move.row, move.col, mover)
        assert np.array_equal(state.cells, np.array(board, dtype=np.int8))


def check_games_agree(variant, n_games: int, seed: int) -> None:
    rng = np.random.default_rng(seed)
    for _ in range(n_games):
        if variant.id == "connect4":
            _check_c4_game(rng)
        else:
            _check_othello_game(variant, rng)


def test_connect4_agrees_with_oracle():
    check_games_agree(CONNECT4, 60, seed=11)


def test_othello6_agrees_with_oracle():
    check_games_agree(OTHELLO6, 60, seed=12)


def test_othello8_agrees_with_oracle():
    check_games_agree(OTHELLO8, 60, seed=13)
