"""Depth-limited minimax with per-game leaf evaluation.

Connect4 leaves score maximal same-color runs (pairs 100, triples 10000);
Othello leaves use fixed positional weight tables. Terminal nodes score
1000000 * winner * mover_color for Connect4 and 1000 * winner * mover_color
for Othello. Near the end of an Othello game the search runs to terminal
positions instead of stopping at the depth limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..games import rules
from ..games.types import BoardState, Move

CONNECT4_TERMINAL = 1_000_000.0
OTHELLO_TERMINAL = 1_000.0
_PAIR = 100.0
_TRIPLE = 10_000.0

WEIGHTS_6 = np.array(
    [
        [30, -5, 2, 2, -5, 30],
        [-5, -15, 3, 3, -15, -5],
        [2, 3, 0, 0, 3, 2],
        [2, 3, 0, 0, 3, 2],
        [-5, -15, 3, 3, -15, -5],
        [30, -5, 2, 2, -5, 30],
    ],
    dtype=np.float64,
)

WEIGHTS_8 = np.array(
    [
        [120, -20, 20, 5, 5, 20, -20, 120],
        [-20, -40, -5, -5, -5, -5, -40, -20],
        [20, -5, 15, 3, 3, 15, -5, 20],
        [5, -5, 3, 3, 3, 3, -5, 5],
        [5, -5, 3, 3, 3, 3, -5, 5],
        [20, -5, 15, 3, 3, 15, -5, 20],
        [-20, -40, -5, -5, -5, -5, -40, -20],
        [120, -20, 20, 5, 5, 20, -20, 120],
    ],
    dtype=np.float64,
)


@dataclass(frozen=True)
class MinimaxParams:
    depth: int = 3
    endgame_full_depth_turns: int = 6  # Othello only


def _board_lines(cells: np.ndarray):
    rows, cols = cells.shape
    for r in range(rows):
        yield cells[r, :]
    for c in range(cols):
        yield cells[:, c]
    flipped = np.fliplr(cells)
    for offset in range(-(rows - 1), cols):
        yield cells.diagonal(offset)
        yield flipped.diagonal(offset)


def _run_score(cells: np.ndarray) -> float:
    """Sum of pair/triple scores over maximal same-color runs, first-player
    positive."""
    total = 0.0
    for line in _board_lines(cells):
        run_color = 0
        run_len = 0
        for v in list(line) + [0]:
            if v == run_color:
                run_len += 1
                continue
            if run_color != 0:
                if run_len == 2:
                    total += _PAIR * run_color
                elif run_len == 3:
                    total += _TRIPLE * run_color
            run_color = int(v)
            run_len = 1
    return total


def evaluate_leaf_connect4(state: BoardState, c_minimax: int) -> float:
    out = rules.outcome(state)
    if out is not None:
        return CONNECT4_TERMINAL * out.winner * c_minimax
    return _run_score(state.cells) * c_minimax


def evaluate_leaf_othello(state: BoardState, c_minimax: int) -> float:
    """Positional table sum; terminal handling lives in the tree search."""
    if state.variant.id == "othello6":
        weights = WEIGHTS_6
    elif state.variant.id == "othello8":
        weights = WEIGHTS_8
    else:
        raise ValueError(f"not an othello variant: {state.variant.id}")
    return float((weights * state.cells).sum()) * c_minimax


def evaluate_leaf(state: BoardState, c_minimax: int) -> float:
    if state.variant.id == "connect4":
        return evaluate_leaf_connect4(state, c_minimax)
    return evaluate_leaf_othello(state, c_minimax)


def _terminal_value(state: BoardState, winner: int, c_minimax: int) -> float:
    scale = CONNECT4_TERMINAL if state.variant.id == "connect4" else OTHELLO_TERMINAL
    return scale * winner * c_minimax


def _search(state: BoardState, remaining: int, alpha: float, beta: float, c_minimax: int, to_terminal: bool) -> float:
    out = rules.outcome(state)
    if out is not None:
        return _terminal_value(state, out.winner, c_minimax)
    if not to_terminal and remaining == 0:
        return evaluate_leaf(state, c_minimax)
    maximizing = state.to_move == c_minimax
    best = -math.inf if maximizing else math.inf
    for move in rules.valid_moves(state):
        value = _search(rules.apply_move(state, move), remaining - 1, alpha, beta, c_minimax, to_terminal)
        if maximizing:
            best = max(best, value)
            alpha = max(alpha, best)
        else:
            best = min(best, value)
            beta = min(beta, best)
        if beta <= alpha:
            break
    return best


def _full_depth_endgame(state: BoardState, params: MinimaxParams) -> bool:
    if state.variant.id == "connect4":
        return False
    return int((state.cells == 0).sum()) <= params.endgame_full_depth_turns


def minimax_root_values(state: BoardState, params: MinimaxParams) -> list[tuple[Move, float]]:
    """Exact minimax value of every root move.

    Each child gets its own full alpha-beta window so pruning never blurs
    the tie set at the root.
    """
    c_minimax = state.to_move
    to_terminal = _full_depth_endgame(state, params)
    values = []
    for move in rules.valid_moves(state):
        child = rules.apply_move(state, move)
        values.append((move, _search(child, params.depth - 1, -math.inf, math.inf, c_minimax, to_terminal)))
    return values


def minimax_decide(state: BoardState, params: MinimaxParams, rng: np.random.Generator) -> Move:
    values = minimax_root_values(state, params)
    best = max(v for _, v in values)
    choices = [m for m, v in values if v == best]
    return choices[rng.integers(len(choices))]
