"""Deterministic heuristic evaluator: a fast, trained-network stand-in.

The value is tanh of the minimax leaf evaluation (Connect4 run scores,
Othello positional tables) divided by a per-game scale; the policy is
uniform over valid moves.
"""

from __future__ import annotations

import math

import numpy as np

from ..games import rules
from ..games.types import BoardState
from ..search.minimax import evaluate_leaf
from .evaluate import EvalResult

VALUE_SCALE = {"connect4": 20_000.0, "othello6": 100.0, "othello8": 100.0}


def heuristic_evaluate(state: BoardState) -> EvalResult:
    """Value from the mover's perspective: positive when the player to move
    stands better. Searches score terminal leaves themselves, so this is
    the plain positional evaluation."""
    scale = VALUE_SCALE[state.variant.id]
    score = evaluate_leaf(state, state.to_move)
    value = math.tanh(score / scale)
    policy = np.zeros(state.variant.action_count, dtype=np.float64)
    if rules.outcome(state) is None:
        moves = rules.valid_moves(state)
        for move in moves:
            policy[rules.move_to_action(state.variant, move)] = 1.0 / len(moves)
    return EvalResult(value, policy)


class HeuristicEvaluator:
    """Search-protocol adapter reporting values in absolute disc-color space.

    tanh is odd, so multiplying the mover-perspective value by the mover's
    color equals evaluating the first-player-positive score directly.
    p_drop is accepted for protocol compatibility and ignored: damage-mode
    dropout is a network concept.
    """

    def evaluate_state(self, state: BoardState, p_drop: float = 0.0, rng_seed: int | None = None) -> EvalResult:
        result = heuristic_evaluate(state)
        return EvalResult(result.value * state.to_move, result.policy)
