"""Uniform-random move selection."""

from __future__ import annotations

import numpy as np

from ..games import rules
from ..games.types import BoardState, Move


def decide_move_random(state: BoardState, rng: np.random.Generator) -> Move:
    moves = rules.valid_moves(state)
    return moves[rng.integers(len(moves))]
