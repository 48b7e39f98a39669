"""Fast uniform-random playouts to a terminal state.

These are the hot loop of the vanilla MCTS agents, so they work on raw
representations (a bitboard for Connect4, plain arrays for Othello) instead
of BoardState values. Semantics match the rules API and are tested against
it.
"""

from __future__ import annotations

import numpy as np

from . import othello
from .types import BoardState

# Connect4 bitboard: bit index = col * 7 + row-from-bottom, one spare bit
# per column so shifted win checks cannot wrap between columns.
_C4_SHIFTS = (1, 7, 6, 8)


def _c4_win(bb: int) -> bool:
    for s in _C4_SHIFTS:
        m = bb & (bb >> s)
        if m & (m >> (2 * s)):
            return True
    return False


def _c4_bitboards(state: BoardState) -> tuple[dict[int, int], list[int]]:
    boards = {1: 0, -1: 0}
    heights = [0] * 7
    cells = state.cells
    for col in range(7):
        for row_from_bottom in range(6):
            v = int(cells[5 - row_from_bottom, col])
            if v == 0:
                break
            boards[v] |= 1 << (col * 7 + row_from_bottom)
            heights[col] += 1
    return boards, heights


def _c4_playout(state: BoardState, rng: np.random.Generator) -> int:
    boards, heights = _c4_bitboards(state)
    mover = state.to_move
    remaining = 42 - heights[0] - heights[1] - heights[2] - heights[3] - heights[4] - heights[5] - heights[6]
    while remaining:
        open_cols = [c for c in range(7) if heights[c] < 6]
        col = open_cols[rng.integers(len(open_cols))]
        boards[mover] |= 1 << (col * 7 + heights[col])
        heights[col] += 1
        remaining -= 1
        if _c4_win(boards[mover]):
            return mover
        mover = -mover
    return 0


def _othello_playout(state: BoardState, rng: np.random.Generator) -> int:
    cells = state.cells.copy()
    mover = state.to_move
    while True:
        mask = othello.legal_mask(cells, mover)
        if not mask.any():
            if not othello.has_move(cells, -mover):
                break
            mover = -mover
            continue
        choices = np.argwhere(mask)
        row, col = choices[rng.integers(len(choices))]
        for r, c in othello.flips_for(cells, mover, int(row), int(col)):
            cells[r, c] = mover
        cells[row, col] = mover
        if not (cells == 0).any():
            break
        mover = -mover
    n_first = int((cells == 1).sum())
    n_second = int((cells == -1).sum())
    return (n_first > n_second) - (n_first < n_second)


def random_playout(state: BoardState, rng: np.random.Generator) -> int:
    """Play uniformly random moves to the end; returns the winner color or 0."""
    if state.variant.id == "connect4":
        return _c4_playout(state, rng)
    return _othello_playout(state, rng)
