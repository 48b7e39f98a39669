"""Othello rules for 6x6 and 8x8 boards.

A placement must bracket at least one straight run of opposing discs; a
player with no such placement passes. The game ends when the board is full
or neither player has a flipping placement (the two-consecutive-passes
rule, stated without history).
"""

from __future__ import annotations

import numpy as np

from .types import (
    FIRST,
    OTHELLO6,
    OTHELLO8,
    BoardState,
    GameVariant,
    Move,
    Outcome,
    Pass,
    Place,
    freeze_cells,
)

DIRECTIONS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))


def new_game(variant: GameVariant) -> BoardState:
    cells = np.zeros((variant.rows, variant.cols), dtype=np.int8)
    r = variant.rows // 2 - 1
    c = variant.cols // 2 - 1
    # standard cross: first player on the main diagonal of the center square
    cells[r, c] = cells[r + 1, c + 1] = FIRST
    cells[r, c + 1] = cells[r + 1, c] = -FIRST
    return BoardState(variant, freeze_cells(cells), FIRST, 0)


def _shift(a: np.ndarray, dr: int, dc: int) -> np.ndarray:
    """out[r, c] = a[r - dr, c - dc], False where that falls off the board."""
    rows, cols = a.shape
    out = np.zeros_like(a)
    out[max(0, dr) : rows + min(0, dr), max(0, dc) : cols + min(0, dc)] = a[
        max(0, -dr) : rows + min(0, -dr), max(0, -dc) : cols + min(0, -dc)
    ]
    return out


def legal_mask(cells: np.ndarray, player: int) -> np.ndarray:
    """Boolean grid of cells where `player` may place and flip something."""
    own = cells == player
    opp = cells == -player
    empty = cells == 0
    steps = max(cells.shape) - 2
    legal = np.zeros_like(own)
    for dr, dc in DIRECTIONS:
        # chase runs of opposing discs that terminate in an own disc along +d
        run = opp & _shift(own, -dr, -dc)
        for _ in range(steps - 1):
            run = run | (opp & _shift(run, -dr, -dc))
        legal |= empty & _shift(run, -dr, -dc)
    return legal


def has_move(cells: np.ndarray, player: int) -> bool:
    return bool(legal_mask(cells, player).any())


def flips_for(cells: np.ndarray, player: int, row: int, col: int) -> list[tuple[int, int]]:
    """All opposing discs bracketed by placing `player` at (row, col)."""
    rows, cols = cells.shape
    flips: list[tuple[int, int]] = []
    if cells[row, col] != 0:
        return flips
    for dr, dc in DIRECTIONS:
        r, c = row + dr, col + dc
        captured: list[tuple[int, int]] = []
        while 0 <= r < rows and 0 <= c < cols and cells[r, c] == -player:
            captured.append((r, c))
            r += dr
            c += dc
        if captured and 0 <= r < rows and 0 <= c < cols and cells[r, c] == player:
            flips.extend(captured)
    return flips


def valid_moves(state: BoardState) -> list[Move]:
    mask = legal_mask(state.cells, state.to_move)
    if not mask.any():
        return [Pass()]
    return [Place(int(r), int(c)) for r, c in np.argwhere(mask)]


def apply_move(state: BoardState, move: Move) -> BoardState:
    cells = state.cells.copy()
    if isinstance(move, Place):
        flips = flips_for(cells, state.to_move, move.row, move.col)
        cells[move.row, move.col] = state.to_move
        for r, c in flips:
            cells[r, c] = state.to_move
    return BoardState(state.variant, freeze_cells(cells), -state.to_move, state.turn_index + 1)


def outcome(state: BoardState) -> Outcome | None:
    cells = state.cells
    if (cells == 0).any() and (has_move(cells, state.to_move) or has_move(cells, -state.to_move)):
        return None
    n_first = int((cells == 1).sum())
    n_second = int((cells == -1).sum())
    if n_first > n_second:
        return Outcome(1)
    if n_second > n_first:
        return Outcome(-1)
    return Outcome(0)
