"""Connect4 rules: gravity drops on a 6x7 grid, four in a row wins."""

from __future__ import annotations

import numpy as np

from .types import CONNECT4, FIRST, BoardState, Drop, Move, Outcome, freeze_cells


def new_game() -> BoardState:
    cells = np.zeros((CONNECT4.rows, CONNECT4.cols), dtype=np.int8)
    return BoardState(CONNECT4, freeze_cells(cells), FIRST, 0)


def drop_legal(state: BoardState, column: int) -> bool:
    return 0 <= column < CONNECT4.cols and state.cells[0, column] == 0


def valid_moves(state: BoardState) -> list[Move]:
    return [Drop(c) for c in range(CONNECT4.cols) if state.cells[0, c] == 0]


def apply_move(state: BoardState, move: Drop) -> BoardState:
    """Drop into the column; legality is checked by the caller."""
    cells = state.cells.copy()
    column = cells[:, move.column]
    row = int(np.flatnonzero(column == 0)[-1])
    cells[row, move.column] = state.to_move
    return BoardState(CONNECT4, freeze_cells(cells), -state.to_move, state.turn_index + 1)


def line_winner(cells: np.ndarray) -> int:
    """Disc color owning a 4-line, or 0. Legal play yields at most one winner."""
    c = cells.astype(np.int16)
    windows = (
        c[:, :-3] + c[:, 1:-2] + c[:, 2:-1] + c[:, 3:],
        c[:-3, :] + c[1:-2, :] + c[2:-1, :] + c[3:, :],
        c[:-3, :-3] + c[1:-2, 1:-2] + c[2:-1, 2:-1] + c[3:, 3:],
        c[:-3, 3:] + c[1:-2, 2:-1] + c[2:-1, 1:-2] + c[3:, :-3],
    )
    for w in windows:
        if (w == 4).any():
            return 1
        if (w == -4).any():
            return -1
    return 0


def outcome(state: BoardState) -> Outcome | None:
    winner = line_winner(state.cells)
    if winner != 0:
        return Outcome(winner)
    if not (state.cells == 0).any():
        return Outcome(0)
    return None
