"""Shared value types for the supported board games.

Disc colors are +1 for the first player and -1 for the second; a draw is 0.
Boards are numpy int8 grids with row 0 at the top and column 0 at the left.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FIRST = 1
SECOND = -1


@dataclass(frozen=True)
class GameVariant:
    """Static description of one game: board size and flat action space."""

    id: str
    rows: int
    cols: int
    action_count: int

    @property
    def cell_count(self) -> int:
        return self.rows * self.cols

    @property
    def has_pass(self) -> bool:
        return self.id != "connect4"

    @property
    def pass_action(self) -> int:
        if not self.has_pass:
            raise ValueError(f"{self.id} has no pass action")
        return self.cell_count


CONNECT4 = GameVariant("connect4", rows=6, cols=7, action_count=7)
OTHELLO6 = GameVariant("othello6", rows=6, cols=6, action_count=37)
OTHELLO8 = GameVariant("othello8", rows=8, cols=8, action_count=65)
VARIANTS: dict[str, GameVariant] = {v.id: v for v in (CONNECT4, OTHELLO6, OTHELLO8)}


@dataclass(frozen=True)
class Drop:
    """Connect4 move: drop a disc into a column."""

    column: int


@dataclass(frozen=True)
class Place:
    """Othello move: place a disc on a cell."""

    row: int
    col: int


@dataclass(frozen=True)
class Pass:
    """Othello move taken when no placement flips anything."""


PASS = Pass()

Move = Drop | Place | Pass


@dataclass(frozen=True)
class Outcome:
    """Result of a finished game: winning disc color, 0 for a draw."""

    winner: int


# eq=False: numpy cells make generated __eq__ ambiguous; compare via
# np.array_equal on .cells where needed.
@dataclass(frozen=True, eq=False)
class BoardState:
    """Immutable snapshot of a game in progress."""

    variant: GameVariant
    cells: np.ndarray
    to_move: int
    turn_index: int

    def __post_init__(self) -> None:
        self.cells.setflags(write=False)


def freeze_cells(cells: np.ndarray) -> np.ndarray:
    cells = np.ascontiguousarray(cells, dtype=np.int8)
    cells.setflags(write=False)
    return cells
