"""Variant-dispatching rules API: the single entry point used by search,
training, and the service. All functions are pure; states are immutable.
"""

from __future__ import annotations

from . import connect4, othello
from .types import BoardState, Drop, GameVariant, Move, Outcome, Pass, Place


class GameError(Exception):
    pass


class GameOverError(GameError):
    """Raised when an operation needs a live game but the state is terminal."""


class IllegalMoveError(GameError):
    def __init__(self, move: Move, reason: str = ""):
        self.move = move
        detail = f": {reason}" if reason else ""
        super().__init__(f"illegal move {move!r}{detail}")


def new_game(variant: GameVariant) -> BoardState:
    if variant.id == "connect4":
        return connect4.new_game()
    return othello.new_game(variant)


def outcome(state: BoardState) -> Outcome | None:
    if state.variant.id == "connect4":
        return connect4.outcome(state)
    return othello.outcome(state)


def is_terminal(state: BoardState) -> bool:
    return outcome(state) is not None


def valid_moves(state: BoardState) -> list[Move]:
    if is_terminal(state):
        raise GameOverError("game over")
    if state.variant.id == "connect4":
        return connect4.valid_moves(state)
    return othello.valid_moves(state)


def apply_move(state: BoardState, move: Move) -> BoardState:
    """Apply a move, validating it structurally against the position."""
    if state.variant.id == "connect4":
        if not isinstance(move, Drop) or not connect4.drop_legal(state, move.column):
            raise IllegalMoveError(move, "column full or out of range")
        return connect4.apply_move(state, move)
    if isinstance(move, Place):
        if not (0 <= move.row < state.variant.rows and 0 <= move.col < state.variant.cols):
            raise IllegalMoveError(move, "off the board")
        if not othello.flips_for(state.cells, state.to_move, move.row, move.col):
            raise IllegalMoveError(move, "flips nothing")
        return othello.apply_move(state, move)
    if isinstance(move, Pass):
        if othello.has_move(state.cells, state.to_move):
            raise IllegalMoveError(move, "a flipping placement exists")
        return othello.apply_move(state, move)
    raise IllegalMoveError(move, f"not a {state.variant.id} move")


def move_to_action(variant: GameVariant, move: Move) -> int:
    """Flat policy index of a move: columns for connect4, cells then pass."""
    if isinstance(move, Drop):
        return move.column
    if isinstance(move, Place):
        return move.row * variant.cols + move.col
    return variant.pass_action


def action_to_move(variant: GameVariant, action: int) -> Move:
    if not 0 <= action < variant.action_count:
        raise ValueError(f"action {action} out of range for {variant.id}")
    if variant.id == "connect4":
        return Drop(action)
    if action == variant.pass_action:
        return Pass()
    return Place(action // variant.cols, action % variant.cols)
