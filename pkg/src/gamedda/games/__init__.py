"""Game rules, encodings, and text formats for Connect4 and Othello."""

from .types import (
    CONNECT4,
    FIRST,
    OTHELLO6,
    OTHELLO8,
    PASS,
    SECOND,
    VARIANTS,
    BoardState,
    Drop,
    GameVariant,
    Move,
    Outcome,
    Pass,
    Place,
)
from .rules import (
    GameError,
    GameOverError,
    IllegalMoveError,
    action_to_move,
    apply_move,
    is_terminal,
    move_to_action,
    new_game,
    outcome,
    valid_moves,
)
from .encoding import HISTORY_LEN, encode_planes, plane_count, symmetries
from .playout import random_playout
from .textboard import from_text, to_text

__all__ = [
    "CONNECT4",
    "FIRST",
    "HISTORY_LEN",
    "OTHELLO6",
    "OTHELLO8",
    "PASS",
    "SECOND",
    "VARIANTS",
    "BoardState",
    "Drop",
    "GameError",
    "GameOverError",
    "GameVariant",
    "IllegalMoveError",
    "Move",
    "Outcome",
    "Pass",
    "Place",
    "action_to_move",
    "apply_move",
    "encode_planes",
    "from_text",
    "is_terminal",
    "move_to_action",
    "new_game",
    "outcome",
    "plane_count",
    "random_playout",
    "symmetries",
    "to_text",
    "valid_moves",
]
