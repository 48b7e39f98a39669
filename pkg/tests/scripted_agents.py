"""Scripted test agents and helpers that find fixture game lines."""

from __future__ import annotations

import numpy as np

from gamedda import games
from gamedda.arena.agents import Agent
from gamedda.games.types import GameVariant, Move


class ScriptedAgent(Agent):
    """Replays a fixed move list for whichever seat it is given."""

    def __init__(self, name: str, lines: dict[int, list[Move]]):
        super().__init__(name)
        self.lines = lines
        self._cursor = 0

    def new_game(self, color: int, rng: np.random.Generator) -> None:
        super().new_game(color, rng)
        self._cursor = 0

    def select_move(self, state):
        move = self.lines[self.color][self._cursor]
        self._cursor += 1
        return move


def find_game_with_winner(variant: GameVariant, winner: int, seed: int = 0) -> list[Move]:
    """Random-search a full game whose result is `winner` (0 for a draw).

    Draw lines avoid immediately winning moves whenever possible, which
    makes full-board Connect4 draws easy to find.
    """
    rng = np.random.default_rng(seed)
    for _ in range(100_000):
        state = games.new_game(variant)
        moves: list[Move] = []
        while (out := games.outcome(state)) is None:
            options = games.valid_moves(state)
            if winner == 0:
                safe = [
                    m
                    for m in options
                    if (o := games.outcome(games.apply_move(state, m))) is None
                ]
                options = safe or options
            move = options[rng.integers(len(options))]
            moves.append(move)
            state = games.apply_move(state, move)
        if out.winner == winner:
            return moves
    raise AssertionError(f"no game with winner {winner} found")


def split_by_seat(moves: list[Move]) -> dict[int, list[Move]]:
    return {1: moves[0::2], -1: moves[1::2]}
