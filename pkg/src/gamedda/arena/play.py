"""Driving single games between two agents, with per-game seeding."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..games import rules
from ..games.types import BoardState, GameVariant, Move
from .agents import Agent


@dataclass
class GamePlayed:
    variant_id: str
    first: str
    second: str
    seed: int
    winner: int
    moves: list[Move]
    diagnostics: dict[str, list] = field(default_factory=dict)


def play_game(first: Agent, second: Agent, variant: GameVariant, seed: int) -> GamePlayed:
    """One game; `first` holds color +1. Agents get independent child rngs."""
    ss = np.random.SeedSequence(seed)
    rng_first, rng_second = (np.random.default_rng(s) for s in ss.spawn(2))
    first.new_game(1, rng_first)
    second.new_game(-1, rng_second)
    state = rules.new_game(variant)
    moves: list[Move] = []
    while (out := rules.outcome(state)) is None:
        agent = first if state.to_move == 1 else second
        move = agent.select_move(state)
        state = rules.apply_move(state, move)
        moves.append(move)
    diagnostics = {}
    for agent in (first, second):
        diag = agent.diagnostics()
        if diag:
            diagnostics[agent.name] = [d.to_dict() for d in diag]
    return GamePlayed(variant.id, first.name, second.name, seed, out.winner, moves, diagnostics)


def replay_moves(variant: GameVariant, moves: list[Move]) -> BoardState:
    state = rules.new_game(variant)
    for move in moves:
        state = rules.apply_move(state, move)
    return state
