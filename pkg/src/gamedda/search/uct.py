"""Playout-based MCTS with a UCT selection rule.

The cumulative value q of every node on the path is updated from the
searching player's own perspective (+1 win, -1 loss, draw unchanged) and
selection always maximizes the UCT score; there is no sign flip at opponent
nodes. Children are attached to a leaf once its visit count reaches n_open;
unvisited children are always tried (in random order) before any visited
sibling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..games import rules
from ..games.playout import random_playout
from ..games.types import BoardState, Move


@dataclass(frozen=True)
class UctParams:
    n_sim: int = 300
    c: float = 0.5
    eps: float = 1e-7
    n_open: int = 5


class PlayoutNode:
    __slots__ = ("state", "visits", "q", "children", "move")

    def __init__(self, state: BoardState, move: Move | None = None):
        self.state = state
        self.move = move
        self.visits = 0
        self.q = 0.0
        self.children: list[PlayoutNode] | None = None


def _expand(node: PlayoutNode) -> None:
    node.children = [
        PlayoutNode(rules.apply_move(node.state, move), move) for move in rules.valid_moves(node.state)
    ]


def _select_child(node: PlayoutNode, params: UctParams, rng: np.random.Generator) -> PlayoutNode:
    children = node.children
    unvisited = [c for c in children if c.visits == 0]
    if unvisited:
        return unvisited[rng.integers(len(unvisited))]
    log_term = math.log(node.visits + 1)
    best_score = -math.inf
    best: list[PlayoutNode] = []
    for child in children:
        score = child.q / child.visits + params.c * math.sqrt(log_term / (child.visits + params.eps))
        if score > best_score:
            best_score = score
            best = [child]
        elif score == best_score:
            best.append(child)
    return best[rng.integers(len(best))] if len(best) > 1 else best[0]


def vanilla_mcts_visits(state: BoardState, params: UctParams, rng: np.random.Generator) -> list[tuple[Move, int]]:
    """Run the full search and report per-root-move visit counts."""
    if rules.is_terminal(state):
        raise rules.GameOverError("game over")
    me = state.to_move
    root = PlayoutNode(state)
    _expand(root)
    for _ in range(params.n_sim):
        node = root
        path = [root]
        while node.children:
            node = _select_child(node, params, rng)
            path.append(node)
        out = rules.outcome(node.state)
        winner = out.winner if out is not None else random_playout(node.state, rng)
        delta = 1 if winner == me else (-1 if winner == -me else 0)
        for visited in path:
            visited.visits += 1
            visited.q += delta
        if out is None and node.visits >= params.n_open:
            _expand(node)
    return [(c.move, c.visits) for c in root.children]


def decide_move_vanilla_mcts(state: BoardState, params: UctParams, rng: np.random.Generator) -> Move:
    visits = vanilla_mcts_visits(state, params, rng)
    top = max(n for _, n in visits)
    choices = [m for m, n in visits if n == top]
    return choices[rng.integers(len(choices))]
