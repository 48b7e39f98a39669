"""PUCT-guided MCTS over a policy-value evaluator.

Leaf values live in absolute disc-color space (+1 means the first player is
winning); selection multiplies Q by the node mover's color so every node is
maximized from its mover's viewpoint. Terminal leaves back up the winner's
color directly. An optional hook replaces both the selection score and the
backup update (used by the value-matching difficulty adjustment).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Protocol

import numpy as np

from ..games import rules
from ..games.types import BoardState, GameVariant, Move, Outcome

ARGMAX = "argmax"
SOFTMAX_OPENING = "softmax_opening"


@dataclass(frozen=True)
class SearchParams:
    n_sim: int
    c_puct: float = 1.25
    t_opening: int = 0
    tau: float = 1.0
    mode: str = ARGMAX
    dirichlet_epsilon: float = 0.0
    dirichlet_alpha: float = 1.0


# Table of per-game search defaults used by the full-strength agents.
SEARCH_DEFAULTS: dict[str, SearchParams] = {
    "connect4": SearchParams(n_sim=200, c_puct=1.25, t_opening=4, tau=50.0),
    "othello6": SearchParams(n_sim=200, c_puct=1.25, t_opening=4, tau=20.0),
    "othello8": SearchParams(n_sim=400, c_puct=1.25, t_opening=6, tau=40.0),
}


class EdgeStats:
    """Per-edge search statistics: visits, cumulative/mean value, prior."""

    __slots__ = ("n", "w", "q", "p")

    def __init__(self, p: float = 0.0):
        self.n = 0
        self.w = 0.0
        self.q = 0.0
        self.p = p

    def __repr__(self) -> str:
        return f"EdgeStats(n={self.n}, w={self.w:.4f}, q={self.q:.4f}, p={self.p:.4f})"


class Node:
    __slots__ = ("state", "out", "moves", "edges", "children")

    def __init__(self, state: BoardState):
        self.state = state
        self.out: Outcome | None = rules.outcome(state)
        self.moves: list[Move] | None = None
        self.edges: list[EdgeStats] | None = None
        self.children: list[Node | None] | None = None

    @property
    def expanded(self) -> bool:
        return self.edges is not None

    def visit_total(self) -> int:
        return sum(e.n for e in self.edges)


class SearchHook(Protocol):
    def select(self, node: Node, rng: np.random.Generator) -> int: ...

    def backup(self, node: Node, edge_index: int, v_leaf: float) -> None: ...


class Evaluator(Protocol):
    def evaluate_state(self, state: BoardState, p_drop: float = 0.0): ...


def _argmax_random(scores: list[float], rng: np.random.Generator) -> int:
    best = max(scores)
    ties = [i for i, s in enumerate(scores) if s == best]
    return ties[rng.integers(len(ties))] if len(ties) > 1 else ties[0]


def expand(node: Node, evaluator: Evaluator, p_drop: float = 0.0) -> float:
    """Evaluate the node, attach masked renormalized priors, return value."""
    result = evaluator.evaluate_state(node.state, p_drop=p_drop)
    moves = rules.valid_moves(node.state)
    variant = node.state.variant
    priors = np.array([result.policy[rules.move_to_action(variant, m)] for m in moves], dtype=np.float64)
    total = priors.sum()
    if total <= 0.0:
        priors = np.full(len(moves), 1.0 / len(moves))
    else:
        priors = priors / total
    node.moves = moves
    node.edges = [EdgeStats(float(p)) for p in priors]
    node.children = [None] * len(moves)
    return float(result.value)


def mix_root_noise(node: Node, rng: np.random.Generator, epsilon: float, alpha: float) -> None:
    noise = rng.dirichlet([alpha] * len(node.edges))
    for edge, x in zip(node.edges, noise):
        edge.p = (1.0 - epsilon) * edge.p + epsilon * float(x)


def puct_select(node: Node, c_puct: float, rng: np.random.Generator) -> int:
    """Edge index maximising mover-signed Q plus the prior exploration bonus."""
    if not node.expanded:
        raise rules.GameError("cannot select on an unexpanded node")
    sign = node.state.to_move
    sqrt_total = math.sqrt(node.visit_total())
    scores = [sign * e.q + c_puct * e.p * sqrt_total / (1 + e.n) for e in node.edges]
    return _argmax_random(scores, rng)


def mcts_search(
    root_state: BoardState,
    evaluator: Evaluator,
    params: SearchParams,
    rng: np.random.Generator,
    hook: SearchHook | None = None,
    p_drop: float = 0.0,
) -> np.ndarray:
    """Run n_sim simulations; returns visit counts over the action space.

    The root is expanded once before the first simulation, so the returned
    counts sum to exactly n_sim.
    """
    if rules.is_terminal(root_state):
        raise rules.GameOverError("game over")
    root = Node(root_state)
    expand(root, evaluator, p_drop=p_drop)
    if params.dirichlet_epsilon > 0.0:
        mix_root_noise(root, rng, params.dirichlet_epsilon, params.dirichlet_alpha)
    for _ in range(params.n_sim):
        node = root
        path: list[tuple[Node, int]] = []
        while True:
            if node.out is not None:
                v = float(node.out.winner)
                break
            if not node.expanded:
                v = expand(node, evaluator, p_drop=p_drop)
                break
            index = hook.select(node, rng) if hook is not None else puct_select(node, params.c_puct, rng)
            path.append((node, index))
            child = node.children[index]
            if child is None:
                child = Node(rules.apply_move(node.state, node.moves[index]))
                node.children[index] = child
            node = child
        for parent, index in path:
            if hook is not None:
                hook.backup(parent, index, v)
            else:
                edge = parent.edges[index]
                edge.n += 1
                edge.w += v
                edge.q = edge.w / edge.n
    visits = np.zeros(root_state.variant.action_count, dtype=np.int64)
    for move, edge in zip(root.moves, root.edges):
        visits[rules.move_to_action(root_state.variant, move)] = edge.n
    return visits


def opening_softmax_weights(counts: np.ndarray, tau: float) -> np.ndarray:
    """exp(N^(1/tau)) weights, max-shifted for numerical stability."""
    powered = np.power(counts.astype(np.float64), 1.0 / tau)
    powered -= powered.max()
    w = np.exp(powered)
    return w / w.sum()


def select_move_from_visits(
    state: BoardState,
    visits: np.ndarray,
    params: SearchParams,
    rng: np.random.Generator,
) -> Move:
    moves = rules.valid_moves(state)
    counts = np.array([visits[rules.move_to_action(state.variant, m)] for m in moves], dtype=np.float64)
    if params.mode == SOFTMAX_OPENING and state.turn_index < params.t_opening:
        probs = opening_softmax_weights(counts, params.tau)
        return moves[rng.choice(len(moves), p=probs)]
    return moves[_argmax_random(list(counts), rng)]


def decide_move_alphazero(
    state: BoardState,
    evaluator: Evaluator,
    params: SearchParams,
    rng: np.random.Generator,
    hook: SearchHook | None = None,
    p_drop: float = 0.0,
) -> Move:
    visits = mcts_search(state, evaluator, params, rng, hook=hook, p_drop=p_drop)
    return select_move_from_visits(state, visits, params, rng)
