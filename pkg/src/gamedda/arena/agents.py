"""Agent configurations and the playable agent objects they build.

Kinds: alphazero, dda1, dda2, dda3, mcts1 (300 playout sims), mcts2 (100),
minimax (depth 3), random. Network-backed kinds take either the heuristic
evaluator or a checkpoint path; adjustment kinds carry their per-game
parameter tables unless overridden.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from ..dda.history import ValueHistory
from ..dda.params import Dda1Params, Dda2Params, Dda3Params
from ..dda.strategies import DDA_KINDS, DdaDiagnostics, dda_decide_move, default_params
from ..games import rules
from ..games.types import BoardState, GameVariant, Move
from ..nn.checkpoint import load_model
from ..nn.evaluate import NetworkEvaluator
from ..nn.heuristic import HeuristicEvaluator
from ..search.alphazero import SEARCH_DEFAULTS, SearchParams, decide_move_alphazero
from ..search.minimax import MinimaxParams, minimax_decide
from ..search.random_agent import decide_move_random
from ..search.uct import UctParams, decide_move_vanilla_mcts

AGENT_KINDS = ("alphazero", "dda1", "dda2", "dda3", "mcts1", "mcts2", "minimax", "random")

HEURISTIC = "heuristic"


@dataclass(frozen=True)
class AgentConfig:
    kind: str
    name: str | None = None
    evaluator: str = HEURISTIC  # "heuristic" or a checkpoint path
    n_sim: int | None = None  # overrides the per-game search default
    c_puct: float = 1.25
    p_drop: float = 0.0  # fixed head damage for plain alphazero
    depth: int = 3
    dda_overrides: dict | None = None

    def __post_init__(self):
        if self.kind not in AGENT_KINDS:
            raise ValueError(f"unknown agent kind {self.kind!r}")

    @property
    def label(self) -> str:
        return self.name or self.kind


class Agent:
    """One seat in one game at a time; new_game resets per-game state."""

    def __init__(self, name: str):
        self.name = name
        self.color = 0
        self.rng: np.random.Generator = np.random.default_rng(0)

    def new_game(self, color: int, rng: np.random.Generator) -> None:
        self.color = color
        self.rng = rng

    def select_move(self, state: BoardState) -> Move:
        raise NotImplementedError

    def diagnostics(self) -> list[DdaDiagnostics]:
        return []


class RandomAgent(Agent):
    def select_move(self, state: BoardState) -> Move:
        return decide_move_random(state, self.rng)


class VanillaMctsAgent(Agent):
    def __init__(self, name: str, params: UctParams):
        super().__init__(name)
        self.params = params

    def select_move(self, state: BoardState) -> Move:
        return decide_move_vanilla_mcts(state, self.params, self.rng)


class MinimaxAgent(Agent):
    def __init__(self, name: str, params: MinimaxParams):
        super().__init__(name)
        self.params = params

    def select_move(self, state: BoardState) -> Move:
        return minimax_decide(state, self.params, self.rng)


class AlphaZeroAgent(Agent):
    def __init__(self, name: str, evaluator, search_params: SearchParams, p_drop: float = 0.0):
        super().__init__(name)
        self.evaluator = evaluator
        self.search_params = search_params
        self.p_drop = p_drop

    def new_game(self, color: int, rng: np.random.Generator) -> None:
        super().new_game(color, rng)
        if isinstance(self.evaluator, NetworkEvaluator):
            self.evaluator.reseed_dropout(int(rng.integers(2**31)))

    def select_move(self, state: BoardState) -> Move:
        return decide_move_alphazero(
            state, self.evaluator, self.search_params, self.rng, p_drop=self.p_drop
        )


class DdaAgent(Agent):
    def __init__(self, name: str, kind: str, evaluator, params, search_params: SearchParams):
        super().__init__(name)
        self.kind = kind
        self.evaluator = evaluator
        self.params = params
        self.search_params = search_params
        self.history = ValueHistory(color=0)
        self._diagnostics: list[DdaDiagnostics] = []

    def new_game(self, color: int, rng: np.random.Generator) -> None:
        super().new_game(color, rng)
        self.history = ValueHistory(color=color)
        self._diagnostics = []
        if isinstance(self.evaluator, NetworkEvaluator):
            self.evaluator.reseed_dropout(int(rng.integers(2**31)))

    def select_move(self, state: BoardState) -> Move:
        move, diag = dda_decide_move(
            self.kind,
            state,
            self.history,
            self.evaluator,
            self.rng,
            params=self.params,
            search_params=self.search_params,
        )
        self._diagnostics.append(diag)
        return move

    def diagnostics(self) -> list[DdaDiagnostics]:
        return list(self._diagnostics)


def _build_evaluator(spec: str):
    if spec == HEURISTIC:
        return HeuristicEvaluator()
    model, _ = load_model(spec)
    return NetworkEvaluator(model)


def _dda_params(kind: str, variant: GameVariant, overrides: dict | None):
    params = default_params(kind, variant.id)
    if overrides:
        params = replace(params, **overrides)
    return params


def build_agent(config: AgentConfig, variant: GameVariant) -> Agent:
    name = config.label
    base = SEARCH_DEFAULTS[variant.id]
    search = SearchParams(
        n_sim=config.n_sim if config.n_sim is not None else base.n_sim,
        c_puct=config.c_puct,
    )
    if config.kind == "random":
        return RandomAgent(name)
    if config.kind == "mcts1":
        return VanillaMctsAgent(name, UctParams(n_sim=300))
    if config.kind == "mcts2":
        return VanillaMctsAgent(name, UctParams(n_sim=100))
    if config.kind == "minimax":
        return MinimaxAgent(name, MinimaxParams(depth=config.depth))
    if config.kind == "alphazero":
        return AlphaZeroAgent(name, _build_evaluator(config.evaluator), search, config.p_drop)
    if config.kind in DDA_KINDS:
        params = _dda_params(config.kind, variant, config.dda_overrides)
        return DdaAgent(name, config.kind, _build_evaluator(config.evaluator), params, search)
    raise ValueError(f"unknown agent kind {config.kind!r}")
