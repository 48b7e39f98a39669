"""Match series, round-robin rating tournaments, frozen-opponent rating,
and strength-balancing grid search.

Everything is driven by one master seed; per-game seeds are spawned
deterministically, so any result regenerates bit-for-bit from
(configurations, seed).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from ..games.types import GameVariant
from .agents import Agent, AgentConfig, build_agent
from .elo import DEFAULT_K, INITIAL_RATING, EloTable, elo_expected, elo_update
from .play import GamePlayed, play_game


def _score_for(winner: int, color: int) -> float:
    if winner == 0:
        return 0.5
    return 1.0 if winner == color else 0.0


def _spawn_seeds(master_seed: int, n: int) -> list[int]:
    ss = np.random.SeedSequence(master_seed)
    return [int(child.generate_state(1)[0]) for child in ss.spawn(n)]


@dataclass
class MatchResult:
    agent_a: str
    agent_b: str
    variant_id: str
    wins: int = 0
    losses: int = 0
    draws: int = 0
    games: list[GamePlayed] = field(default_factory=list)

    @property
    def n_games(self) -> int:
        return self.wins + self.losses + self.draws

    @property
    def win_rate(self) -> float:
        return self.wins / self.n_games if self.n_games else 0.0

    @property
    def loss_rate(self) -> float:
        return self.losses / self.n_games if self.n_games else 0.0

    @property
    def draw_rate(self) -> float:
        return self.draws / self.n_games if self.n_games else 0.0


def match_series(
    a: AgentConfig | Agent,
    b: AgentConfig | Agent,
    variant: GameVariant,
    n_games: int,
    seed: int = 0,
) -> MatchResult:
    """n_games with seats alternating: a starts the even-indexed games."""
    if n_games % 2 != 0:
        raise ValueError("n_games must be even so both seats are played equally")
    agent_a = build_agent(a, variant) if isinstance(a, AgentConfig) else a
    agent_b = build_agent(b, variant) if isinstance(b, AgentConfig) else b
    if agent_a is agent_b or agent_a.name == agent_b.name:
        raise ValueError("match opponents need distinct agents with distinct names")
    result = MatchResult(agent_a.name, agent_b.name, variant.id)
    seeds = _spawn_seeds(seed, n_games)
    for index, game_seed in enumerate(seeds):
        a_first = index % 2 == 0
        if a_first:
            played = play_game(agent_a, agent_b, variant, game_seed)
            score = _score_for(played.winner, 1)
        else:
            played = play_game(agent_b, agent_a, variant, game_seed)
            score = _score_for(played.winner, -1)
        if score == 1.0:
            result.wins += 1
        elif score == 0.0:
            result.losses += 1
        else:
            result.draws += 1
        result.games.append(played)
    return result


def round_robin(
    agents: list[AgentConfig | Agent],
    variant: GameVariant,
    n_rounds: int,
    seed: int = 0,
    k: float = DEFAULT_K,
    on_game=None,
) -> EloTable:
    """n_rounds of every ordered pair playing once (both seat orders per
    round); ratings update after every game."""
    if len(agents) < 2:
        raise ValueError("need at least 2 agents")
    built = [build_agent(a, variant) if isinstance(a, AgentConfig) else a for a in agents]
    names = [a.name for a in built]
    if len(set(names)) != len(names):
        raise ValueError(f"agent names must be unique, got {names}")
    table = EloTable.for_agents(names, k)
    pairs = [(i, j) for i, j in itertools.product(range(len(built)), repeat=2) if i != j]
    seeds = _spawn_seeds(seed, n_rounds * len(pairs))
    seed_iter = iter(seeds)
    for _ in range(n_rounds):
        for i, j in pairs:
            played = play_game(built[i], built[j], variant, next(seed_iter))
            table.record_game(built[i].name, built[j].name, _score_for(played.winner, 1))
            if on_game is not None:
                on_game(played)
    return table


@dataclass
class FrozenOpponent:
    config: AgentConfig | Agent
    rating: float


@dataclass
class RatingRun:
    rating: float
    per_opponent: list[MatchResult]


def fixed_opponent_rating(
    subject: AgentConfig | Agent,
    opponents: list[FrozenOpponent],
    variant: GameVariant,
    n_games: int,
    seed: int = 0,
    k: float = DEFAULT_K,
    initial: float = INITIAL_RATING,
) -> RatingRun:
    """Rate `subject` against opponents whose ratings never move."""
    rating = initial
    results = []
    seeds = _spawn_seeds(seed, len(opponents))
    subject_agent = build_agent(subject, variant) if isinstance(subject, AgentConfig) else subject
    for opponent, opp_seed in zip(opponents, seeds):
        series = match_series(subject_agent, opponent.config, variant, n_games, seed=opp_seed)
        for played in series.games:
            subject_first = played.first == subject_agent.name
            score = _score_for(played.winner, 1 if subject_first else -1)
            p = elo_expected(rating, opponent.rating)
            rating = elo_update(rating, score, 1, p, k)
        results.append(series)
    return RatingRun(rating, results)


@dataclass
class GridCell:
    params: dict
    objective: float
    per_opponent: list[MatchResult]


@dataclass
class GridSearchResult:
    best: GridCell
    cells: list[GridCell]


def grid_search(
    variant: GameVariant,
    subject_factory,
    grid: dict[str, list],
    opponents: list[AgentConfig | Agent],
    n_games_per_cell: int,
    seed: int = 0,
) -> GridSearchResult:
    """Minimize sum over opponents of |win_rate - loss_rate|.

    subject_factory(cell_params) -> AgentConfig | Agent builds the subject
    for one grid cell.
    """
    if not grid or any(not values for values in grid.values()):
        raise ValueError("grid must be non-empty")
    names = list(grid)
    cells: list[GridCell] = []
    combos = list(itertools.product(*(grid[name] for name in names)))
    seeds = _spawn_seeds(seed, len(combos) * len(opponents))
    seed_iter = iter(seeds)
    for combo in combos:
        params = dict(zip(names, combo))
        subject = subject_factory(params)
        results = []
        objective = 0.0
        for opponent in opponents:
            series = match_series(subject, opponent, variant, n_games_per_cell, seed=next(seed_iter))
            objective += abs(series.win_rate - series.loss_rate)
            results.append(series)
        cells.append(GridCell(params, objective, results))
    best = min(cells, key=lambda c: c.objective)
    return GridSearchResult(best, cells)


def dda_subject_factory(kind: str, evaluator: str = "heuristic"):
    """Default grid-search subject builder: one adjustment agent per cell."""

    def factory(params: dict) -> AgentConfig:
        return AgentConfig(kind=kind, evaluator=evaluator, dda_overrides=params, name=kind)

    return factory
