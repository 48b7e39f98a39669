"""Measurement machinery: agents, matches, tournaments, ratings, reports."""

from .agents import AGENT_KINDS, Agent, AgentConfig, build_agent
from .elo import DEFAULT_K, INITIAL_RATING, EloTable, elo_expected, elo_update
from .play import GamePlayed, play_game, replay_moves
from .reports import (
    write_elo_csv,
    write_games_csv,
    write_grid_csv,
    write_match_csv,
    write_sweep_csv,
)
from .tournament import (
    FrozenOpponent,
    GridCell,
    GridSearchResult,
    MatchResult,
    RatingRun,
    dda_subject_factory,
    fixed_opponent_rating,
    grid_search,
    match_series,
    round_robin,
)

__all__ = [
    "AGENT_KINDS",
    "Agent",
    "AgentConfig",
    "DEFAULT_K",
    "EloTable",
    "FrozenOpponent",
    "GamePlayed",
    "GridCell",
    "GridSearchResult",
    "INITIAL_RATING",
    "MatchResult",
    "RatingRun",
    "build_agent",
    "dda_subject_factory",
    "elo_expected",
    "elo_update",
    "fixed_opponent_rating",
    "grid_search",
    "match_series",
    "play_game",
    "replay_moves",
    "round_robin",
    "write_elo_csv",
    "write_games_csv",
    "write_grid_csv",
    "write_match_csv",
    "write_sweep_csv",
]
