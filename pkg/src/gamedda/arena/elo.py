"""Elo rating arithmetic and a live rating table.

Draws score 0.5. Both sides of a game are updated simultaneously from their
pre-game ratings, which makes the update exactly zero-sum at equal K.
"""

from __future__ import annotations

from dataclasses import dataclass, field

DEFAULT_K = 8.0
INITIAL_RATING = 1500.0


def elo_expected(e_a: float, e_b: float) -> float:
    """Probability that a rated e_a beats a rated e_b."""
    return 1.0 / (1.0 + 10.0 ** ((e_b - e_a) / 400.0))


def elo_update(e_a: float, n_win: float, n_games: int, p: float, k: float = DEFAULT_K) -> float:
    """New rating after n_games with n_win points (draws count 0.5)."""
    return e_a + k * (n_win - n_games * p)


@dataclass
class EloTable:
    ratings: dict[str, float] = field(default_factory=dict)
    k: float = DEFAULT_K

    @staticmethod
    def for_agents(names, k: float = DEFAULT_K) -> "EloTable":
        return EloTable({name: INITIAL_RATING for name in names}, k)

    def record_game(self, a: str, b: str, score_a: float) -> None:
        """Apply one game result; score_a is 1, 0.5, or 0 for a's result."""
        p = elo_expected(self.ratings[a], self.ratings[b])
        self.ratings[a] = elo_update(self.ratings[a], score_a, 1, p, self.k)
        self.ratings[b] = elo_update(self.ratings[b], 1.0 - score_a, 1, 1.0 - p, self.k)

    def ranked(self) -> list[tuple[str, float]]:
        return sorted(self.ratings.items(), key=lambda kv: -kv[1])
