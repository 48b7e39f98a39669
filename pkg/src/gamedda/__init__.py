"""gamedda: board-game engines, AlphaZero-style search, and agents that
dynamically adjust their playing strength to the opponent."""

__version__ = "0.1.0"
