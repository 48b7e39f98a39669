"""Per-game defaults for the three difficulty-adjustment strategies."""

from __future__ import annotations

from dataclasses import dataclass

P_DROP_CAP = 0.95


@dataclass(frozen=True)
class Dda1Params:
    """Simulation-count scaling: n_sim = ceil(10^(-a_sim*(v*c + b_sim0)))."""

    n_h: int
    a_sim: float
    b_sim0: float
    n_max: int


@dataclass(frozen=True)
class Dda2Params:
    """Dropout scaling: p = a_drop*(v*c + p_drop0), clamped to [0, p_max]."""

    n_h: int
    a_drop: float
    p_drop0: float
    p_max: float = P_DROP_CAP


@dataclass(frozen=True)
class Dda3Params:
    """Value-matching search: history window and exploration rate."""

    n_h: int
    c_explore: float


DDA1_DEFAULTS: dict[str, Dda1Params] = {
    "connect4": Dda1Params(n_h=4, a_sim=2.0, b_sim0=-1.4, n_max=200),
    "othello6": Dda1Params(n_h=3, a_sim=1.6, b_sim0=-1.5, n_max=200),
    "othello8": Dda1Params(n_h=3, a_sim=2.8, b_sim0=-1.4, n_max=400),
}

DDA2_DEFAULTS: dict[str, Dda2Params] = {
    "connect4": Dda2Params(n_h=1, a_drop=5.0, p_drop0=-0.4),
    "othello6": Dda2Params(n_h=2, a_drop=1.0, p_drop0=0.0),
    "othello8": Dda2Params(n_h=3, a_drop=10.0, p_drop0=-0.9),
}

DDA3_DEFAULTS: dict[str, Dda3Params] = {
    "connect4": Dda3Params(n_h=2, c_explore=0.5),
    "othello6": Dda3Params(n_h=4, c_explore=1.0),
    "othello8": Dda3Params(n_h=1, c_explore=0.75),
}
