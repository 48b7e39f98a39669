"""The three difficulty-adjustment strategies.

All three read the same signal: v_bar, the rolling mean of undamaged root
values at the agent's own turns, multiplied by the agent's disc color so
that +1 always means "the agent is winning".

  1. Simulation scaling   - shrink the search budget when winning.
  2. Dropout scaling      - damage the network harder when winning.
  3. Value matching       - a replacement UCT score/backup that prefers
                            moves whose leaf value cancels v_bar, while
                            modeling the opponent as holding it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..games.types import BoardState, Move
from ..search.alphazero import (
    SEARCH_DEFAULTS,
    EdgeStats,
    Node,
    SearchParams,
    mcts_search,
    select_move_from_visits,
)
from .history import ValueHistory, mean_value
from .params import (
    DDA1_DEFAULTS,
    DDA2_DEFAULTS,
    DDA3_DEFAULTS,
    Dda1Params,
    Dda2Params,
    Dda3Params,
)

DDA_KINDS = ("dda1", "dda2", "dda3")


def dda1_num_sims(v_bar: float, c_dda: int, params: Dda1Params) -> int:
    """ceil(10^(-a_sim*(v_bar*c_dda + b_sim0))) clamped to n_max; always >= 1."""
    n = math.ceil(10.0 ** (-params.a_sim * (v_bar * c_dda + params.b_sim0)))
    return int(min(n, params.n_max))


def dda2_dropout_prob(v_bar: float, c_dda: int, params: Dda2Params) -> float:
    """a_drop*(v_bar*c_dda + p_drop0) clamped to [0, p_max]."""
    p = params.a_drop * (v_bar * c_dda + params.p_drop0)
    return float(min(max(p, 0.0), params.p_max))


def dda3_score(edge: EdgeStats, parent_visits: int, c_explore: float) -> float:
    """W/parent_visits (0 when unvisited parent) plus the visit-count bonus."""
    mean = edge.w / parent_visits if parent_visits > 0 else 0.0
    return mean + c_explore * math.sqrt(2.0 * math.log(parent_visits + 1) / (edge.n + 1))


def dda3_backup(edge: EdgeStats, v_leaf: float, v_bar: float, c_edge: int, c_dda: int) -> None:
    """Replace the cumulative-value update with a pure penalty subtraction.

    Own edges (c_edge == c_dda) lose |v_leaf + v_bar|: zero exactly when the
    leaf value cancels the running mean. Opponent edges lose |v_leaf - v_bar|:
    zero when the opponent holds the value where it is.
    """
    edge.n += 1
    edge.w -= abs(v_leaf + v_bar * c_edge * c_dda)
    edge.q = edge.w / edge.n


@dataclass
class Dda3Hook:
    """Installed into the tree search to replace PUCT selection and backup.

    Priors are ignored; only leaf values feed the penalties.
    """

    v_bar: float
    c_dda: int
    c_explore: float

    def select(self, node: Node, rng: np.random.Generator) -> int:
        parent_visits = node.visit_total()
        best_score = -math.inf
        ties: list[int] = []
        for i, edge in enumerate(node.edges):
            score = dda3_score(edge, parent_visits, self.c_explore)
            if score > best_score:
                best_score = score
                ties = [i]
            elif score == best_score:
                ties.append(i)
        return ties[rng.integers(len(ties))] if len(ties) > 1 else ties[0]

    def backup(self, node: Node, edge_index: int, v_leaf: float) -> None:
        dda3_backup(node.edges[edge_index], v_leaf, self.v_bar, node.state.to_move, self.c_dda)


@dataclass(frozen=True)
class DdaDiagnostics:
    """Per-turn adaptation trace: raw value, rolling mean, active knob."""

    v_n: float
    v_bar: float
    n_sim: int | None = None
    p_drop: float | None = None

    def to_dict(self) -> dict:
        out = {"v_n": self.v_n, "v_bar": self.v_bar}
        if self.n_sim is not None:
            out["n_sim"] = self.n_sim
        if self.p_drop is not None:
            out["p_drop"] = self.p_drop
        return out


def default_params(kind: str, variant_id: str):
    if kind == "dda1":
        return DDA1_DEFAULTS[variant_id]
    if kind == "dda2":
        return DDA2_DEFAULTS[variant_id]
    if kind == "dda3":
        return DDA3_DEFAULTS[variant_id]
    raise ValueError(f"unknown adjustment kind {kind!r}")


def dda_decide_move(
    kind: str,
    state: BoardState,
    history: ValueHistory,
    evaluator,
    rng: np.random.Generator,
    params=None,
    search_params: SearchParams | None = None,
) -> tuple[Move, DdaDiagnostics]:
    """One adjusted decision: sample v_n undamaged, update the history, pick
    the strategy's knob from v_bar, search, and play the most-visited move."""
    if kind not in DDA_KINDS:
        raise ValueError(f"unknown adjustment kind {kind!r}")
    variant_id = state.variant.id
    if params is None:
        params = default_params(kind, variant_id)
    base = search_params or SEARCH_DEFAULTS[variant_id]

    v_n = float(evaluator.evaluate_state(state, p_drop=0.0).value)
    history.append(v_n)
    v_bar = history.mean(params.n_h)
    c_dda = history.color

    if kind == "dda1":
        n_sim = dda1_num_sims(v_bar, c_dda, params)
        search = SearchParams(n_sim=n_sim, c_puct=base.c_puct)
        visits = mcts_search(state, evaluator, search, rng)
        diagnostics = DdaDiagnostics(v_n, v_bar, n_sim=n_sim)
    elif kind == "dda2":
        p_drop = dda2_dropout_prob(v_bar, c_dda, params)
        search = SearchParams(n_sim=base.n_sim, c_puct=base.c_puct)
        visits = mcts_search(state, evaluator, search, rng, p_drop=p_drop)
        diagnostics = DdaDiagnostics(v_n, v_bar, p_drop=p_drop)
    else:
        hook = Dda3Hook(v_bar=v_bar, c_dda=c_dda, c_explore=params.c_explore)
        search = SearchParams(n_sim=base.n_sim, c_puct=base.c_puct)
        visits = mcts_search(state, evaluator, search, rng, hook=hook)
        diagnostics = DdaDiagnostics(v_n, v_bar)

    move = select_move_from_visits(state, visits, search, rng)
    return move, diagnostics
