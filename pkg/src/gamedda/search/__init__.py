"""Move-decision algorithms: PUCT search, playout UCT, minimax, random."""

from .alphazero import (
    ARGMAX,
    SEARCH_DEFAULTS,
    SOFTMAX_OPENING,
    EdgeStats,
    Node,
    SearchParams,
    decide_move_alphazero,
    expand,
    mcts_search,
    opening_softmax_weights,
    puct_select,
    select_move_from_visits,
)
from .minimax import (
    MinimaxParams,
    evaluate_leaf,
    evaluate_leaf_connect4,
    evaluate_leaf_othello,
    minimax_decide,
    minimax_root_values,
)
from .random_agent import decide_move_random
from .uct import UctParams, decide_move_vanilla_mcts, vanilla_mcts_visits

__all__ = [
    "ARGMAX",
    "SEARCH_DEFAULTS",
    "SOFTMAX_OPENING",
    "EdgeStats",
    "MinimaxParams",
    "Node",
    "SearchParams",
    "UctParams",
    "decide_move_alphazero",
    "decide_move_random",
    "decide_move_vanilla_mcts",
    "evaluate_leaf",
    "evaluate_leaf_connect4",
    "evaluate_leaf_othello",
    "expand",
    "mcts_search",
    "minimax_decide",
    "minimax_root_values",
    "opening_softmax_weights",
    "puct_select",
    "select_move_from_visits",
    "vanilla_mcts_visits",
]
