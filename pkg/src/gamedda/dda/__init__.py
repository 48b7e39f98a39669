"""Dynamic difficulty adjustment: value history plus three strategies."""

from .history import ValueHistory, mean_value
from .params import (
    DDA1_DEFAULTS,
    DDA2_DEFAULTS,
    DDA3_DEFAULTS,
    Dda1Params,
    Dda2Params,
    Dda3Params,
)
from .strategies import (
    DDA_KINDS,
    Dda3Hook,
    DdaDiagnostics,
    dda1_num_sims,
    dda2_dropout_prob,
    dda3_backup,
    dda3_score,
    dda_decide_move,
    default_params,
)

__all__ = [
    "DDA1_DEFAULTS",
    "DDA2_DEFAULTS",
    "DDA3_DEFAULTS",
    "DDA_KINDS",
    "Dda1Params",
    "Dda2Params",
    "Dda3Params",
    "Dda3Hook",
    "DdaDiagnostics",
    "ValueHistory",
    "dda1_num_sims",
    "dda2_dropout_prob",
    "dda3_backup",
    "dda3_score",
    "dda_decide_move",
    "default_params",
    "mean_value",
]
