"""Policy-value evaluation: network, heuristic stand-in, training, storage."""

from .checkpoint import CheckpointError, CheckpointMeta, load_checkpoint, load_model, save_checkpoint
from .evaluate import EvalResult, NetworkEvaluator
from .heuristic import HeuristicEvaluator, heuristic_evaluate
from .network import P_DROP_MAX, NetworkConfig, PolicyValueNet, build_network
from .records import read_records, write_records
from .training import (
    GameRecord,
    ReplayQueue,
    ReplaySample,
    Trainer,
    TrainConfig,
    TurnRecord,
    augment_into_queue,
    load_queue,
    save_queue,
    self_play,
    self_play_game,
    train_config,
)

__all__ = [
    "CheckpointError",
    "CheckpointMeta",
    "EvalResult",
    "GameRecord",
    "HeuristicEvaluator",
    "NetworkConfig",
    "NetworkEvaluator",
    "P_DROP_MAX",
    "PolicyValueNet",
    "ReplayQueue",
    "ReplaySample",
    "Trainer",
    "TrainConfig",
    "TurnRecord",
    "augment_into_queue",
    "build_network",
    "heuristic_evaluate",
    "load_checkpoint",
    "load_model",
    "load_queue",
    "read_records",
    "save_checkpoint",
    "save_queue",
    "self_play",
    "self_play_game",
    "train_config",
    "write_records",
]
