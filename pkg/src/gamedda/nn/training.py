"""Self-play training: generate games with search, augment by symmetry into
a bounded replay queue, and fit the network with SGD.

The loss per sample is (c_win - v)^2 - pi . log p: squared error between the
winner's disc color and the value head, plus cross-entropy between the root
search probabilities and the policy head.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
import torch

from ..games import rules
from ..games.encoding import encode_planes, symmetries
from ..games.types import BoardState, GameVariant
from ..search.alphazero import (
    SOFTMAX_OPENING,
    SearchParams,
    mcts_search,
    select_move_from_visits,
)
from .evaluate import NetworkEvaluator
from .network import NetworkConfig, PolicyValueNet


@dataclass(frozen=True)
class TrainConfig:
    n_iter: int
    n_self: int
    n_sim: int
    c_puct: float
    t_opening: int
    tau: float
    epsilon_noise: float
    n_queue: int
    n_epoch: int
    n_batch: int
    learning_rate: float
    momentum: float
    weight_decay: float

    def __post_init__(self):
        for name in ("n_iter", "n_self", "n_sim", "t_opening", "tau", "n_queue", "n_epoch", "n_batch", "learning_rate", "momentum", "weight_decay"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.n_sim < 1 or self.n_batch < 1 or self.n_queue < 1:
            raise ValueError("n_sim, n_batch and n_queue must be positive")


_PAPER_TRAIN = {
    "connect4": TrainConfig(600, 30, 200, 1.25, 4, 50.0, 0.2, 20_000, 1, 2048, 0.2, 0.9, 1e-4),
    "othello6": TrainConfig(600, 10, 200, 1.25, 4, 20.0, 0.2, 20_000, 1, 2048, 0.2, 0.9, 1e-4),
    "othello8": TrainConfig(700, 10, 400, 1.25, 6, 40.0, 0.2, 50_000, 1, 2048, 0.2, 0.9, 1e-4),
}


def train_config(variant: GameVariant, preset: str = "paper") -> TrainConfig:
    base = _PAPER_TRAIN[variant.id]
    if preset == "paper":
        return base
    if preset == "desk":
        return replace(
            base,
            n_iter=3,
            n_self=4,
            n_sim=25,
            n_queue=2000,
            n_batch=64,
            learning_rate=0.02,
        )
    raise ValueError(f"unknown preset {preset!r}")


@dataclass
class ReplaySample:
    planes: np.ndarray
    pi: np.ndarray
    c_win: int


class ReplayQueue:
    """Bounded FIFO of training samples; oldest evicted first."""

    def __init__(self, capacity: int):
        self.capacity = capacity
        self._items: deque[ReplaySample] = deque(maxlen=capacity)

    def add(self, sample: ReplaySample) -> None:
        self._items.append(sample)

    def extend(self, samples) -> None:
        self._items.extend(samples)

    def __len__(self) -> int:
        return len(self._items)

    def __getitem__(self, i: int) -> ReplaySample:
        return self._items[i]

    def __iter__(self):
        return iter(self._items)


@dataclass
class TurnRecord:
    state: BoardState
    pi: np.ndarray
    diagnostics: dict | None = None


@dataclass
class GameRecord:
    turns: list[TurnRecord]
    winner: int


def search_params_for(config: TrainConfig) -> SearchParams:
    return SearchParams(
        n_sim=config.n_sim,
        c_puct=config.c_puct,
        t_opening=config.t_opening,
        tau=config.tau,
        mode=SOFTMAX_OPENING,
        dirichlet_epsilon=config.epsilon_noise,
        dirichlet_alpha=1.0,
    )


def self_play_game(evaluator, variant: GameVariant, config: TrainConfig, rng: np.random.Generator) -> GameRecord:
    params = search_params_for(config)
    state = rules.new_game(variant)
    turns: list[TurnRecord] = []
    while (out := rules.outcome(state)) is None:
        visits = mcts_search(state, evaluator, params, rng)
        pi = visits.astype(np.float64) / visits.sum()
        turns.append(TurnRecord(state, pi))
        move = select_move_from_visits(state, visits, params, rng)
        state = rules.apply_move(state, move)
    return GameRecord(turns, out.winner)


def self_play(evaluator, variant: GameVariant, config: TrainConfig, n_games: int, rng: np.random.Generator) -> list[GameRecord]:
    return [self_play_game(evaluator, variant, config, rng) for _ in range(n_games)]


def augment_into_queue(records: list[GameRecord], queue: ReplayQueue) -> int:
    """Symmetry-expand records into the queue; returns samples added."""
    added = 0
    for record in records:
        for turn in record.turns:
            for sym_state, sym_pi in symmetries(turn.state, turn.pi):
                planes = encode_planes([sym_state], sym_state.to_move)
                queue.add(ReplaySample(planes, sym_pi, record.winner))
                added += 1
    return added


def batch_tensors(batch: list[ReplaySample]) -> tuple[torch.Tensor, torch.Tensor, torch.Tensor]:
    x = torch.from_numpy(np.stack([s.planes for s in batch])).permute(0, 3, 1, 2).contiguous()
    pi = torch.from_numpy(np.stack([s.pi for s in batch]).astype(np.float32))
    z = torch.tensor([float(s.c_win) for s in batch], dtype=torch.float32)
    return x, pi, z


def loss_terms(logits: torch.Tensor, value: torch.Tensor, pi: torch.Tensor, z: torch.Tensor) -> torch.Tensor:
    mse = (z - value) ** 2
    cross_entropy = -(pi * torch.log_softmax(logits, dim=-1)).sum(dim=-1)
    return (mse + cross_entropy).mean()


class Trainer:
    """Owns the model, its optimizer, and the replay queue."""

    def __init__(self, variant: GameVariant, net_config: NetworkConfig, config: TrainConfig, seed: int = 0):
        self.variant = variant
        self.net_config = net_config
        self.config = config
        self.seed = seed
        torch.manual_seed(seed)
        self.model = PolicyValueNet(net_config)
        self.optimizer = torch.optim.SGD(
            self.model.parameters(),
            lr=config.learning_rate,
            momentum=config.momentum,
            weight_decay=config.weight_decay,
        )
        self.queue = ReplayQueue(config.n_queue)
        self.rng = np.random.default_rng(seed)
        self.iteration = 0

    def evaluator(self) -> NetworkEvaluator:
        return NetworkEvaluator(self.model)

    def train_step(self, batch: list[ReplaySample]) -> float:
        if not batch:
            raise ValueError("empty batch")
        x, pi, z = batch_tensors(batch)
        self.model.train()
        logits, value = self.model(x)
        loss = loss_terms(logits, value, pi, z)
        self.optimizer.zero_grad()
        loss.backward()
        self.optimizer.step()
        return float(loss.item())

    def learn(self) -> float:
        """n_epoch shuffled passes over the queue in n_batch-size chunks."""
        losses = []
        n = len(self.queue)
        if n == 0:
            raise ValueError("replay queue is empty")
        for _ in range(self.config.n_epoch):
            order = self.rng.permutation(n)
            for start in range(0, n, self.config.n_batch):
                batch = [self.queue[int(i)] for i in order[start : start + self.config.n_batch]]
                losses.append(self.train_step(batch))
        return float(np.mean(losses))

    def run_iteration(self) -> dict:
        records = self_play(self.evaluator(), self.variant, self.config, self.config.n_self, self.rng)
        added = augment_into_queue(records, self.queue)
        mean_loss = self.learn()
        self.iteration += 1
        return {
            "iteration": self.iteration,
            "games": len(records),
            "turns": sum(len(r.turns) for r in records),
            "samples_added": added,
            "queue_size": len(self.queue),
            "loss": mean_loss,
        }


def save_queue(path: Path, queue: ReplayQueue) -> None:
    n = len(queue)
    if n == 0:
        planes = np.zeros((0,), dtype=np.float32)
        pis = np.zeros((0,), dtype=np.float64)
        wins = np.zeros((0,), dtype=np.int8)
    else:
        planes = np.stack([s.planes for s in queue])
        pis = np.stack([s.pi for s in queue])
        wins = np.array([s.c_win for s in queue], dtype=np.int8)
    np.savez_compressed(path, planes=planes, pis=pis, wins=wins, capacity=queue.capacity)


def load_queue(path: Path) -> ReplayQueue:
    data = np.load(path)
    queue = ReplayQueue(int(data["capacity"]))
    for planes, pi, win in zip(data["planes"], data["pis"], data["wins"]):
        queue.add(ReplaySample(planes, pi, int(win)))
    return queue
