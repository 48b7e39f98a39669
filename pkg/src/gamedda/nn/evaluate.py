"""Evaluator wrappers turning a network (or a heuristic) into the search
protocol: evaluate_state(state) -> value in [-1, 1] + policy distribution.

Values are in absolute disc-color space: +1 means the first player is
expected to win.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import torch

from ..games.encoding import encode_planes, plane_count
from ..games.types import BoardState, GameVariant
from .network import P_DROP_MAX, PolicyValueNet


@dataclass(frozen=True)
class EvalResult:
    value: float
    policy: np.ndarray


class NetworkEvaluator:
    """Runs a policy-value network in inference mode.

    With p_drop=0 the output is deterministic given the weights. With
    p_drop>0 each call draws fresh damage masks from this evaluator's
    generator (or from rng_seed when given), so damaged outputs are
    reproducible under a fixed seed.
    """

    def __init__(self, model: PolicyValueNet, dropout_seed: int | None = None):
        self.model = model
        self.variant: GameVariant = model.config.variant
        self._generator = torch.Generator()
        self._generator.manual_seed(dropout_seed if dropout_seed is not None else 0)

    def reseed_dropout(self, seed: int) -> None:
        self._generator.manual_seed(int(seed))

    def evaluate(self, planes: np.ndarray, p_drop: float = 0.0, rng_seed: int | None = None) -> EvalResult:
        expected = (self.variant.rows, self.variant.cols, plane_count())
        if planes.shape != expected:
            raise ValueError(f"encoding shape {planes.shape} != {expected}")
        if not 0.0 <= p_drop <= P_DROP_MAX:
            raise ValueError(f"p_drop must be in [0, {P_DROP_MAX}], got {p_drop}")
        generator = self._generator
        if rng_seed is not None:
            generator = torch.Generator()
            generator.manual_seed(int(rng_seed))
        x = torch.from_numpy(np.ascontiguousarray(planes, dtype=np.float32)).permute(2, 0, 1).unsqueeze(0)
        self.model.eval()
        with torch.no_grad():
            logits, value = self.model(x, p_drop=p_drop, generator=generator)
            policy = torch.softmax(logits[0], dim=-1).numpy().astype(np.float64)
        return EvalResult(float(value.item()), policy)

    def evaluate_state(self, state: BoardState, p_drop: float = 0.0, rng_seed: int | None = None) -> EvalResult:
        return self.evaluate(encode_planes([state], state.to_move), p_drop=p_drop, rng_seed=rng_seed)
