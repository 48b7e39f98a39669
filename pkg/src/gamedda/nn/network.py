"""Residual policy-value network with damage-mode dropout in the heads.

The body is a conv stem plus residual blocks; each head reduces with a 1x1
conv, runs one hidden fully-connected layer, and outputs tanh value /
policy logits. Dropout here is an inference-time damage mechanism: with
probability p each hidden head unit's output is zeroed, and survivors are
NOT rescaled by 1/(1-p), so larger p genuinely degrades the outputs.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

import torch
import torch.nn as nn
import torch.nn.functional as F

from ..games.encoding import plane_count
from ..games.types import VARIANTS, GameVariant

P_DROP_MAX = 0.95

_BLOCKS_BY_GAME = {"connect4": 2, "othello6": 2, "othello8": 5}


@dataclass(frozen=True)
class NetworkConfig:
    game: str
    rows: int
    cols: int
    action_count: int
    n_res_blocks: int
    n_filters: int = 256
    kernel_size: int = 3
    value_hidden: int = 256
    policy_hidden: int = 256

    @staticmethod
    def for_variant(variant: GameVariant, preset: str = "paper") -> "NetworkConfig":
        if preset == "paper":
            return NetworkConfig(
                game=variant.id,
                rows=variant.rows,
                cols=variant.cols,
                action_count=variant.action_count,
                n_res_blocks=_BLOCKS_BY_GAME[variant.id],
            )
        if preset == "desk":
            return NetworkConfig(
                game=variant.id,
                rows=variant.rows,
                cols=variant.cols,
                action_count=variant.action_count,
                n_res_blocks=2,
                n_filters=32,
                value_hidden=64,
                policy_hidden=64,
            )
        raise ValueError(f"unknown preset {preset!r}")

    def to_dict(self) -> dict:
        return asdict(self)

    @staticmethod
    def from_dict(d: dict) -> "NetworkConfig":
        return NetworkConfig(**d)

    @property
    def variant(self) -> GameVariant:
        return VARIANTS[self.game]


class ResidualBlock(nn.Module):
    def __init__(self, channels: int, kernel_size: int):
        super().__init__()
        pad = kernel_size // 2
        self.conv1 = nn.Conv2d(channels, channels, kernel_size, padding=pad, bias=False)
        self.bn1 = nn.BatchNorm2d(channels)
        self.conv2 = nn.Conv2d(channels, channels, kernel_size, padding=pad, bias=False)
        self.bn2 = nn.BatchNorm2d(channels)

    def forward(self, x):
        out = F.relu(self.bn1(self.conv1(x)))
        out = self.bn2(self.conv2(out))
        return F.relu(out + x)


def _damage(x: torch.Tensor, p_drop: float, generator: torch.Generator | None) -> torch.Tensor:
    """Zero each unit with probability p_drop, without rescaling survivors."""
    if p_drop <= 0.0:
        return x
    keep = torch.rand(x.shape, generator=generator, device=x.device) >= p_drop
    return x * keep.to(x.dtype)


class PolicyValueNet(nn.Module):
    def __init__(self, config: NetworkConfig):
        super().__init__()
        self.config = config
        pad = config.kernel_size // 2
        self.stem = nn.Conv2d(plane_count(), config.n_filters, config.kernel_size, padding=pad, bias=False)
        self.stem_bn = nn.BatchNorm2d(config.n_filters)
        self.blocks = nn.ModuleList(
            ResidualBlock(config.n_filters, config.kernel_size) for _ in range(config.n_res_blocks)
        )
        cells = config.rows * config.cols
        self.value_conv = nn.Conv2d(config.n_filters, 1, 1, bias=False)
        self.value_bn = nn.BatchNorm2d(1)
        self.value_fc = nn.Linear(cells, config.value_hidden)
        self.value_out = nn.Linear(config.value_hidden, 1)
        self.policy_conv = nn.Conv2d(config.n_filters, 2, 1, bias=False)
        self.policy_bn = nn.BatchNorm2d(2)
        self.policy_fc = nn.Linear(2 * cells, config.policy_hidden)
        self.policy_out = nn.Linear(config.policy_hidden, config.action_count)

    def forward(
        self,
        x: torch.Tensor,
        p_drop: float = 0.0,
        generator: torch.Generator | None = None,
    ) -> tuple[torch.Tensor, torch.Tensor]:
        """Returns (policy_logits, value) for a batch of plane stacks."""
        if not 0.0 <= p_drop <= P_DROP_MAX:
            raise ValueError(f"p_drop must be in [0, {P_DROP_MAX}], got {p_drop}")
        h = F.relu(self.stem_bn(self.stem(x)))
        for block in self.blocks:
            h = block(h)
        v = F.relu(self.value_bn(self.value_conv(h))).flatten(1)
        v = F.relu(self.value_fc(v))
        v = _damage(v, p_drop, generator)
        value = torch.tanh(self.value_out(v)).squeeze(-1)
        p = F.relu(self.policy_bn(self.policy_conv(h))).flatten(1)
        p = F.relu(self.policy_fc(p))
        p = _damage(p, p_drop, generator)
        logits = self.policy_out(p)
        return logits, value


def build_network(variant: GameVariant, preset: str = "paper", seed: int | None = None) -> PolicyValueNet:
    if seed is not None:
        torch.manual_seed(seed)
    return PolicyValueNet(NetworkConfig.for_variant(variant, preset))
