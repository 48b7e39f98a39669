"""Rolling record of root values observed at the adjusting agent's turns."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


def mean_value(values: Sequence[float], n_h: int) -> float:
    """Mean of the last n_h entries; all entries when fewer exist; 0 when
    the history is empty."""
    if n_h < 1:
        raise ValueError("n_h must be >= 1")
    if not values:
        return 0.0
    tail = values[-n_h:]
    return float(sum(tail) / len(tail))


@dataclass
class ValueHistory:
    """Root values v_n at the agent's own decision points, oldest first."""

    color: int
    values: list[float] = field(default_factory=list)

    def append(self, value: float) -> None:
        if not -1.0 <= value <= 1.0:
            raise ValueError(f"value {value} outside [-1, 1]")
        self.values.append(float(value))

    def mean(self, n_h: int) -> float:
        return mean_value(self.values, n_h)

    def __len__(self) -> int:
        return len(self.values)
