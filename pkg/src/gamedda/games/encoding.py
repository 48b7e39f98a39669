"""Network input encoding and symmetry augmentation.

The encoding is a rows x cols x (2T+1) stack: T occupancy planes for the
first player, T for the second, then one plane holding the mover's color.
T is 1 for every supported game.
"""

from __future__ import annotations

import numpy as np

from .types import BoardState, freeze_cells

HISTORY_LEN = 1


def encode_planes(history: list[BoardState], to_move: int) -> np.ndarray:
    if len(history) != HISTORY_LEN:
        raise ValueError(f"history must hold exactly {HISTORY_LEN} state(s), got {len(history)}")
    planes = [(s.cells == 1) for s in history]
    planes += [(s.cells == -1) for s in history]
    planes.append(np.full(history[0].cells.shape, to_move, dtype=np.float32))
    return np.stack(planes, axis=-1).astype(np.float32)


def plane_count() -> int:
    return 2 * HISTORY_LEN + 1


def _square_ops():
    """The 8 symmetries of a square board: 4 rotations x optional transpose."""
    ops = []
    for k in range(4):
        ops.append(lambda a, k=k: np.rot90(a, k))
        ops.append(lambda a, k=k: np.rot90(a, k).T)
    return ops


def symmetries(state: BoardState, policy: np.ndarray) -> list[tuple[BoardState, np.ndarray]]:
    """All rule-preserving images of (board, policy).

    Connect4 has 2 (identity + horizontal mirror); the Othello boards have
    8. Policy entries travel with their cells; the pass entry stays put.
    """
    variant = state.variant
    policy = np.asarray(policy, dtype=np.float64)
    if policy.shape != (variant.action_count,):
        raise ValueError(f"policy must have length {variant.action_count}")
    out: list[tuple[BoardState, np.ndarray]] = []
    if variant.id == "connect4":
        for op in (lambda a: a, np.fliplr):
            cells = freeze_cells(op(state.cells))
            pol = op(policy[None, :])[0].copy()
            out.append((BoardState(variant, cells, state.to_move, state.turn_index), pol))
        return out
    grid = policy[:-1].reshape(variant.rows, variant.cols)
    for op in _square_ops():
        cells = freeze_cells(op(state.cells))
        pol = np.concatenate([op(grid).reshape(-1), policy[-1:]])
        out.append((BoardState(variant, cells, state.to_move, state.turn_index), pol))
    return out
