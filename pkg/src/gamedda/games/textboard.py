"""Plain-text board format used by fixtures, records, and the wire schema.

Layout: a header line "variant to_move turn_index", then one line per row,
one character per cell: '.' empty, 'X' first player, 'O' second player.
"""

from __future__ import annotations

import numpy as np

from .types import VARIANTS, BoardState, freeze_cells

_CHARS = {0: ".", 1: "X", -1: "O"}
_VALUES = {v: k for k, v in _CHARS.items()}


def to_text(state: BoardState) -> str:
    header = f"{state.variant.id} {state.to_move} {state.turn_index}"
    rows = ["".join(_CHARS[int(v)] for v in row) for row in state.cells]
    return "\n".join([header] + rows)


def from_text(text: str) -> BoardState:
    lines = [ln for ln in text.strip().splitlines()]
    if not lines:
        raise ValueError("empty board text")
    fields = lines[0].split()
    if len(fields) != 3:
        raise ValueError(f"bad header {lines[0]!r}")
    variant_id, to_move_s, turn_s = fields
    if variant_id not in VARIANTS:
        raise ValueError(f"unknown variant {variant_id!r}")
    variant = VARIANTS[variant_id]
    to_move = int(to_move_s)
    if to_move not in (1, -1):
        raise ValueError(f"bad to_move {to_move}")
    body = lines[1:]
    if len(body) != variant.rows or any(len(ln) != variant.cols for ln in body):
        raise ValueError(f"board must be {variant.rows}x{variant.cols}")
    bad = {ch for ln in body for ch in ln} - set(_VALUES)
    if bad:
        raise ValueError(f"bad cell characters {sorted(bad)!r}")
    cells = np.array([[_VALUES[ch] for ch in ln] for ln in body], dtype=np.int8)
    return BoardState(variant, freeze_cells(cells), to_move, int(turn_s))
