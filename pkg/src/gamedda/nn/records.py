"""Line-delimited game records: one JSON object per turn.

Each line holds the board in text form, the root search probabilities, the
final winner color, and optionally the difficulty-adjustment diagnostics
recorded on that turn.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from ..games.textboard import from_text, to_text
from .training import GameRecord, TurnRecord


def record_to_lines(record: GameRecord) -> list[str]:
    lines = []
    for turn in record.turns:
        obj = {
            "board": to_text(turn.state),
            "pi": [float(x) for x in turn.pi],
            "c_win": record.winner,
        }
        if turn.diagnostics is not None:
            obj["dda"] = turn.diagnostics
        lines.append(json.dumps(obj))
    return lines


def write_records(path: str | Path, records: list[GameRecord]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for record in records:
            for line in record_to_lines(record):
                f.write(line + "\n")
            f.write("\n")  # blank line separates games


def read_records(path: str | Path) -> list[GameRecord]:
    records: list[GameRecord] = []
    turns: list[TurnRecord] = []
    winner = 0
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.strip()
            if not line:
                if turns:
                    records.append(GameRecord(turns, winner))
                    turns = []
                continue
            obj = json.loads(line)
            state = from_text(obj["board"])
            pi = np.array(obj["pi"], dtype=np.float64)
            winner = int(obj["c_win"])
            turns.append(TurnRecord(state, pi, obj.get("dda")))
    if turns:
        records.append(GameRecord(turns, winner))
    return records
