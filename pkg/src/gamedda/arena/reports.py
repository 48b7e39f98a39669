"""CSV report writers.

Schemas (also described in docs/formats.md):
  elo:   agent,rating
  match: opponent,n_games,win,loss,draw          (rates in [0,1])
  sweep: param,value,rating
  grid:  <param columns...>,objective,<per-opponent win/loss/draw columns>
  games: index,first,second,seed,winner,n_moves
"""

from __future__ import annotations

import csv
from pathlib import Path

from .elo import EloTable
from .tournament import GridSearchResult, MatchResult


def write_elo_csv(path: str | Path, table: EloTable) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["agent", "rating"])
        for name, rating in table.ranked():
            writer.writerow([name, f"{rating:.1f}"])


def write_match_csv(path: str | Path, results: list[MatchResult]) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["opponent", "n_games", "win", "loss", "draw"])
        for r in results:
            writer.writerow(
                [r.agent_b, r.n_games, f"{r.win_rate:.4f}", f"{r.loss_rate:.4f}", f"{r.draw_rate:.4f}"]
            )


def write_games_csv(path: str | Path, results: list[MatchResult]) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["index", "first", "second", "seed", "winner", "n_moves"])
        index = 0
        for r in results:
            for g in r.games:
                writer.writerow([index, g.first, g.second, g.seed, g.winner, len(g.moves)])
                index += 1


def write_sweep_csv(path: str | Path, param: str, rows: list[tuple[object, float]]) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["param", "value", "rating"])
        for value, rating in rows:
            writer.writerow([param, value, f"{rating:.1f}"])


def write_grid_csv(path: str | Path, result: GridSearchResult) -> None:
    if not result.cells:
        return
    param_names = list(result.cells[0].params)
    opponents = [r.agent_b for r in result.cells[0].per_opponent]
    header = param_names + ["objective"]
    for name in opponents:
        header += [f"{name}_win", f"{name}_loss", f"{name}_draw"]
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(header)
        for cell in result.cells:
            row = [cell.params[p] for p in param_names] + [f"{cell.objective:.4f}"]
            for series in cell.per_opponent:
                row += [f"{series.win_rate:.4f}", f"{series.loss_rate:.4f}", f"{series.draw_rate:.4f}"]
            writer.writerow(row)
