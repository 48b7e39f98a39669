import json

import numpy as np

from gamedda import games
from gamedda.games import CONNECT4
from gamedda.nn.heuristic import HeuristicEvaluator
from gamedda.nn.records import read_records, write_records
from gamedda.nn.training import self_play, train_config


def test_records_round_trip(tmp_path, rng):
    cfg = train_config(CONNECT4, "desk")
    records = self_play(HeuristicEvaluator(), CONNECT4, cfg, 2, rng)
    records[0].turns[0].diagnostics = {"v_n": 0.1, "v_bar": 0.05, "n_sim": 12}
    path = tmp_path / "games.jsonl"
    write_records(path, records)

    loaded = read_records(path)
    assert len(loaded) == 2
    for orig, back in zip(records, loaded):
        assert back.winner == orig.winner
        assert len(back.turns) == len(orig.turns)
        for a, b in zip(orig.turns, back.turns):
            assert np.array_equal(a.state.cells, b.state.cells)
            assert a.state.to_move == b.state.to_move
            assert np.allclose(a.pi, b.pi)
    assert loaded[0].turns[0].diagnostics == {"v_n": 0.1, "v_bar": 0.05, "n_sim": 12}
    assert loaded[0].turns[1].diagnostics is None


def test_record_lines_are_json_objects(tmp_path, rng):
    cfg = train_config(CONNECT4, "desk")
    records = self_play(HeuristicEvaluator(), CONNECT4, cfg, 1, rng)
    path = tmp_path / "games.jsonl"
    write_records(path, records)
    for line in path.read_text().splitlines():
        if not line:
            continue
        obj = json.loads(line)
        assert set(obj) >= {"board", "pi", "c_win"}
        assert obj["board"].startswith("connect4 ")
