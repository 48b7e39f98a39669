import numpy as np
import pytest

from gamedda import games
from gamedda.games import CONNECT4, OTHELLO8, from_text, to_text

from conftest import random_midgame_state


def test_round_trip(rng):
    for variant in (CONNECT4, OTHELLO8):
        state = random_midgame_state(variant, rng)
        recovered = from_text(to_text(state))
        assert np.array_equal(recovered.cells, state.cells)
        assert recovered.to_move == state.to_move
        assert recovered.turn_index == state.turn_index
        assert recovered.variant.id == state.variant.id


def test_header_format():
    state = games.new_game(CONNECT4)
    assert to_text(state).splitlines()[0] == "connect4 1 0"


def test_bad_inputs_rejected():
    with pytest.raises(ValueError):
        from_text("")
    with pytest.raises(ValueError):
        from_text("nosuchgame 1 0\n.......")
    with pytest.raises(ValueError):
        from_text("connect4 2 0\n" + "\n".join(["......."] * 6))
    with pytest.raises(ValueError):
        from_text("connect4 1 0\n" + "\n".join(["......."] * 5))
    with pytest.raises(ValueError):
        from_text("connect4 1 0\n" + "\n".join(["???????"] * 6))
