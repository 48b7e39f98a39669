import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gamedda import games


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_game_states(variant, rng, max_plies=None):
    """States visited during one uniformly random game, including terminal."""
    state = games.new_game(variant)
    states = [state]
    while games.outcome(state) is None:
        moves = games.valid_moves(state)
        state = games.apply_move(state, moves[rng.integers(len(moves))])
        states.append(state)
        if max_plies is not None and len(states) > max_plies:
            break
    return states


def random_midgame_state(variant, rng, plies_range=(4, 16), require_nonterminal=True):
    """A position from a random game prefix; retries until non-terminal."""
    while True:
        state = games.new_game(variant)
        plies = int(rng.integers(plies_range[0], plies_range[1] + 1))
        ok = True
        for _ in range(plies):
            if games.outcome(state) is not None:
                ok = False
                break
            moves = games.valid_moves(state)
            state = games.apply_move(state, moves[rng.integers(len(moves))])
        if not ok:
            continue
        if require_nonterminal and games.outcome(state) is not None:
            continue
        return state
