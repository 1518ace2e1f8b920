import math

import numpy as np
import pytest

from refutepy.graph import GraphClass
from refutepy.conjectures import Conjecture
from refutepy.game import (
    Move, BestTracker, SearchHalted, initial_state, replay, random_playout, best_prefix_playout, move_probabilities,
)
from ..data_to_test import peaked_conjecture


def edges_vs_hundred(g):
    return float(g.n_edges), 100.0


NEVER_REFUTED = Conjecture(
    id='custom-never', statement='# edges <= 100', graph_class=GraphClass.ANY, min_size=2,
    score_func=edges_vs_hundred, default_target=6)


def test_move_probabilities():
    moves = [Move.attach(0), Move.attach(1)]
    assert move_probabilities(moves, {}, 3) == pytest.approx([0.5, 0.5]), 'Empty policy should give uniform choice'
    assert move_probabilities(moves, {0: math.log(3)}, 3) == pytest.approx([0.75, 0.25])
    assert move_probabilities(moves, {0: -math.inf}, 3) == pytest.approx([0, 1])
    assert move_probabilities(moves, {0: -math.inf, 1: -math.inf}, 3) == pytest.approx([0.5, 0.5])
    assert move_probabilities(moves, {1: math.inf}, 3) == pytest.approx([0, 1])
    assert move_probabilities(moves, {0: 1000, 1: 999}, 3).sum() == pytest.approx(1),\
        'move_probabilities failed. Large weights should not overflow'


@pytest.mark.parametrize('graph_class', list(GraphClass))
def test_random_playout(graph_class):
    for seed in range(10):
        tracker = BestTracker()
        s = initial_state(6, graph_class)
        score, moves = random_playout(s, NEVER_REFUTED, tracker, np.random.default_rng(seed))

        final = replay(moves, 6, graph_class)
        assert final.is_terminal, 'random_playout failed. The playout should end in a terminal state'
        assert score == final.graph.n_edges - 100
        assert tracker.evaluations == len(moves) + 1, 'Every visited state should be evaluated'

        score1, moves1 = random_playout(s, NEVER_REFUTED, BestTracker(), np.random.default_rng(seed))
        assert (score1, moves1) == (score, moves), 'random_playout failed. Seeded playouts should be reproducible'


def test_best_prefix_playout():
    conj = peaked_conjecture()
    for seed in range(10):
        s = initial_state(6)
        _, moves = random_playout(s, conj, BestTracker(), np.random.default_rng(seed))
        scores = [-math.inf] + [-(replay(moves[:i], 6).graph.n_edges - 2) ** 2 for i in range(1, len(moves) + 1)]
        best_idx = scores.index(max(scores))

        tracker = BestTracker()
        score, prefix = best_prefix_playout(s, conj, tracker, np.random.default_rng(seed))
        assert prefix == moves[:best_idx],\
            'best_prefix_playout failed. The sequence should stop at the first best visited state'
        assert score == max(scores)
        assert tracker.evaluations == len(moves) + 1, 'The whole playout should still be evaluated'


def test_random_playout_policy():
    s = replay([Move.attach(0)], 6)
    stop_code = Move.stop().code(6)
    score, moves = random_playout(
        s, NEVER_REFUTED, BestTracker(), np.random.default_rng(0), policy={stop_code: math.inf})
    assert moves == [Move.stop()], 'random_playout failed. Infinite weight should force the move'
    assert score == 1 - 100


def test_random_playout_halted():
    tracker = BestTracker(max_evaluations=2)
    with pytest.raises(SearchHalted):
        random_playout(initial_state(6), NEVER_REFUTED, tracker, np.random.default_rng(0))
    assert tracker.evaluations == 2
