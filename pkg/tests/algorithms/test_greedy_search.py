import math

import pytest

from refutepy.game import initial_state, replay
from refutepy.graph import Graph
from refutepy.algorithms import SearchParams, run_search
from refutepy.algorithms.greedy_search import gbfs, beam
from ..data_to_test import spectral_radius_conjecture, edges_conjecture, brute_force_best_score


@pytest.mark.parametrize('search', [gbfs, beam])
def test_best_score_brute_force(search):
    conj = spectral_radius_conjecture()
    outcome = search(initial_state(5, conj.graph_class, conj.min_size), conj, SearchParams())
    assert not outcome.refuted and outcome.seed is None
    assert outcome.best_score == pytest.approx(brute_force_best_score(conj, 5)),\
        f'{search.algorithm_name} failed. The best score should be the best score of the whole game'


@pytest.mark.parametrize('search', [gbfs, beam])
def test_determinism(search):
    conj = spectral_radius_conjecture()
    state = initial_state(5, conj.graph_class, conj.min_size)
    outcome1, outcome2 = search(state, conj, SearchParams()), search(state, conj, SearchParams())
    assert outcome1.move_history == outcome2.move_history and outcome1.evaluations == outcome2.evaluations,\
        f'{search.algorithm_name} failed. Deterministic searches should give the same outcome'


@pytest.mark.parametrize('search', [gbfs, beam])
def test_refutation(search):
    conj = edges_conjecture()
    outcome = search(initial_state(5, conj.graph_class, conj.min_size), conj, SearchParams(budget_seconds=60))
    assert outcome.refuted, f'{search.algorithm_name} failed to refute a conjecture refuted by any 5 vertex graph'
    assert replay(outcome.move_history, 5, conj.graph_class, conj.min_size).graph == outcome.best_graph


def test_gbfs_open_cap():
    conj = spectral_radius_conjecture()
    state = initial_state(5, conj.graph_class, conj.min_size)
    with pytest.warns(UserWarning, match='open list'):
        outcome = gbfs(state, conj, SearchParams(gbfs_open_cap=1))
    assert outcome.n_discarded > 0, 'gbfs failed. States beyond the open list cap should be discarded'


def test_beam_width():
    conj = spectral_radius_conjecture()
    state = initial_state(5, conj.graph_class, conj.min_size)
    narrow, wide = beam(state, conj, SearchParams(beam_width=1)), beam(state, conj, SearchParams(beam_width=10))
    assert narrow.evaluations < wide.evaluations, 'A narrow beam should evaluate less states'


def test_beam_graffiti_29_star():
    outcome = run_search('beam', 'graffiti-29', SearchParams(beam_width=10, budget_seconds=60))
    assert outcome.refuted, 'BEAM failed. The star K1,6 refutes Graffiti 29 with the classical Randic index'
    assert outcome.best_graph == Graph.star(6)
    assert outcome.best_score == pytest.approx(math.sqrt(6) - 1)
