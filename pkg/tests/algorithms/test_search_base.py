import math

import pytest

from refutepy.graph import Graph
from refutepy.game import Move, initial_state, replay
from refutepy.algorithms import SearchParams, SearchOutcome
from refutepy.algorithms.search_base import resolve_seed
from refutepy.algorithms.nested_search import nmcs, nrpa
from refutepy.algorithms.greedy_search import gbfs
from ..data_to_test import spectral_radius_conjecture


def test_search_params():
    params = SearchParams()
    assert (params.nmcs_level, params.lnmcs_level, params.lnmcs_playouts, params.lnmcs_ratio) == (3, 4, 3, 0.8)
    assert (params.uct_constant, params.rave_ref, params.rave_bias) == (1.0, 5, 1e-5)
    assert (params.beam_width, params.nrpa_level, params.nrpa_iterations, params.nrpa_alpha) == (10, 3, 100, 1.0)
    assert params.budget_seconds == 900, 'SearchParams failed. Default budget is 15 minutes'
    assert params.seed is None and params.restarts

    params1 = params.with_overrides(beam_width=80, seed=None)
    assert params1.beam_width == 80 and params.beam_width == 10
    assert params1.to_dict()['beam_width'] == 80
    assert set(params1.to_dict()) == set(SearchParams.__dataclass_fields__)

    for kwargs in [{'beam_width': 0}, {'lnmcs_ratio': 1.5}, {'budget_seconds': 0}, {'seed': -1}]:
        with pytest.raises(ValueError):
            SearchParams(**kwargs)


def test_resolve_seed():
    assert resolve_seed(5) == 5
    seed = resolve_seed(None)
    assert isinstance(seed, int) and 0 <= seed < 2 ** 63


def test_search_algorithm_attributes():
    assert nmcs.algorithm_name == 'nmcs' and nmcs.is_stochastic
    assert gbfs.algorithm_name == 'gbfs' and not gbfs.is_stochastic


def test_outcome_dict():
    outcome = SearchOutcome(
        algorithm='gbfs', conjecture_id='graffiti-197', best_graph=Graph.from_edges(3, [(0, 1), (1, 2)]),
        best_score=0.5, lhs=1.5, rhs=1.0, refuted=False, elapsed_seconds=0.25, evaluations=7,
        move_history=(Move.attach(0), Move.attach(1)), seed=None, target_size=5, graph_class='any',
    )
    data = outcome.to_dict()
    assert data['edges'] == '0-1, 1-2' and data['n'] == 3
    assert data['move_history'] == [{'kind': 'attach', 'u': 0, 'v': None}, {'kind': 'attach', 'u': 1, 'v': None}]
    assert SearchOutcome.from_dict(data) == outcome, 'SearchOutcome.from_dict failed'

    outcome.best_score, outcome.lhs = -math.inf, None
    assert outcome.to_dict()['best_score'] is None, 'Non-finite scores should be written as None'


def test_outcome_of_search():
    conj = spectral_radius_conjecture()
    outcome = nmcs(initial_state(5, conj.graph_class, conj.min_size), conj,
                   SearchParams(seed=3, restarts=False))
    assert outcome.algorithm == 'nmcs' and outcome.seed == 3 and not outcome.refuted
    assert outcome.time_to_refutation is None
    assert replay(outcome.move_history, 5, conj.graph_class, conj.min_size).graph == outcome.best_graph,\
        'The move history of the outcome should rebuild its graph'
    assert outcome.best_score == pytest.approx(outcome.lhs - outcome.rhs)


def test_seed_reproducibility():
    conj = spectral_radius_conjecture()
    state = initial_state(5, conj.graph_class, conj.min_size)
    params = SearchParams(seed=11, max_evaluations=300, nrpa_level=2, nrpa_iterations=10)
    outcome1, outcome2 = nrpa(state, conj, params), nrpa(state, conj, params)
    assert outcome1.move_history == outcome2.move_history, 'Seeded searches should be reproducible'
    assert outcome1.evaluations == outcome2.evaluations == 300


def test_budget():
    conj = spectral_radius_conjecture()
    state = initial_state(5, conj.graph_class, conj.min_size)

    outcome = nmcs(state, conj, SearchParams(max_evaluations=10, seed=0))
    assert outcome.evaluations == 10, 'The search should stop right after the evaluation budget is exhausted'

    outcome = nmcs(state, conj, SearchParams(budget_seconds=1e-9, seed=0))
    assert outcome.evaluations == 1 and not outcome.refuted,\
        'The search should stop right after the time budget is exhausted'
