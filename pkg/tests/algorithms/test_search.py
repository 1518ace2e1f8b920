import pytest

from refutepy.graph import Graph, GraphClass
from refutepy.spectral import RangeDefinition
from refutepy.conjectures import get_conjecture
from refutepy.conjectures import conjecture_errors as cerrors
from refutepy.game import initial_state
from refutepy.algorithms import ALGORITHMS, SearchParams, run_search, prepare_conjecture, UnknownAlgorithmError
from ..data_to_test import edges_conjecture, peaked_conjecture, RecordingTracker


def test_algorithms():
    assert set(ALGORITHMS) == {'nmcs', 'lnmcs', 'nrpa', 'uct', 'rave', 'grave', 'gbfs', 'beam'}
    for name, search in ALGORITHMS.items():
        assert search.algorithm_name == name
        assert search.is_stochastic == (name not in {'gbfs', 'beam'})


def test_prepare_conjecture():
    conj = prepare_conjecture('197', range_definition='distinct-count', min_size=5)
    assert conj.id == 'graffiti-197' and conj.min_size == 5
    assert conj.range_definition == RangeDefinition.DISTINCT_COUNT

    conj = prepare_conjecture('graffiti-301', relaxed_class=True)
    assert conj.graph_class == GraphClass.ANY and conj.counterexample_class == GraphClass.TREE

    conj = prepare_conjecture('graffiti-289', graph_class='triangle-free')
    assert conj.graph_class == GraphClass.TRIANGLE_FREE

    with pytest.raises(ValueError):
        prepare_conjecture('graffiti-29', range_definition='diff')
    with pytest.raises(cerrors.UnknownConjectureError):
        prepare_conjecture('graffiti-2')


def test_run_search_errors():
    with pytest.raises(UnknownAlgorithmError) as excinfo:
        run_search('dfs', 'graffiti-197')
    assert 'nrpa' in str(excinfo.value), 'UnknownAlgorithmError should list the supported algorithms'
    with pytest.raises(cerrors.UnknownConjectureError):
        run_search('gbfs', 'graffiti-2')


def test_run_search_graffiti_322():
    outcome = run_search('gbfs', 'graffiti-322', target_size=4, range_definition='distinct-count')
    assert outcome.refuted, 'GBFS should refute Graffiti 322 with DistinctCount range definition on 4 vertices'
    g = outcome.best_graph
    assert g.n == 4 and g.degrees == (2, 2, 2, 2), 'The only counter-example on 4 vertices is the square'
    assert (outcome.lhs, outcome.rhs) == (4, 3)
    assert outcome.target_size == 4 and outcome.graph_class == 'triangle-free'


@pytest.mark.parametrize('algorithm', sorted(ALGORITHMS))
def test_run_search_custom_conjecture(algorithm):
    outcome = run_search(algorithm, edges_conjecture(), SearchParams(seed=1, budget_seconds=60))
    assert outcome.refuted, f'{algorithm} failed to refute a conjecture refuted by any 5 vertex graph'
    assert outcome.target_size == 5, 'The default target of the conjecture should be used'
    assert outcome.best_graph != Graph()


@pytest.mark.parametrize('algorithm', sorted(ALGORITHMS))
def test_search_halts_on_counterexample(algorithm):
    conj = edges_conjecture()
    tracker = RecordingTracker()
    outcome = ALGORITHMS[algorithm](
        initial_state(5, conj.graph_class, conj.min_size), conj, SearchParams(seed=0), tracker)
    assert outcome.refuted
    assert tracker.evaluations == tracker.evaluations_at_counterexample,\
        f'{algorithm} failed. No state should be evaluated once a counter-example is found'


@pytest.mark.parametrize('algorithm', sorted(ALGORITHMS))
def test_search_halts_on_evaluation_budget(algorithm):
    conj = peaked_conjecture()
    tracker = RecordingTracker(max_evaluations=200)
    outcome = ALGORITHMS[algorithm](initial_state(6), conj, SearchParams(seed=0), tracker)
    assert not outcome.refuted
    assert tracker.evaluations == outcome.evaluations == 200,\
        f'{algorithm} failed. The search should stop right at the evaluation budget'
    assert all(a <= b for a, b in zip(tracker.best_scores, tracker.best_scores[1:])),\
        f'{algorithm} failed. The best score should never decrease during a run'
    assert tracker.best_scores[-1] == 0
