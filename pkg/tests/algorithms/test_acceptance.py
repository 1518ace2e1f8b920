"""Reproduction of the published refutations. These runs take minutes to hours and are marked as slow:
run them with ``pytest -m slow``"""
import pytest

from refutepy.conjectures import get_conjecture, is_counterexample
from refutepy.algorithms import SearchParams, run_search
from refutepy.algorithms.benchmark import PUBLISHED_TIMES

pytestmark = pytest.mark.slow


def desk_budget(conjecture_id: str, algorithm: str) -> float:
    """Ten times the published time with a 30 seconds floor"""
    return max(30, 10 * PUBLISHED_TIMES[(conjecture_id, algorithm)])


def refuted_in_some_seed(algorithm: str, conjecture_id: str, n_seeds: int = 10, **overrides) -> bool:
    budget = desk_budget(conjecture_id, algorithm)
    for seed in range(n_seeds):
        outcome = run_search(algorithm, conjecture_id, SearchParams(seed=seed, budget_seconds=budget, **overrides))
        if outcome.refuted:
            assert is_counterexample(get_conjecture(conjecture_id), outcome.best_graph, verify=True)
            return True
    return False


@pytest.mark.parametrize('algorithm,conjecture_id', [
    ('nrpa', 'graffiti-197'),
    ('nmcs', 'graffiti-301'),
    ('nmcs', 'graffiti-29'),
    ('grave', 'graffiti-30'),
    ('rave', 'graffiti-30'),
])
def test_stochastic_refutations(algorithm, conjecture_id):
    assert refuted_in_some_seed(algorithm, conjecture_id), f'{algorithm} failed to refute {conjecture_id}'


@pytest.mark.parametrize('conjecture_id', ['graffiti-289', 'graffiti-139'])
def test_gbfs_refutations(conjecture_id):
    outcome = run_search('gbfs', conjecture_id, SearchParams(budget_seconds=desk_budget(conjecture_id, 'gbfs')))
    assert outcome.refuted, f'gbfs failed to refute {conjecture_id}'
    assert outcome.n == get_conjecture(conjecture_id).default_target


def test_beam_width_10_graffiti_30():
    outcome = run_search('beam', 'graffiti-30', SearchParams(beam_width=10, budget_seconds=900))
    assert outcome.refuted,\
        'BEAM of width 10 should refute Graffiti 30 when edges may join any pair of vertices'
    assert outcome.n == 15
    assert outcome.best_score > 0.3


def test_beam_width_80_graffiti_30():
    outcome = run_search('beam', 'graffiti-30', SearchParams(beam_width=80, budget_seconds=900))
    assert outcome.refuted, 'BEAM of width 80 should refute Graffiti 30'


def test_lnmcs_reliability():
    n_refuted = sum(
        run_search('lnmcs', 'graffiti-29', SearchParams(lnmcs_level=4, seed=seed, budget_seconds=60)).refuted
        for seed in range(10)
    )
    assert n_refuted >= 7, f'LNMCS refuted Graffiti 29 only in {n_refuted} runs out of 10'


def test_gbfs_graffiti_137():
    outcome = run_search('gbfs', 'graffiti-137', SearchParams(budget_seconds=2 * 60 * 60))
    assert outcome.refuted, 'gbfs failed to refute Graffiti 137'
