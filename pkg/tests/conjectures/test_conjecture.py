import math

import pytest

from refutepy.graph import Graph, GraphClass
from refutepy.graph.converters import read_edge_list
from refutepy.spectral import RangeDefinition, inverse_even
from refutepy.conjectures import (
    Conjecture, ScoreReport, score, is_counterexample, relaxed_class_search_wrapper, get_conjecture,
    list_conjectures,
)
from ..data_to_test import published_counterexamples, data_path


def always_violated(g):
    return 1.0, 0.0


def never_defined(g):
    return None, 0.0


def nan_sides(g):
    return math.nan, 0.0


def n_vertices_vs_range(g, range_definition=RangeDefinition.DIFF):
    return float(g.n), 3.0 if range_definition == RangeDefinition.DIFF else 100.0


def test_conjecture_init():
    conj = Conjecture(
        id='custom-1', statement='1 <= 0', graph_class=GraphClass.TREE, min_size=2,
        score_func=always_violated, default_target=5)
    assert conj.counterexample_class == GraphClass.TREE
    assert conj.number == '1'
    assert 'custom-1' in repr(conj)

    with pytest.raises(ValueError):
        Conjecture(
            id='custom-1', statement='1 <= 0', graph_class=GraphClass.TREE, min_size=1,
            score_func=always_violated, default_target=5)
    with pytest.raises(ValueError):
        Conjecture(
            id='custom-1', statement='1 <= 0', graph_class=GraphClass.TREE, min_size=2,
            score_func=always_violated, default_target=0)


def test_with_overrides():
    conj = get_conjecture('graffiti-197')
    conj1 = conj.with_overrides(min_size=None, range_definition=RangeDefinition.DISTINCT_COUNT)
    assert conj1.min_size == conj.min_size, 'Conjecture.with_overrides failed. None values should be ignored'
    assert conj1.range_definition == RangeDefinition.DISTINCT_COUNT
    assert conj.range_definition == RangeDefinition.DIFF, 'Conjecture.with_overrides should not modify the original'


def test_score_report():
    report = ScoreReport.from_sides(2, 0.5)
    assert report.defined and report.score == 1.5
    report = ScoreReport.from_sides(None, 0.5)
    assert not report.defined and report.score == -math.inf
    assert ScoreReport.undefined().score == -math.inf


def test_score_undefined():
    conj = get_conjecture('graffiti-29')
    assert not score(conj, Graph()).defined, 'score failed. Single vertex graph should give undefined score'
    assert not score(conj, Graph.from_edges(3, [(0, 1)])).defined,\
        'score failed. Disconnected graph should give undefined score'

    for func in [never_defined, nan_sides]:
        conj = Conjecture(
            id='custom-1', statement='?', graph_class=GraphClass.ANY, min_size=2, score_func=func, default_target=5)
        report = score(conj, Graph.path(3))
        assert not report.defined and report.score == -math.inf
        assert not is_counterexample(conj, Graph.path(3)),\
            'is_counterexample failed. Undefined scores never refute a conjecture'


def test_score_range_definition():
    conj = Conjecture(
        id='custom-range', statement='n <= range', graph_class=GraphClass.ANY, min_size=2,
        score_func=n_vertices_vs_range, default_target=5, range_definition=RangeDefinition.DISTINCT_COUNT)
    assert score(conj, Graph.path(4)).rhs == 100, 'score failed. Conjecture range definition should be passed'
    assert score(conj, Graph.path(4), range_definition=RangeDefinition.DIFF).rhs == 3,\
        'score failed. range_definition argument should override the conjecture one'


def test_is_counterexample_thresholds():
    conj = Conjecture(
        id='custom-1', statement='1 <= 0', graph_class=GraphClass.TREE, min_size=4,
        score_func=always_violated, default_target=5)
    assert not is_counterexample(conj, Graph.path(3)), 'is_counterexample failed. Graph is smaller than min_size'
    assert is_counterexample(conj, Graph.path(4))
    assert not is_counterexample(conj, Graph.cycle(4)), 'is_counterexample failed. Graph is outside the class'
    assert not is_counterexample(conj, Graph.path(4), violation_epsilon=2),\
        'is_counterexample failed. Violation should exceed the epsilon'

    report = ScoreReport.from_sides(0, 1)
    assert not is_counterexample(conj, Graph.path(4), report=report),\
        'is_counterexample failed. Precomputed report should be used'


def test_relaxed_class_search_wrapper():
    conj = Conjecture(
        id='custom-1', statement='1 <= 0', graph_class=GraphClass.TREE, min_size=2,
        score_func=always_violated, default_target=5)
    relaxed = relaxed_class_search_wrapper(conj)
    assert relaxed.graph_class == GraphClass.ANY
    assert relaxed.counterexample_class == GraphClass.TREE
    assert not is_counterexample(relaxed, Graph.cycle(4)),\
        'relaxed_class_search_wrapper failed. Counter-examples should still belong to the original class'
    assert is_counterexample(relaxed, Graph.path(3))


@pytest.mark.parametrize('g', [Graph.path(2), Graph.path(3)])
def test_tiny_graphs_hold(g):
    for conj in list_conjectures():
        score(conj, g)
        assert not is_counterexample(conj, g), f'{g} should not refute {conj.id}'


def test_graffiti_197_cycle_17():
    conj = get_conjecture('graffiti-197')
    report = score(conj, Graph.cycle(17), verify=True)
    assert 1.9649 <= report.lhs <= 1.9669, 'Graffiti 197 failed. -λ_{n-1} of C17 should be about 1.9659'
    assert 1.7025 <= report.rhs <= 1.7045, 'Graffiti 197 failed. Gravity range of C17 should be about 1.7035'
    assert is_counterexample(conj, Graph.cycle(17), report=report)


def test_graffiti_197_cycles():
    conj = get_conjecture('graffiti-197')
    for n in [17, 21, 25]:
        assert is_counterexample(conj, Graph.cycle(n), verify=True), f'C{n} should refute Graffiti 197'

    report = score(conj, Graph.cycle(16))
    assert report.score > 0 and not is_counterexample(conj, Graph.cycle(16)),\
        'C16 violates the inequality of Graffiti 197 but is smaller than its min_size'

    # Even cycles above the min_size violate the inequality as well
    for n in [18, 19, 20]:
        assert is_counterexample(conj, Graph.cycle(n))
    assert score(conj, Graph.cycle(18)).lhs == pytest.approx(2 * math.cos(math.pi / 9))


def test_graffiti_29_stars():
    conj = get_conjecture('graffiti-29')
    for k in range(2, 10):
        report = score(conj, Graph.star(k), verify=True)
        assert report.lhs == pytest.approx(math.sqrt(k)) and report.rhs == 1,\
            'Graffiti 29 failed. The star K1,k has Randic index sqrt(k) and a single negative eigenvalue'
        assert report.score == pytest.approx(math.sqrt(k) - 1)
        assert is_counterexample(conj, Graph.star(k)) == (k + 1 >= conj.min_size),\
            'Every star large enough for the min_size of Graffiti 29 refutes it'

    report = score(conj, Graph.star(6))
    assert report.score == pytest.approx(1.449, abs=1e-3)


def test_graffiti_322_square():
    conj = get_conjecture('graffiti-322')
    c4 = Graph.cycle(4)
    assert inverse_even(c4) == 4

    report = score(conj, c4, range_definition=RangeDefinition.DISTINCT_COUNT)
    assert report.lhs == 4 and report.rhs == 3,\
        'Graffiti 322 failed. C4 has Inverse Even 4 and 3 distinct distance eigenvalues'
    assert is_counterexample(conj.with_overrides(range_definition=RangeDefinition.DISTINCT_COUNT), c4)
    assert not is_counterexample(conj, c4), 'Graffiti 322 should hold on C4 with Diff range definition'
    assert score(conj, c4).rhs == pytest.approx(6)


def test_published_counterexamples(published_counterexamples):
    for conj_id, (path, n, graph_class) in published_counterexamples.items():
        conj = get_conjecture(conj_id)
        g = read_edge_list(path)
        assert conj.graph_class == graph_class
        report = score(conj, g, verify=True)
        assert report.defined and report.score > 0, f'Published counter-example of {conj_id} should violate it'
        assert is_counterexample(conj, g, report=report),\
            f'Published counter-example of {conj_id} should be accepted as a refutation'


def test_published_counterexample_values():
    report = score(get_conjecture('graffiti-301'), read_edge_list(data_path(301)))
    assert report.rhs == pytest.approx(2.5018, abs=1e-4), 'Harmonic index of the Graffiti 301 counter-example'
    assert report.lhs == pytest.approx(2.523, abs=1e-3)

    report = score(get_conjecture('graffiti-289'), read_edge_list(data_path(289)))
    assert report.rhs == pytest.approx(2.15)
