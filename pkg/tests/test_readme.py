def test_verify_counterexample():
    from refutepy.graph import Graph
    from refutepy.conjectures import get_conjecture, score, is_counterexample

    conj = get_conjecture('graffiti-197')
    report = score(conj, Graph.cycle(17), verify=True)
    print(report)
    assert is_counterexample(conj, Graph.cycle(17), report=report)
    assert 1.9649 <= report.lhs <= 1.9669 and 1.7025 <= report.rhs <= 1.7045


def test_edge_lists():
    from refutepy.graph import parse_edge_list, to_edge_list

    g = parse_edge_list('Edges: 0-1, 1-2, 2-3, 3-0')
    assert to_edge_list(g) == '0-1, 0-3, 1-2, 2-3'


def test_search():
    from refutepy.algorithms import SearchParams, run_search

    outcome = run_search('gbfs', 'graffiti-322', SearchParams(budget_seconds=60),
                         target_size=4, range_definition='distinct-count')
    assert (outcome.refuted, outcome.best_graph.degrees, outcome.lhs, outcome.rhs) == (True, (2, 2, 2, 2), 4.0, 3.0)


def test_own_conjecture():
    from refutepy.graph import GraphClass
    from refutepy.conjectures import Conjecture, register_conjecture
    from refutepy.conjectures.registry import unregister_conjecture
    from refutepy.algorithms import SearchParams, run_search

    def max_degree_vs_diameter(g):
        distances = g.all_distances()
        return max(g.degrees), max(max(row) for row in distances)

    register_conjecture(Conjecture(
        id='max-degree', statement='max degree <= diameter', graph_class=GraphClass.TREE,
        min_size=4, score_func=max_degree_vs_diameter, default_target=6), overwrite=True)
    try:
        outcome = run_search('beam', 'max-degree', SearchParams(budget_seconds=60))
        assert outcome.refuted
        assert max(outcome.best_graph.degrees) == 3 and outcome.n == 4
    finally:
        unregister_conjecture('max-degree')
