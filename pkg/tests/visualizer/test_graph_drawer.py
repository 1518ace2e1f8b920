import logging
import os

import pytest
from matplotlib.figure import Figure

from refutepy.graph import Graph
from refutepy.visualizer import draw_graph, save_graph_drawing


def test_draw_graph():
    g = Graph.cycle(5)
    ax = Figure().subplots()
    pos = draw_graph(g, ax=ax, title='C5')
    assert set(pos) == set(range(5)), 'draw_graph failed. Every vertex should get a position'
    assert ax.get_title() == 'C5'

    pos1 = draw_graph(g, ax=Figure().subplots())
    assert all(tuple(pos[v]) == pytest.approx(tuple(pos1[v])) for v in pos),\
        'draw_graph failed. The same layout seed should give the same drawing'

    pos2 = draw_graph(g, ax=Figure().subplots(), pos=pos, flg_node_labels=False, node_color='red')
    assert pos2 is pos, 'draw_graph failed. Given positions should be used as is'


def test_draw_graph_partial_positions(caplog):
    g = Graph.path(3)
    with caplog.at_level(logging.WARNING):
        pos = draw_graph(g, ax=Figure().subplots(), pos={0: (0, 0), 1: (1, 0)})
    assert set(pos) == {0, 1, 2}
    assert 'not for all the vertices' in caplog.text


def test_save_graph_drawing(tmp_path):
    path = os.path.join(tmp_path, 'star.png')
    pos = save_graph_drawing(Graph.star(4), path, title='star')
    assert os.path.isfile(path) and os.path.getsize(path) > 0, 'save_graph_drawing failed'
    assert len(pos) == 5
