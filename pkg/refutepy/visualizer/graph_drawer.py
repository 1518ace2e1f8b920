"""
This module provides functions to draw a Graph with Networkx and Matplotlib packages

"""
import logging
from typing import Dict, Optional, Tuple

from refutepy.graph import Graph
from refutepy.graph.converters import to_networkx
from refutepy.utils.utils import get_not_none

logger = logging.getLogger(__name__)

Position = Dict[int, Tuple[float, float]]


def draw_graph(
        g: Graph, ax=None, pos: Optional[Position] = None, title: Optional[str] = None,
        node_color: Optional[str] = None, node_size: Optional[int] = None, edge_color: Optional[str] = None,
        flg_node_labels: bool = True, layout_seed: int = 0,
) -> Position:
    """Draw the graph ``g`` on the matplotlib ``ax``

    Parameters
    ----------
    g: `Graph`
        A graph to draw
    ax: `matplotlib.axes.Axes`
        Axes to draw on. A new figure is created if not given
    pos: `dict` of type {vertex: (x, y)}
        Positions of the vertices. Computed by networkx spring layout if not given
    title: `str`
        Title of the axes
    node_color: `str`
        Defaults to "lightblue"
    node_size: `int`
        Defaults to 300
    edge_color: `str`
        Defaults to "gray"
    flg_node_labels: `bool`
        Whether to print vertex labels
    layout_seed: `int`
        Seed of the spring layout. The same seed gives the same drawing

    Returns
    -------
    pos: `dict` of type {vertex: (x, y)}
        Positions of the drawn vertices

    """
    import networkx as nx

    if ax is None:
        import matplotlib.pyplot as plt
        _, ax = plt.subplots()

    G = to_networkx(g)
    if pos is None:
        pos = nx.spring_layout(G, seed=layout_seed)
    elif set(pos) != set(G.nodes):
        logger.warning('Positions are given not for all the vertices of the graph. They are recomputed')
        pos = nx.spring_layout(G, seed=layout_seed)

    nx.draw_networkx_edges(G, pos, ax=ax, edge_color=get_not_none(edge_color, 'gray'))
    nx.draw_networkx_nodes(
        G, pos, ax=ax, node_color=get_not_none(node_color, 'lightblue'), node_size=get_not_none(node_size, 300))
    if flg_node_labels:
        nx.draw_networkx_labels(G, pos, ax=ax, font_size=8)

    if title is not None:
        ax.set_title(title)
    for spine in ['right', 'top', 'left', 'bottom']:
        ax.spines[spine].set_visible(False)
    return pos


def save_graph_drawing(g: Graph, path: str, title: Optional[str] = None, **kwargs) -> Position:
    """Draw the graph ``g`` on a new figure and save the figure to ``path`` (format is given by the extension)"""
    from matplotlib.figure import Figure

    size = max(4.0, g.n / 4)
    fig = Figure(figsize=(size, size))
    ax = fig.subplots()
    pos = draw_graph(g, ax=ax, title=title, **kwargs)
    fig.savefig(path)
    logger.info('Drawing of a graph with %d vertices saved to %s', g.n, path)
    return pos
