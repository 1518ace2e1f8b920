"""
This module describes the classes of graphs a search may build: any graph, triangle-free graphs,
graphs of girth at least 5 and trees

"""
from enum import Enum

from refutepy.graph.graph import Graph, UNREACHABLE


class GraphClass(str, Enum):
    ANY = 'any'
    TRIANGLE_FREE = 'triangle-free'
    GIRTH_AT_LEAST_5 = 'girth5'
    TREE = 'tree'

    @classmethod
    def parse(cls, value) -> 'GraphClass':
        """Return a GraphClass by its value (e.g. 'tree') or its name (e.g. 'TREE')"""
        if isinstance(value, cls):
            return value
        value = str(value).strip()
        for gc in cls:
            if value.lower() in {gc.value, gc.name.lower()}:
                return gc
        raise ValueError(f'Unknown graph class "{value}". Possible values are: {[gc.value for gc in cls]}')


# The shortest cycle closed by a new edge u-v has length dist(u, v) + 1
MIN_DISTANCE_FOR_NEW_EDGE = {
    GraphClass.ANY: 1,
    GraphClass.TRIANGLE_FREE: 3,
    GraphClass.GIRTH_AT_LEAST_5: 4,
}


def edge_is_class_legal(g: Graph, u: int, v: int, graph_class: GraphClass) -> bool:
    """Return True if the graph ``g`` plus the edge ``u``-``v`` still belongs to ``graph_class``

    Parameters
    ----------
    g: `Graph`
        A graph already belonging to ``graph_class``
    u, v: `int`
        Endpoints of a new edge (distinct, not adjacent in ``g``)
    graph_class: `GraphClass`

    Returns
    -------
    flg: `bool`

    """
    if graph_class == GraphClass.TREE:
        return False
    if graph_class == GraphClass.ANY:
        return True
    return g.distances[u][v] >= MIN_DISTANCE_FOR_NEW_EDGE[graph_class]


def graph_in_class(g: Graph, graph_class: GraphClass) -> bool:
    """Return True if the whole graph ``g`` belongs to ``graph_class``"""
    if graph_class == GraphClass.ANY:
        return True
    if graph_class == GraphClass.TREE:
        return g.n_edges == g.n - 1 and g.is_connected()

    girth = g.girth()
    if girth == UNREACHABLE:
        return True
    return girth >= MIN_DISTANCE_FOR_NEW_EDGE[graph_class] + 1
