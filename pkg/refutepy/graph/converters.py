"""
This module provides a number of functions to read/write a Graph object from/to a file

The text format is the one used to publish counter-examples: comma-plus-space separated "u-v" pairs,
optionally preceded by an "Edges:" label, e.g. "Edges: 0-1, 1-2, 02-3"

"""
import json
import re

from refutepy.graph.graph import Graph
from refutepy.graph import graph_errors as gerrors

EDGE_TOKEN_PATTERN = re.compile(r'^\s*(\d+)\s*-\s*(\d+)\s*$')
EDGES_LABEL_PATTERN = re.compile(r'^\s*edges\s*:', flags=re.IGNORECASE)


def parse_edge_list(text: str) -> Graph:
    """Parse a Graph from the edge list ``text``

    Vertex labels may have leading zeros ("02-3" is read as "2-3").
    The graph has vertices 0..max-label. An empty list gives a single vertex graph.

    Parameters
    ----------
    text: `str`
        Edge list like "0-1, 1-2, 2-0"

    Returns
    -------
    graph: `Graph`

    Raises
    ------
    ParseEdgeListError
        If a token is malformed, an edge is repeated or an edge is a self-loop

    """
    text = EDGES_LABEL_PATTERN.sub('', text, count=1).strip()
    if not text:
        return Graph()

    edges, edges_seen = [], set()
    for token in text.split(','):
        match = EDGE_TOKEN_PATTERN.match(token)
        if match is None:
            raise gerrors.ParseEdgeListError(token.strip())

        u, v = int(match.group(1)), int(match.group(2))
        if u == v:
            raise gerrors.ParseEdgeListError(token.strip(), 'self-loop')
        if (min(u, v), max(u, v)) in edges_seen:
            raise gerrors.ParseEdgeListError(token.strip(), 'duplicate edge')

        edges_seen.add((min(u, v), max(u, v)))
        edges.append((u, v))

    n = max(max(u, v) for u, v in edges) + 1
    return Graph.from_edges(n, edges)


def read_edge_list(path=None, data=None) -> Graph:
    """Read Graph from an edge list file or from ``data`` attribute

    Parameters
    ----------
    path : `str`
        A path to requested edge list file
    data : `str`
        Edge list text (if it is already loaded into python)
    Returns
    -------
    graph : `Graph`
        The loaded Graph object

    """
    assert path is not None or data is not None, 'converters.read_edge_list error. Either path or data should be given'

    if data is None:
        with open(path, 'r') as f:
            data = f.read()
    return parse_edge_list(data)


def to_edge_list(g: Graph) -> str:
    """Return edges of ``g`` as "u-v" pairs with u < v sorted lexicographically and joined by ", " """
    return ', '.join(f"{u}-{v}" for u, v in g.edges)


def write_edge_list(g: Graph, path=None):
    """Write Graph object to the edge list file

    Parameters
    ----------
    g : `Graph`
        A graph to write to a file
    path : `str`
        A path to the file to write a Graph object
    Returns
    -------
    file_data : `str`
        The data from the edge list file. Returned if ``path`` is None

    """
    file_data = to_edge_list(g) + '\n'
    if path is None:
        return file_data

    with open(path, 'w', newline='\n') as f:
        f.write(file_data)


def to_dot(g: Graph, name: str = 'G') -> str:
    """Return ``g`` as an undirected graph in DOT language with default styling"""
    lines = [f'graph {name} {{']
    lines += [f'    {v};' for v in range(g.n)]
    lines += [f'    {u} -- {v};' for u, v in g.edges]
    lines.append('}')
    return '\n'.join(lines) + '\n'


def write_dot(g: Graph, path=None):
    """Write Graph object to the .dot file. Return the file data if ``path`` is None"""
    file_data = to_dot(g)
    if path is None:
        return file_data

    with open(path, 'w', newline='\n') as f:
        f.write(file_data)


def to_dict(g: Graph) -> dict:
    return {'n': g.n, 'edges': to_edge_list(g)}


def from_dict(data: dict) -> Graph:
    g = parse_edge_list(data['edges'])
    n = data.get('n', g.n)
    if n < g.n:
        raise ValueError(f'The number of vertices {n} is smaller than the max vertex label in the edge list')
    return Graph.from_edges(n, g.edges)


def write_json(g: Graph, path=None):
    """Write Graph object to the .json file. Return the file data if ``path`` is None"""
    file_data = json.dumps(to_dict(g))
    if path is None:
        return file_data

    with open(path, 'w', newline='\n') as f:
        f.write(file_data)


def read_json(path=None, data=None) -> Graph:
    """Read Graph from .json file or from ``data`` attribute"""
    assert path is not None or data is not None, 'converters.read_json error. Either path or data should be given'

    if data is None:
        with open(path, 'r') as f:
            data = f.read()
    return from_dict(json.loads(data))


def to_networkx(g: Graph):
    """Convert Graph ``g`` to networkx.Graph"""
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def from_networkx(G) -> Graph:
    """Convert networkx.Graph ``G`` with nodes 0..n-1 to Graph"""
    nodes = sorted(G.nodes)
    if nodes != list(range(len(nodes))):
        raise ValueError('Nodes of the networkx graph should be labeled 0..n-1')
    return Graph.from_edges(max(len(nodes), 1), G.edges)
