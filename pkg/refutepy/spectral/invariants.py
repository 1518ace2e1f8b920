"""
This module contains degree and distance based graph invariants.
Invariants return None when their value is undefined for the given graph

"""
import math
from typing import Optional

from refutepy.graph import Graph
from refutepy.graph.graph_errors import DisconnectedGraphError
from refutepy.spectral import spectral_errors as serrors


def harmonic(g: Graph) -> float:
    """Return the harmonic index: the sum over edges uv of 2 / (d(u) + d(v)). Edgeless graphs give 0"""
    d = g.degrees
    return sum(2 / (d[u] + d[v]) for u, v in g.edges)


def randic_index(g: Graph) -> float:
    """Return the Randic index: the sum over edges uv of 1 / sqrt(d(u) * d(v))"""
    d = g.degrees
    return sum(1 / math.sqrt(d[u] * d[v]) for u, v in g.edges)


def inverse_even(g: Graph) -> Optional[float]:
    """Return the sum over vertices v of 1 / Ev(v)

    Ev(v) is the number of vertices at a positive even distance from v (v itself is not counted).

    Returns
    -------
    value: `float` or None
        None if some vertex has no vertex at a positive even distance

    Raises
    ------
    DisconnectedGraphError
        If ``g`` is not connected

    """
    if not g.is_connected():
        raise DisconnectedGraphError('Inverse Even')

    total = 0.0
    for dists in g.distances:
        n_even = sum(1 for d in dists if d > 0 and d % 2 == 0)
        if n_even == 0:
            return None
        total += 1 / n_even
    return total


def temperature_sum(g: Graph) -> float:
    """Return the sum of vertex temperatures d(v) / (n - d(v))"""
    n = g.n
    return sum(d / (n - d) for d in g.degrees)


def mean_of_neighbor_degree_means(g: Graph) -> float:
    """Return (1/n) * sum over v of the mean degree of the neighbours of v

    Raises
    ------
    IsolatedVertexError
        If some vertex has no neighbours

    """
    d = g.degrees
    total = 0.0
    for v in range(g.n):
        if d[v] == 0:
            raise serrors.IsolatedVertexError(v)
        total += sum(d[u] for u in g.neighbors(v)) / d[v]
    return total / g.n
