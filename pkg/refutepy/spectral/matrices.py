"""
This module builds the real symmetric matrices associated with a graph: adjacency, distance and gravity matrices

"""
import numpy as np
import numpy.typing as npt

from refutepy.graph import Graph
from refutepy.graph.graph_errors import DisconnectedGraphError
from refutepy.spectral import spectral_errors as serrors


def adjacency_matrix(g: Graph) -> npt.NDArray[float]:
    """Return the 0/1 adjacency matrix of ``g``"""
    return np.array([row.tolist() for row in g.rows], dtype=float)


def distance_matrix(g: Graph) -> npt.NDArray[float]:
    """Return the matrix of shortest path hop counts of a connected graph ``g``

    Raises
    ------
    DisconnectedGraphError
        If some pair of vertices is not joined by a path

    """
    m = np.array(g.distances, dtype=float)
    if not np.isfinite(m).all():
        raise DisconnectedGraphError('distance matrix')
    return m


def gravity_matrix(g: Graph) -> npt.NDArray[float]:
    """Return the gravity matrix of ``g``

    Entry (u, v) is d(u)*d(v) / ((n-1) * dist(u, v)) where d(.) is a degree.
    The diagonal and the entries of pairs not joined by a path are 0.

    Raises
    ------
    SingleVertexGraphError
        If ``g`` has a single vertex (n-1 = 0)

    """
    n = g.n
    if n < 2:
        raise serrors.SingleVertexGraphError('gravity matrix')

    dists = np.array(g.distances, dtype=float)
    degrees = np.array(g.degrees, dtype=float)
    reachable = np.isfinite(dists) & (dists > 0)
    return np.divide(np.outer(degrees, degrees), (n - 1) * dists, out=np.zeros((n, n)), where=reachable)
