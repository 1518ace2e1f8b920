"""
This module provides a class Graph which represents an undirected simple graph built by the search game

"""
import math
from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from bitarray import bitarray, frozenbitarray as fbarray

from refutepy.graph import graph_errors as gerrors

UNREACHABLE = math.inf  # Distance between vertices of different connected components
Distance = Union[int, float]
DistanceTable = Tuple[Tuple[Distance, ...], ...]


class Graph:
    """An immutable undirected simple graph on the vertices 0..n-1

    Adjacency is stored as one frozenbitarray row per vertex.
    Every construction step (``add_vertex_attached``, ``add_edge``) returns a new Graph.

    Parameters
    ----------
    rows: `list` of `frozenbitarray` or `list` of `list` of `bool`
        Symmetric adjacency rows with False on the diagonal

    Examples
    --------
    >>> g = Graph.from_edges(3, [(0, 1), (1, 2)])
    >>> g.degrees
    (1, 2, 1)
    >>> g.add_edge(0, 2).edges
    [(0, 1), (0, 2), (1, 2)]

    """
    __slots__ = ('_rows', '_degrees', '_hash', '_distances')

    def __init__(self, rows: Sequence[Union[fbarray, Sequence[bool]]] = None):
        rows = [[False]] if rows is None else rows
        self._rows: Tuple[fbarray, ...] = tuple(fbarray(row) for row in rows)
        self._validate_rows(self._rows)
        self._degrees: Tuple[int, ...] = tuple(row.count() for row in self._rows)
        self._hash = None
        self._distances: Optional[DistanceTable] = None

    @staticmethod
    def _validate_rows(rows: Tuple[fbarray, ...]):
        n = len(rows)
        if n == 0:
            raise ValueError('Graph should contain at least one vertex')
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f'Adjacency row #{i} has length {len(row)}, should be {n}')
            if row[i]:
                raise gerrors.SelfLoopError(i)
        for i, row in enumerate(rows):
            for j in row.search(1):
                if not rows[j][i]:
                    raise ValueError(f'Adjacency is not symmetric: {i}-{j} is present but {j}-{i} is not')

    ##################
    # Construction #
    ##################
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        """Construct a graph on ``n`` vertices with the given ``edges``"""
        if n < 1:
            raise ValueError(f'Graph should contain at least one vertex. Given n={n}')
        rows = [bitarray(n) for _ in range(n)]
        for row in rows:
            row.setall(0)
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < n:
                    raise gerrors.VertexRangeError(x, n)
            if u == v:
                raise gerrors.SelfLoopError(u)
            if rows[u][v]:
                raise gerrors.ExistingEdgeError(min(u, v), max(u, v))
            rows[u][v] = rows[v][u] = 1
        return cls(rows)

    @classmethod
    def path(cls, n: int) -> 'Graph':
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> 'Graph':
        if n < 3:
            raise ValueError(f'A cycle should contain at least 3 vertices. Given n={n}')
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, n_leaves: int) -> 'Graph':
        return cls.from_edges(n_leaves + 1, [(0, i) for i in range(1, n_leaves + 1)])

    @classmethod
    def complete(cls, n: int) -> 'Graph':
        return cls.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    def add_vertex_attached(self, anchor: int) -> 'Graph':
        """Return a copy of the graph with a new vertex ``n`` adjacent only to ``anchor``

        Known distances are extended: the new vertex is one hop further than ``anchor`` from every vertex.
        """
        self._check_vertex(anchor)
        n = self.n
        rows = [row + bitarray([i == anchor]) for i, row in enumerate(self._rows)]
        new_row = bitarray(n + 1)
        new_row.setall(0)
        new_row[anchor] = 1
        rows.append(new_row)
        g = Graph(rows)

        if self._distances is not None:
            to_new = tuple(d + 1 for d in self._distances[anchor]) + (0,)
            g._distances = tuple(dists + (to_new[x],) for x, dists in enumerate(self._distances)) + (to_new,)
        return g

    def add_edge(self, u: int, v: int) -> 'Graph':
        """Return a copy of the graph with an extra edge ``u``-``v``

        Known distances are updated with the paths going through the new edge.
        """
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise gerrors.SelfLoopError(u)
        if self._rows[u][v]:
            raise gerrors.ExistingEdgeError(min(u, v), max(u, v))

        rows = list(self._rows)
        for a, b in [(u, v), (v, u)]:
            row = bitarray(rows[a])
            row[b] = 1
            rows[a] = row
        g = Graph(rows)

        if self._distances is not None:
            du, dv = self._distances[u], self._distances[v]
            g._distances = tuple(
                tuple(min(d_xy, du[x] + 1 + dv[y], dv[x] + 1 + du[y]) for y, d_xy in enumerate(dists))
                for x, dists in enumerate(self._distances)
            )
        return g

    def relabel(self, permutation: Sequence[int]) -> 'Graph':
        """Return an isomorphic graph where vertex ``i`` is renamed to ``permutation[i]``"""
        if sorted(permutation) != list(range(self.n)):
            raise ValueError(f'Given permutation {permutation} is not a permutation of 0..{self.n - 1}')
        return Graph.from_edges(self.n, [(permutation[u], permutation[v]) for u, v in self.edges])

    ################
    # Properties #
    ################
    @property
    def n(self) -> int:
        """The number of vertices"""
        return len(self._rows)

    @property
    def rows(self) -> Tuple[fbarray, ...]:
        return self._rows

    @property
    def degrees(self) -> Tuple[int, ...]:
        return self._degrees

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._degrees[v]

    def neighbors(self, v: int) -> List[int]:
        self._check_vertex(v)
        return list(self._rows[v].search(1))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._rows[u][v])

    @property
    def edges(self) -> List[Tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` sorted lexicographically"""
        return [(u, v) for u, row in enumerate(self._rows) for v in row.search(1) if u < v]

    @property
    def n_edges(self) -> int:
        return sum(self._degrees) // 2

    ###############
    # Distances #
    ###############
    def bfs_distances(self, source: int) -> List[Distance]:
        """Return the hop count from ``source`` to every vertex (``UNREACHABLE`` for other components)"""
        self._check_vertex(source)
        return self._bfs(source)

    def _bfs(self, source: int, skip_edge: Optional[Tuple[int, int]] = None) -> List[Distance]:
        dists: List[Distance] = [UNREACHABLE] * self.n
        dists[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in self._rows[u].search(1):
                if dists[v] != UNREACHABLE:
                    continue
                if skip_edge is not None and {u, v} == set(skip_edge):
                    continue
                dists[v] = dists[u] + 1
                queue.append(v)
        return dists

    @property
    def distances(self) -> DistanceTable:
        """All-pairs hop counts, computed once per graph

        A graph built by ``add_vertex_attached`` or ``add_edge`` from a graph with known distances
        gets its table without running any BFS.
        """
        if self._distances is None:
            self._distances = tuple(tuple(self._bfs(source)) for source in range(self.n))
        return self._distances

    def all_distances(self) -> List[List[Distance]]:
        """Return all-pairs hop counts as a fresh list of lists"""
        return [list(dists) for dists in self.distances]

    def is_connected(self) -> bool:
        return UNREACHABLE not in self._bfs(0)

    def girth(self) -> Distance:
        """Return the length of the shortest cycle (``UNREACHABLE`` for forests)

        For every edge u-v, the shortest cycle through it is the shortest u-v path avoiding that edge plus one.
        """
        best = UNREACHABLE
        for u, v in self.edges:
            best = min(best, self._bfs(u, skip_edge=(u, v))[v] + 1)
        return best

    ###########
    # Magic #
    ###########
    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise gerrors.VertexRangeError(v, self.n)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Graph(n={self.n}, n_edges={self.n_edges})"
