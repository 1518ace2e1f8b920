"""
This module implements the graph construction game.

A game starts from a single vertex. A move either attaches a new vertex to an existing one,
adds an edge keeping the graph inside its class, or stops the construction.
Attaching vertices keeps the graph connected, so every reachable graph is connected.

"""
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import FrozenSet, Iterable, List, Tuple

from refutepy.graph import Graph, GraphClass
from refutepy.graph.graph_class import MIN_DISTANCE_FOR_NEW_EDGE
from refutepy.game.moves import Move, MoveKind
from refutepy.game import game_errors as gmerrors


@dataclass(frozen=True, eq=False)
class BuildState:
    """A partial graph together with the construction metadata. A node of the search tree

    Parameters
    ----------
    graph: `Graph`
        The graph built so far
    target_size: `int`
        The number of vertices the construction may reach
    graph_class: `GraphClass`
        The class the graph stays in at every step
    min_size: `int`
        The number of vertices from which the construction may be stopped
    history: `tuple` of `Move`
        Moves played from the single vertex graph
    stopped: `bool`
        Whether the STOP move was played

    """
    graph: Graph
    target_size: int
    graph_class: GraphClass
    min_size: int = 2
    history: Tuple[Move, ...] = field(default_factory=tuple)
    stopped: bool = False

    @cached_property
    def edge_moves(self) -> List[Move]:
        """Class-legal ADD_EDGE moves in lexicographic order"""
        if self.stopped or self.graph_class == GraphClass.TREE:
            return []

        g = self.graph
        if self.graph_class == GraphClass.ANY:
            return [Move.add_edge(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.rows[u][v]]

        min_dist = MIN_DISTANCE_FOR_NEW_EDGE[self.graph_class]
        dists = g.distances
        return [Move.add_edge(u, v) for u in range(g.n) for v in range(u + 1, g.n) if dists[u][v] >= min_dist]

    @cached_property
    def moves(self) -> List[Move]:
        """Legal moves in the order: STOP, ATTACH by anchor, ADD_EDGE lexicographic"""
        if self.is_terminal:
            return []

        n = self.graph.n
        moves = [Move.stop()] if n >= self.min_size else []
        if n < self.target_size:
            moves += [Move.attach(j) for j in range(n)]
        return moves + self.edge_moves

    @cached_property
    def moves_set(self) -> FrozenSet[Move]:
        return frozenset(self.moves)

    @cached_property
    def is_terminal(self) -> bool:
        """True if STOP was played or the graph reached the target size and no edge can be added"""
        return self.stopped or (self.graph.n >= self.target_size and not self.edge_moves)

    @property
    def n(self) -> int:
        return self.graph.n

    def __repr__(self):
        return f"BuildState(n={self.graph.n}/{self.target_size}, n_edges={self.graph.n_edges}, " \
               f"class={self.graph_class.value}, moves_played={len(self.history)}, stopped={self.stopped})"


def initial_state(target_size: int, graph_class: GraphClass = GraphClass.ANY, min_size: int = 2) -> BuildState:
    """Return the state with the single vertex graph and empty history

    Parameters
    ----------
    target_size: `int`
        The number of vertices the construction may reach (>= 1)
    graph_class: `GraphClass`
    min_size: `int`
        The number of vertices from which STOP becomes legal

    """
    if target_size < 1:
        raise ValueError(f'Target size should be positive. Given: {target_size}')
    if min_size < 1:
        raise ValueError(f'Min size should be positive. Given: {min_size}')
    return BuildState(graph=Graph(), target_size=target_size, graph_class=GraphClass.parse(graph_class),
                      min_size=min_size)


def legal_moves(s: BuildState) -> List[Move]:
    """Return the legal moves of ``s`` (no moves for a terminal state)"""
    return list(s.moves)


def is_terminal(s: BuildState) -> bool:
    return s.is_terminal


def apply(s: BuildState, m: Move) -> BuildState:
    """Return the state obtained by playing the move ``m`` in ``s``

    Raises
    ------
    IllegalMoveError
        If ``m`` is not a legal move of ``s``

    """
    if m not in s.moves_set:
        reason = 'the state is terminal' if s.is_terminal else 'the move is not among the legal moves of the state'
        raise gmerrors.IllegalMoveError(str(m), reason)

    history = s.history + (m,)
    if m.kind == MoveKind.STOP:
        return replace(s, history=history, stopped=True)
    if m.kind == MoveKind.ATTACH:
        return replace(s, graph=s.graph.add_vertex_attached(m.u), history=history)
    return replace(s, graph=s.graph.add_edge(m.u, m.v), history=history)


def replay(
        moves: Iterable[Move], target_size: int,
        graph_class: GraphClass = GraphClass.ANY, min_size: int = 2
) -> BuildState:
    """Rebuild a state by playing ``moves`` from the initial state"""
    s = initial_state(target_size, graph_class, min_size)
    for m in moves:
        s = apply(s, m)
    return s

