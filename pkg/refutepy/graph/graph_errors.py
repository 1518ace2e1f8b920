from dataclasses import dataclass


@dataclass
class VertexRangeError(IndexError):
    vertex: int
    n_vertices: int

    def __str__(self):
        msg = '\n'.join([
            f'Vertex {self.vertex} is out of range. ',
            f'The graph has {self.n_vertices} vertices labeled 0..{self.n_vertices - 1}'
        ]).strip()
        return msg


@dataclass
class SelfLoopError(ValueError):
    vertex: int

    def __str__(self):
        return f'Self-loops are not allowed in a simple graph. The problem is with the vertex {self.vertex}'


@dataclass
class ExistingEdgeError(ValueError):
    u: int
    v: int

    def __str__(self):
        return f'Edge {self.u}-{self.v} already exists. Multi-edges are not allowed in a simple graph'


@dataclass
class ParseEdgeListError(ValueError):
    token: str
    reason: str = 'malformed token'

    def __str__(self):
        msg = '\n'.join([
            f'Cannot parse the edge list: {self.reason}. ',
            f'The problem is with the token "{self.token}"'
        ]).strip()
        return msg


@dataclass
class DisconnectedGraphError(ValueError):
    quantity: str = 'distance matrix'

    def __str__(self):
        return f'The {self.quantity} is undefined for disconnected graphs'
