"""
This module describes moves of the graph construction game and their integer codes

"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional


class MoveKind(str, Enum):
    ATTACH = 'attach'  # add a new vertex adjacent to an existing one
    ADD_EDGE = 'add-edge'  # add an edge between two existing vertices
    STOP = 'stop'  # declare the construction finished


@dataclass(frozen=True)
class Move:
    """One construction step

    ``u`` is the anchor of an ATTACH move, ``(u, v)`` with ``u < v`` are the endpoints of an ADD_EDGE move.
    """
    kind: MoveKind
    u: Optional[int] = None
    v: Optional[int] = None

    @classmethod
    def attach(cls, anchor: int) -> 'Move':
        return cls(MoveKind.ATTACH, anchor)

    @classmethod
    def add_edge(cls, u: int, v: int) -> 'Move':
        if u == v:
            raise ValueError(f'Cannot create a move adding the self-loop {u}-{v}')
        return cls(MoveKind.ADD_EDGE, min(u, v), max(u, v))

    @classmethod
    def stop(cls) -> 'Move':
        return cls(MoveKind.STOP)

    def code(self, target_size: int) -> int:
        """Return an integer code of the move that depends only on its kind and endpoints

        ATTACH(j) -> j; ADD_EDGE(u, v) -> T + u*T + v; STOP -> T*(T+1) where T is ``target_size``
        """
        if self.kind == MoveKind.ATTACH:
            return self.u
        if self.kind == MoveKind.ADD_EDGE:
            return target_size + self.u * target_size + self.v
        return target_size * (target_size + 1)

    def __str__(self):
        if self.kind == MoveKind.ATTACH:
            return f"attach({self.u})"
        if self.kind == MoveKind.ADD_EDGE:
            return f"edge({self.u}-{self.v})"
        return "stop"

    def to_dict(self) -> dict:
        return {'kind': self.kind.value, 'u': self.u, 'v': self.v}

    @classmethod
    def from_dict(cls, data: dict) -> 'Move':
        kind = MoveKind(data['kind'])
        if kind == MoveKind.ATTACH:
            return cls.attach(data['u'])
        if kind == MoveKind.ADD_EDGE:
            return cls.add_edge(data['u'], data['v'])
        return cls.stop()
