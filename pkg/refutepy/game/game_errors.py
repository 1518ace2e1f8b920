from dataclasses import dataclass


@dataclass
class IllegalMoveError(ValueError):
    move: str
    reason: str = 'the move is not among the legal moves of the state'

    def __str__(self):
        return f'Cannot apply the move {self.move}: {self.reason}'
