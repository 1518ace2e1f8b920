from dataclasses import dataclass


@dataclass
class NonSymmetricMatrixError(ValueError):
    shape: tuple = None

    def __str__(self):
        msg = '\n'.join([
            'The given matrix should be square and symmetric. ',
            f'The shape of the given matrix: {self.shape}' if self.shape else ''
        ]).strip()
        return msg


@dataclass
class EmptySpectrumError(ValueError):
    def __str__(self):
        return 'The spectrum should contain at least one eigenvalue'


@dataclass
class EigenResidualError(ArithmeticError):
    residual: float
    tolerance: float

    def __str__(self):
        msg = '\n'.join([
            'The eigensolver did not reach the requested accuracy. ',
            f'Max residual |Mv - lv| = {self.residual:.3e} exceeds the tolerance {self.tolerance:.3e}'
        ]).strip()
        return msg


@dataclass
class SingleVertexGraphError(ValueError):
    quantity: str = 'gravity matrix'

    def __str__(self):
        return f'The {self.quantity} is undefined for a graph with a single vertex'


@dataclass
class IsolatedVertexError(ValueError):
    vertex: int

    def __str__(self):
        return f'The mean of neighbour degrees is undefined for the isolated vertex {self.vertex}'
