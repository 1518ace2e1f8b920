"""
This module computes spectra of real symmetric matrices and the spectral quantities used in conjectures:
ranges, counts of signed eigenvalues, the scope of positive eigenvalues

"""
from enum import Enum
from typing import Optional, Sequence, Union

import numpy as np
import numpy.typing as npt

from refutepy.spectral import spectral_errors as serrors

SYMMETRY_TOLERANCE = 1e-12
VERIFY_RESIDUAL_TOLERANCE = 1e-12
DISTINCT_MERGE_TOLERANCE = 1e-6
ZERO_TOLERANCE = 1e-9


class RangeDefinition(str, Enum):
    """How a "range" of a spectrum is measured"""
    DIFF = 'diff'  # the largest eigenvalue minus the smallest one
    DISTINCT_COUNT = 'distinct-count'  # the number of distinct eigenvalues

    @classmethod
    def parse(cls, value) -> 'RangeDefinition':
        if isinstance(value, cls):
            return value
        value = str(value).strip().lower().replace('_', '-')
        for rd in cls:
            if value in {rd.value, rd.name.lower().replace('_', '-'), rd.value.replace('-', '')}:
                return rd
        raise ValueError(f'Unknown range definition "{value}". Possible values are: {[rd.value for rd in cls]}')


class Sign(str, Enum):
    POSITIVE = 'positive'
    NEGATIVE = 'negative'


class Spectrum:
    """Real eigenvalues of a symmetric matrix sorted descending (l1 >= l2 >= ... >= ln)

    Parameters
    ----------
    values: `Sequence` of `float`
        Eigenvalues in any order
    matrix_norm: `float`
        Infinity norm of the matrix the eigenvalues were computed from. Used to scale tolerances

    """
    def __init__(self, values: Union[Sequence[float], npt.NDArray], matrix_norm: Optional[float] = None):
        values = np.sort(np.asarray(values, dtype=float))[::-1].copy()
        values.flags.writeable = False
        self._values = values
        self._matrix_norm = float(matrix_norm) if matrix_norm is not None else self.norm

    @property
    def values(self) -> npt.NDArray:
        return self._values

    @property
    def matrix_norm(self) -> float:
        return self._matrix_norm

    @property
    def norm(self) -> float:
        """The largest absolute eigenvalue (0 for an empty spectrum)"""
        return float(np.abs(self._values).max()) if len(self._values) else 0.0

    @property
    def largest(self) -> float:
        return float(self._values[0])

    @property
    def smallest(self) -> float:
        return float(self._values[-1])

    @property
    def second_largest(self) -> Optional[float]:
        """The eigenvalue l2. None for spectra with less than two values"""
        return float(self._values[1]) if len(self._values) > 1 else None

    @property
    def second_smallest(self) -> Optional[float]:
        """The eigenvalue l_{n-1}. None for spectra with less than two values"""
        return float(self._values[-2]) if len(self._values) > 1 else None

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(self._values.tolist())

    def __getitem__(self, item):
        return self._values[item]

    def __repr__(self):
        return f"Spectrum({np.array2string(self._values, precision=4)})"


def matrix_inf_norm(m: npt.NDArray) -> float:
    """Return the max absolute row sum of ``m``"""
    return float(np.abs(m).sum(axis=1).max()) if m.size else 0.0


def check_symmetric(m) -> npt.NDArray[float]:
    """Return ``m`` as a float numpy array. Raise NonSymmetricMatrixError if ``m`` is not square and symmetric"""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise serrors.NonSymmetricMatrixError(m.shape)
    if not np.all(np.isfinite(m)):
        raise ValueError('The given matrix should contain only finite entries')
    tol = SYMMETRY_TOLERANCE * max(1.0, matrix_inf_norm(m))
    if not np.allclose(m, m.T, rtol=0, atol=tol):
        raise serrors.NonSymmetricMatrixError(m.shape)
    return m


def eigenvalues(m, verify: bool = False) -> Spectrum:
    """Compute the full spectrum of a real symmetric matrix ``m``

    LAPACK symmetric eigensolver is used (Householder tridiagonalization followed by implicit QL/QR iterations).

    Parameters
    ----------
    m: `numpy.ndarray` or `list` of `list` of `float`
        A real symmetric matrix of order n >= 1
    verify: `bool`
        If True, compute eigenvectors too and check that every eigenpair has the residual
        ||m v - l v|| <= 1e-12 * max(1, ||m||_inf)

    Returns
    -------
    spectrum: `Spectrum`

    Raises
    ------
    NonSymmetricMatrixError
        If ``m`` is not square or not symmetric
    EigenResidualError
        If ``verify`` is True and the residual check fails

    """
    m = check_symmetric(m)
    norm = matrix_inf_norm(m)

    if not verify:
        return Spectrum(np.linalg.eigvalsh(m), matrix_norm=norm)

    vals, vecs = np.linalg.eigh(m)
    residual = float(np.linalg.norm(m @ vecs - vecs * vals, axis=0).max())
    tol = VERIFY_RESIDUAL_TOLERANCE * max(1.0, norm)
    if residual > tol:
        raise serrors.EigenResidualError(residual, tol)
    return Spectrum(vals, matrix_norm=norm)


def spectrum_range(s: Spectrum, definition: RangeDefinition = RangeDefinition.DIFF) -> float:
    """Return the "range" of the spectrum ``s``

    Parameters
    ----------
    s: `Spectrum`
    definition: `RangeDefinition`
        DIFF: the difference l1 - ln.
        DISTINCT_COUNT: the number of distinct eigenvalues,
        where values closer than 1e-6 * max(1, ||s||_inf) are merged together

    Returns
    -------
    value: `float`

    """
    if len(s) == 0:
        raise serrors.EmptySpectrumError()

    definition = RangeDefinition.parse(definition)
    if definition == RangeDefinition.DIFF:
        return s.largest - s.smallest

    tol = DISTINCT_MERGE_TOLERANCE * max(1.0, s.norm)
    gaps = -np.diff(s.values)
    return float(1 + np.count_nonzero(gaps >= tol))


def default_zero_tolerance(s: Spectrum) -> float:
    return ZERO_TOLERANCE * max(1.0, s.matrix_norm)


def count_eigenvalues(s: Spectrum, sign: Sign, zero_tolerance: Optional[float] = None) -> int:
    """Count eigenvalues strictly above ``zero_tolerance`` (POSITIVE) or strictly below ``-zero_tolerance`` (NEGATIVE)

    By default ``zero_tolerance`` is 1e-9 * max(1, ||m||_inf)
    """
    if zero_tolerance is None:
        zero_tolerance = default_zero_tolerance(s)
    if zero_tolerance < 0:
        raise ValueError(f'Zero tolerance should be non-negative. Given: {zero_tolerance}')

    sign = Sign(sign)
    if sign == Sign.POSITIVE:
        return int(np.count_nonzero(s.values > zero_tolerance))
    return int(np.count_nonzero(s.values < -zero_tolerance))


def positive_eigenvalue_scope(s: Spectrum, zero_tolerance: Optional[float] = None) -> Optional[float]:
    """Return the largest positive eigenvalue minus the smallest positive one. None if there is no positive value"""
    if zero_tolerance is None:
        zero_tolerance = default_zero_tolerance(s)
    positive = s.values[s.values > zero_tolerance]
    if len(positive) == 0:
        return None
    return float(positive[0] - positive[-1])
