"""
This subpackage computes spectra of graph matrices and the graph invariants compared against them in conjectures.

Classes
-------
spectrum.Spectrum
spectrum.RangeDefinition
spectrum.Sign

Modules
-------
  spectrum:
    Symmetric eigenvalue computation, spectrum ranges and eigenvalue counts
  matrices:
    Adjacency, distance and gravity matrices of a graph
  invariants:
    Harmonic and Randic indices, Inverse Even, sum of temperatures, mean of neighbour degree means
  spectral_errors:
    Exceptions raised on undefined spectral quantities

"""

from .spectrum import (
    Spectrum, RangeDefinition, Sign,
    eigenvalues, spectrum_range, count_eigenvalues, positive_eigenvalue_scope,
)
from .matrices import adjacency_matrix, distance_matrix, gravity_matrix
from .invariants import harmonic, randic_index, inverse_even, temperature_sum, mean_of_neighbor_degree_means
