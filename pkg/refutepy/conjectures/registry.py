"""
This module contains the registry of conjectures available to the searches.
Built-in conjectures are Graffiti conjectures 29, 30, 137, 139, 197, 289, 301 and 322

Each built-in score function returns a pair ``(lhs, rhs)`` of the inequality "lhs <= rhs".

"""
from typing import List, Optional, Tuple, Union

from frozendict import frozendict

from refutepy.graph import Graph, GraphClass
from refutepy.spectral import (
    RangeDefinition, Sign, eigenvalues, spectrum_range, count_eigenvalues, positive_eigenvalue_scope,
    adjacency_matrix, distance_matrix, gravity_matrix,
    harmonic, randic_index, inverse_even, temperature_sum, mean_of_neighbor_degree_means,
)
from refutepy.conjectures.conjecture import Conjecture
from refutepy.conjectures import conjecture_errors as cerrors

Sides = Tuple[Optional[float], Optional[float]]


def graffiti_29(g: Graph, verify: bool = False) -> Sides:
    """Randic index <= number of negative adjacency eigenvalues"""
    spec = eigenvalues(adjacency_matrix(g), verify=verify)
    return randic_index(g), count_eigenvalues(spec, Sign.NEGATIVE)


def graffiti_30(g: Graph, verify: bool = False) -> Sides:
    """Number of positive distance eigenvalues <= sum of temperatures"""
    spec = eigenvalues(distance_matrix(g), verify=verify)
    return count_eigenvalues(spec, Sign.POSITIVE), temperature_sum(g)


def graffiti_137(g: Graph, verify: bool = False) -> Sides:
    """Second largest adjacency eigenvalue <= harmonic index"""
    spec = eigenvalues(adjacency_matrix(g), verify=verify)
    return spec.second_largest, harmonic(g)


def graffiti_139(g: Graph, verify: bool = False) -> Sides:
    """Minus the second smallest adjacency eigenvalue <= harmonic index"""
    spec = eigenvalues(adjacency_matrix(g), verify=verify)
    return -spec.second_smallest, harmonic(g)


def graffiti_197(g: Graph, range_definition: RangeDefinition = RangeDefinition.DIFF, verify: bool = False) -> Sides:
    """Minus the second smallest adjacency eigenvalue <= range of the gravity matrix eigenvalues"""
    spec = eigenvalues(adjacency_matrix(g), verify=verify)
    gravity_spec = eigenvalues(gravity_matrix(g), verify=verify)
    return -spec.second_smallest, spectrum_range(gravity_spec, range_definition)


def graffiti_289(g: Graph, verify: bool = False) -> Sides:
    """Second largest adjacency eigenvalue <= mean over vertices of the mean degree of their neighbours"""
    spec = eigenvalues(adjacency_matrix(g), verify=verify)
    return spec.second_largest, mean_of_neighbor_degree_means(g)


def graffiti_301(g: Graph, verify: bool = False) -> Sides:
    """Scope of positive adjacency eigenvalues <= harmonic index"""
    spec = eigenvalues(adjacency_matrix(g), verify=verify)
    return positive_eigenvalue_scope(spec), harmonic(g)


def graffiti_322(g: Graph, range_definition: RangeDefinition = RangeDefinition.DIFF, verify: bool = False) -> Sides:
    """Inverse Even <= range of the distance matrix eigenvalues"""
    spec = eigenvalues(distance_matrix(g), verify=verify)
    return inverse_even(g), spectrum_range(spec, range_definition)


BUILTIN_CONJECTURES = frozendict({conj.id: conj for conj in [
    Conjecture(
        id='graffiti-29', statement='randic index <= # negative eigenvalues',
        graph_class=GraphClass.ANY, min_size=7, score_func=graffiti_29, default_target=8),
    Conjecture(
        id='graffiti-30', statement='# positive distance eigenvalues <= sum of temperatures',
        graph_class=GraphClass.ANY, min_size=12, score_func=graffiti_30, default_target=15),
    Conjecture(
        id='graffiti-137', statement='second largest eigenvalue <= harmonic',
        graph_class=GraphClass.ANY, min_size=67, score_func=graffiti_137, default_target=67),
    Conjecture(
        id='graffiti-139', statement='- second smallest eigenvalue <= harmonic',
        graph_class=GraphClass.ANY, min_size=50, score_func=graffiti_139, default_target=50),
    Conjecture(
        id='graffiti-197', statement='- second smallest eigenvalue <= range of eigenvalues of gravity matrix',
        graph_class=GraphClass.TRIANGLE_FREE, min_size=17, score_func=graffiti_197, default_target=17,
        range_definition=RangeDefinition.DIFF),
    Conjecture(
        id='graffiti-289', statement='second largest eigenvalue <= mean of the mean of adjacent vertex degrees',
        graph_class=GraphClass.GIRTH_AT_LEAST_5, min_size=20, score_func=graffiti_289, default_target=20),
    Conjecture(
        id='graffiti-301', statement='scope of positive eigenvalues <= harmonic',
        graph_class=GraphClass.TREE, min_size=14, score_func=graffiti_301, default_target=14),
    Conjecture(
        id='graffiti-322', statement='inverse even <= range of eigenvalues of distance matrix',
        graph_class=GraphClass.TRIANGLE_FREE, min_size=4, score_func=graffiti_322, default_target=20,
        range_definition=RangeDefinition.DIFF),
]})

_registry = BUILTIN_CONJECTURES


def normalize_id(conjecture_id: Union[str, int]) -> str:
    """Turn "197", 197, "G197" or "Graffiti-197" into "graffiti-197". Other ids are returned unchanged"""
    value = str(conjecture_id).strip()
    lowered = value.lower()
    for prefix in ('graffiti-', 'graffiti', 'g'):
        if lowered.startswith(prefix) and lowered[len(prefix):].isdigit():
            return f"graffiti-{int(lowered[len(prefix):])}"
    if lowered.isdigit():
        return f"graffiti-{int(lowered)}"
    return value


def list_conjectures() -> List[Conjecture]:
    """Return all registered conjectures sorted by their Graffiti number (then by id)"""
    def sort_key(conj):
        return (0, int(conj.number), conj.id) if conj.number.isdigit() else (1, 0, conj.id)
    return sorted(_registry.values(), key=sort_key)


def get_conjecture(conjecture_id: Union[str, int]) -> Conjecture:
    """Return a registered conjecture by its id

    Raises
    ------
    UnknownConjectureError
        If no conjecture is registered under ``conjecture_id``

    """
    key = normalize_id(conjecture_id)
    if key not in _registry:
        raise cerrors.UnknownConjectureError(str(conjecture_id), tuple(c.id for c in list_conjectures()))
    return _registry[key]


def register_conjecture(conj: Conjecture, overwrite: bool = False) -> Conjecture:
    """Add a user defined conjecture ``conj`` to the registry

    Raises
    ------
    DuplicateConjectureError
        If a conjecture with the same id is registered and ``overwrite`` is False

    """
    global _registry
    if conj.id in _registry and not overwrite:
        raise cerrors.DuplicateConjectureError(conj.id)
    _registry = frozendict({**_registry, conj.id: conj})
    return conj


def unregister_conjecture(conjecture_id: str) -> None:
    """Remove a user defined conjecture from the registry. Built-in conjectures cannot be removed"""
    global _registry
    key = normalize_id(conjecture_id)
    if key in BUILTIN_CONJECTURES:
        raise ValueError(f'Built-in conjecture "{key}" cannot be unregistered')
    if key not in _registry:
        raise cerrors.UnknownConjectureError(key)
    _registry = frozendict({k: v for k, v in _registry.items() if k != key})
