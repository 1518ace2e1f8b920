"""
This module runs a search algorithm chosen by its name on a conjecture chosen by its id

"""
from dataclasses import dataclass
from typing import Optional, Union

from frozendict import frozendict

from refutepy.graph import GraphClass
from refutepy.spectral import RangeDefinition
from refutepy.conjectures import Conjecture, get_conjecture, relaxed_class_search_wrapper
from refutepy.game import BestTracker, initial_state
from refutepy.algorithms.search_base import SearchParams, SearchOutcome
from refutepy.algorithms.nested_search import nmcs, lnmcs, nrpa
from refutepy.algorithms.tree_search import uct, rave, grave
from refutepy.algorithms.greedy_search import gbfs, beam

ALGORITHMS = frozendict({
    'nmcs': nmcs, 'lnmcs': lnmcs, 'nrpa': nrpa,
    'uct': uct, 'rave': rave, 'grave': grave,
    'gbfs': gbfs, 'beam': beam,
})


@dataclass
class UnknownAlgorithmError(ValueError):
    algorithm: str

    def __str__(self):
        return f'Algorithm "{self.algorithm}" is not supported.\n' \
               f'Possible values are: {", ".join(ALGORITHMS)}'


def prepare_conjecture(
        conjecture: Union[str, int, Conjecture],
        graph_class: Optional[GraphClass] = None, min_size: Optional[int] = None,
        range_definition: Optional[RangeDefinition] = None, relaxed_class: bool = False,
) -> Conjecture:
    """Return the conjecture with the given overrides applied (and wrapped for a relaxed class search)"""
    conj = conjecture if isinstance(conjecture, Conjecture) else get_conjecture(conjecture)
    if range_definition is not None and conj.range_definition is None:
        raise ValueError(f'Conjecture "{conj.id}" does not depend on a range definition')

    conj = conj.with_overrides(
        graph_class=GraphClass.parse(graph_class) if graph_class is not None else None,
        min_size=min_size,
        range_definition=RangeDefinition.parse(range_definition) if range_definition is not None else None,
    )
    return relaxed_class_search_wrapper(conj) if relaxed_class else conj


def run_search(
        algorithm: str,
        conjecture: Union[str, int, Conjecture],
        params: Optional[SearchParams] = None,
        target_size: Optional[int] = None,
        graph_class: Optional[GraphClass] = None,
        min_size: Optional[int] = None,
        range_definition: Optional[RangeDefinition] = None,
        relaxed_class: bool = False,
        tracker: Optional[BestTracker] = None,
) -> SearchOutcome:
    """Search for a counter-example of ``conjecture`` with the search algorithm ``algorithm``

    Parameters
    ----------
    algorithm: `str` in {'nmcs', 'lnmcs', 'nrpa', 'uct', 'rave', 'grave', 'gbfs', 'beam'}
    conjecture: `str` or `Conjecture`
        A conjecture or its id in the registry (e.g. "graffiti-197")
    params: `SearchParams`
        Hyperparameters, budget and seed. Defaults are used if not given
    target_size: `int`
        Number of vertices the construction may reach. ``conjecture.default_target`` if not given
    graph_class: `GraphClass`
        Overrides the class of graphs the conjecture is searched in
    min_size: `int`
        Overrides the smallest size of a counter-example
    range_definition: `RangeDefinition`
        Overrides the range definition of conjectures speaking of a spectrum range
    relaxed_class: `bool`
        Build any graphs and check the class of the conjecture only for counter-examples
    tracker: `BestTracker`
        Created from ``params`` if not given

    Returns
    -------
    outcome: `SearchOutcome`

    """
    if algorithm not in ALGORITHMS:
        raise UnknownAlgorithmError(algorithm)

    conj = prepare_conjecture(conjecture, graph_class, min_size, range_definition, relaxed_class)
    params = params if params is not None else SearchParams()
    target_size = target_size if target_size is not None else conj.default_target

    state = initial_state(target_size, conj.graph_class, conj.min_size)
    return ALGORITHMS[algorithm](state, conj, params, tracker)
