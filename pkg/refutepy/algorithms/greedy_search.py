"""
This module contains the deterministic searches: Greedy Best First Search (GBFS) and BEAM search.
Ties are broken in favour of the state generated earlier

"""
import heapq
import itertools
import logging
import warnings
from typing import List, Tuple

import numpy as np

from refutepy.conjectures import Conjecture
from refutepy.game import BuildState, BestTracker, apply
from refutepy.algorithms.search_base import SearchParams, search_algorithm, evaluate_or_halt

logger = logging.getLogger(__name__)

OpenEntry = Tuple[float, int, BuildState]  # (-score, insertion order, state)


def _trim_open_list(open_list: List[OpenEntry], cap: int, tracker: BestTracker) -> List[OpenEntry]:
    """Keep the ``cap`` best entries of ``open_list``"""
    n_discarded = len(open_list) - cap
    if tracker.n_discarded == 0:
        warnings.warn(f'GBFS open list exceeded {cap} states. The worst states are discarded')
    logger.warning('GBFS open list trimmed to %d states, %d states discarded', cap, n_discarded)
    tracker.n_discarded += n_discarded

    open_list = heapq.nsmallest(cap, open_list)
    heapq.heapify(open_list)
    return open_list


@search_algorithm('gbfs', stochastic=False, restartable=False)
def gbfs(state: BuildState, conj: Conjecture, params: SearchParams, tracker: BestTracker, rng: np.random.Generator):
    """Greedy Best First Search

    The open list starts with ``state``. The best scoring state is popped, all its children are evaluated
    and pushed to the open list. The search runs until a counter-example is found, the open list is empty
    or the budget is exhausted. Beyond ``params.gbfs_open_cap`` states the worst ones are discarded.

    Parameters
    ----------
    state: `BuildState`
    conj: `Conjecture`
    params: `SearchParams`
        Uses ``gbfs_open_cap``, ``budget_seconds``
    tracker: `BestTracker`

    Returns
    -------
    outcome: `SearchOutcome`

    """
    counter = itertools.count()
    open_list: List[OpenEntry] = [(-evaluate_or_halt(state, conj, tracker), next(counter), state)]

    while open_list:
        _, _, s = heapq.heappop(open_list)
        for m in s.moves:
            child = apply(s, m)
            child_score = evaluate_or_halt(child, conj, tracker)
            if not child.is_terminal:
                heapq.heappush(open_list, (-child_score, next(counter), child))

        if len(open_list) > params.gbfs_open_cap:
            open_list = _trim_open_list(open_list, params.gbfs_open_cap, tracker)


@search_algorithm('beam', stochastic=False, restartable=False)
def beam(state: BuildState, conj: Conjecture, params: SearchParams, tracker: BestTracker, rng: np.random.Generator):
    """BEAM search

    Level by level: all children of the states in the beam are evaluated
    and the ``params.beam_width`` best non-terminal children form the next beam.

    Parameters
    ----------
    state: `BuildState`
    conj: `Conjecture`
    params: `SearchParams`
        Uses ``beam_width``, ``budget_seconds``
    tracker: `BestTracker`

    Returns
    -------
    outcome: `SearchOutcome`

    """
    evaluate_or_halt(state, conj, tracker)
    current_beam = [state] if not state.is_terminal else []
    while current_beam:
        counter = itertools.count()
        children = []
        for s in current_beam:
            for m in s.moves:
                child = apply(s, m)
                child_score = evaluate_or_halt(child, conj, tracker)
                if not child.is_terminal:
                    children.append((-child_score, next(counter), child))

        current_beam = [child for _, _, child in heapq.nsmallest(params.beam_width, children)]
