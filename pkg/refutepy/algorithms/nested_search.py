"""
This module contains nested Monte Carlo searches: NMCS, its lazy variant LNMCS and NRPA.

A nested search of level L plays a game move by move. Before each move it runs searches of level L-1
from the children states and commits to the first move of the best sequence found so far.
Level 0 is a random playout.

"""
import math
from typing import Dict, List, Sequence, Tuple

import numpy as np

from refutepy.conjectures import Conjecture
from refutepy.game import (
    BuildState, BestTracker, Move, apply, random_playout, best_prefix_playout, move_probabilities,
)
from refutepy.algorithms.search_base import SearchParams, search_algorithm

Sequence_ = Tuple[float, List[Move]]  # (score of the sequence, moves played)
Policy = Dict[int, float]


def _nested(
        state: BuildState, level: int, conj: Conjecture, tracker: BestTracker, rng: np.random.Generator,
        children_to_search=None,
) -> Sequence_:
    if level == 0 or state.is_terminal:
        return random_playout(state, conj, tracker, rng)

    best_score, best_seq = -math.inf, None
    played: List[Move] = []
    while not state.is_terminal:
        moves = state.moves
        children = [apply(state, m) for m in moves]

        to_search = range(len(moves))
        if children_to_search is not None:
            pre_score, pre_seq, to_search = children_to_search(children, moves)
            if best_seq is None or pre_score > best_score:
                best_score, best_seq = pre_score, played + pre_seq

        for i in to_search:
            score, seq = _nested(children[i], level - 1, conj, tracker, rng, children_to_search)
            if best_seq is None or score > best_score:
                best_score, best_seq = score, played + [moves[i]] + seq

        m = best_seq[len(played)]
        state = apply(state, m)
        played.append(m)

    return best_score, played


@search_algorithm('nmcs')
def nmcs(state: BuildState, conj: Conjecture, params: SearchParams, tracker: BestTracker, rng: np.random.Generator):
    """Nested Monte Carlo Search of level ``params.nmcs_level``

    Level 0 is a random playout. At level L every legal move is tried with a level L-1 search
    and the first move of the best sequence found so far is played, until a terminal state is reached.

    Parameters
    ----------
    state: `BuildState`
        The state to start from
    conj: `Conjecture`
        The conjecture to refute
    params: `SearchParams`
        Uses ``nmcs_level``, ``budget_seconds``, ``seed``
    tracker: `BestTracker`
        Created from ``params`` if not given

    Returns
    -------
    outcome: `SearchOutcome`

    """
    _nested(state, params.nmcs_level, conj, tracker, rng)


def lnmcs_children_to_keep(pre_scores: Sequence[float], ratio: float) -> List[int]:
    """Return indices of children worth a deeper search given their playout scores

    If the best score is positive, children scoring at least ``ratio`` times the best one are kept.
    Otherwise the ceil(``ratio`` * k) best children are kept (the earlier child wins ties).
    """
    if not len(pre_scores):
        return []

    best = max(pre_scores)
    if best > 0:
        return [i for i, sc in enumerate(pre_scores) if sc >= ratio * best]

    n_keep = max(1, math.ceil(ratio * len(pre_scores)))
    order = sorted(range(len(pre_scores)), key=lambda i: (-pre_scores[i], i))
    return sorted(order[:n_keep])


@search_algorithm('lnmcs')
def lnmcs(state: BuildState, conj: Conjecture, params: SearchParams, tracker: BestTracker, rng: np.random.Generator):
    """Lazy Nested Monte Carlo Search of level ``params.lnmcs_level``

    As NMCS, but before a level L-1 search is launched on a child, the child is evaluated
    with ``params.lnmcs_playouts`` random playouts (the best one is its evaluation).
    Children whose evaluation is not good enough (see ``lnmcs_children_to_keep``) are pruned.

    Parameters
    ----------
    state: `BuildState`
    conj: `Conjecture`
    params: `SearchParams`
        Uses ``lnmcs_level``, ``lnmcs_playouts``, ``lnmcs_ratio``
    tracker: `BestTracker`

    Returns
    -------
    outcome: `SearchOutcome`

    """
    def children_to_search(children: List[BuildState], moves: List[Move]):
        pre_scores = []
        best_score, best_seq = -math.inf, None
        for child, m in zip(children, moves):
            child_best = -math.inf
            for _ in range(params.lnmcs_playouts):
                score, seq = random_playout(child, conj, tracker, rng)
                child_best = max(child_best, score)
                if best_seq is None or score > best_score:
                    best_score, best_seq = score, [m] + seq
            pre_scores.append(child_best)
        return best_score, best_seq, lnmcs_children_to_keep(pre_scores, params.lnmcs_ratio)

    _nested(state, params.lnmcs_level, conj, tracker, rng, children_to_search)


def adapt_policy(policy: Policy, state: BuildState, sequence: Sequence[Move], alpha: float) -> Policy:
    """Return the policy moved towards playing ``sequence`` from ``state``

    Along the sequence, ``alpha`` is added to the weight of every chosen move code and
    ``alpha`` times the probability of each legal move (under the original policy) is subtracted from its code.
    """
    new_policy = dict(policy)
    for m in sequence:
        moves = state.moves
        probs = move_probabilities(moves, policy, state.target_size)
        for legal_move, p in zip(moves, probs):
            code = legal_move.code(state.target_size)
            new_policy[code] = new_policy.get(code, 0.0) - alpha * p
        code = m.code(state.target_size)
        new_policy[code] = new_policy.get(code, 0.0) + alpha
        state = apply(state, m)
    return new_policy


def _nrpa(
        state: BuildState, level: int, policy: Policy,
        conj: Conjecture, params: SearchParams, tracker: BestTracker, rng: np.random.Generator
) -> Sequence_:
    if level == 0:
        return best_prefix_playout(state, conj, tracker, rng, policy=policy)

    best_score, best_seq = -math.inf, None
    for _ in range(params.nrpa_iterations):
        score, seq = _nrpa(state, level - 1, dict(policy), conj, params, tracker, rng)
        if best_seq is None or score > best_score:
            best_score, best_seq = score, seq
        policy = adapt_policy(policy, state, best_seq, params.nrpa_alpha)
    return best_score, best_seq


@search_algorithm('nrpa')
def nrpa(state: BuildState, conj: Conjecture, params: SearchParams, tracker: BestTracker, rng: np.random.Generator):
    """Nested Rollout Policy Adaptation of level ``params.nrpa_level``

    Level 0 is a playout choosing moves by the softmax of the policy weights of their codes.
    Its value is the best score among the visited states and its sequence stops at the first such state,
    so the policy is never adapted towards the moves played after the best graph (see ``best_prefix_playout``).
    NMCS and LNMCS keep the terminal score of their playouts.
    Level L runs ``params.nrpa_iterations`` searches of level L-1 and after each of them
    adapts the policy towards the best sequence found with the learning rate ``params.nrpa_alpha``.

    Parameters
    ----------
    state: `BuildState`
    conj: `Conjecture`
    params: `SearchParams`
        Uses ``nrpa_level``, ``nrpa_iterations``, ``nrpa_alpha``
    tracker: `BestTracker`

    Returns
    -------
    outcome: `SearchOutcome`

    """
    _nrpa(state, params.nrpa_level, {}, conj, params, tracker, rng)
