"""
This module plays random construction games till the end

"""
from typing import List, Mapping, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from refutepy.conjectures import Conjecture
from refutepy.game.build_state import BuildState, apply
from refutepy.game.moves import Move
from refutepy.game.tracker import BestTracker, evaluate

Policy = Mapping[int, float]  # move code -> weight


def move_probabilities(moves: Sequence[Move], policy: Policy, target_size: int) -> npt.NDArray[float]:
    """Return the Gibbs (softmax) distribution over ``moves`` given the weights of their codes

    Codes absent from ``policy`` weigh 0. If some weights are +inf, the probability is spread
    uniformly among those moves only.
    """
    weights = np.array([policy.get(m.code(target_size), 0.0) for m in moves], dtype=float)
    if np.isposinf(weights).any():
        probs = np.isposinf(weights).astype(float)
        return probs / probs.sum()

    finite = np.isfinite(weights)
    if not finite.any():
        return np.full(len(moves), 1 / len(moves))

    exps = np.zeros(len(moves))
    exps[finite] = np.exp(weights[finite] - weights[finite].max())
    return exps / exps.sum()


def choose_move(
        moves: Sequence[Move], rng: np.random.Generator,
        policy: Optional[Policy] = None, target_size: Optional[int] = None,
) -> Move:
    """Choose a move uniformly at random, or by the softmax of ``policy`` weights if ``policy`` is given"""
    if policy is None:
        return moves[int(rng.integers(len(moves)))]
    probs = move_probabilities(moves, policy, target_size)
    return moves[int(rng.choice(len(moves), p=probs))]


def _play(
        s: BuildState, conj: Conjecture, tracker: BestTracker, rng: np.random.Generator,
        policy: Optional[Policy] = None,
) -> Tuple[List[float], List[Move]]:
    scores = [evaluate(s, conj, tracker)]
    tracker.raise_if_stopped()

    sequence = []
    while not s.is_terminal:
        m = choose_move(s.moves, rng, policy, s.target_size)
        s = apply(s, m)
        sequence.append(m)
        scores.append(evaluate(s, conj, tracker))
        tracker.raise_if_stopped()
    return scores, sequence


def random_playout(
        s: BuildState, conj: Conjecture, tracker: BestTracker, rng: np.random.Generator,
        policy: Optional[Policy] = None,
) -> Tuple[float, List[Move]]:
    """Play random moves from the state ``s`` until a terminal state is reached

    Every visited state (``s`` included) is evaluated through ``tracker``.

    Parameters
    ----------
    s: `BuildState`
        The state to start from
    conj: `Conjecture`
        The conjecture to evaluate the states with
    tracker: `BestTracker`
    rng: `numpy.random.Generator`
        Seeded random generator
    policy: `Mapping[int, float]`
        Weights of move codes. Moves are chosen uniformly if not given

    Returns
    -------
    score: `float`
        The score of the terminal state
    moves: `list` of `Move`
        The moves played from ``s``

    Raises
    ------
    SearchHalted
        As soon as ``tracker`` says the search should stop

    """
    scores, sequence = _play(s, conj, tracker, rng, policy)
    return scores[-1], sequence


def best_prefix_playout(
        s: BuildState, conj: Conjecture, tracker: BestTracker, rng: np.random.Generator,
        policy: Optional[Policy] = None,
) -> Tuple[float, List[Move]]:
    """Play as ``random_playout`` but return the best visited state instead of the terminal one

    Returns
    -------
    score: `float`
        The best score among the visited states (``s`` included)
    moves: `list` of `Move`
        The moves leading from ``s`` to the first state with that score

    """
    scores, sequence = _play(s, conj, tracker, rng, policy)
    best_idx = int(np.argmax(scores))
    return scores[best_idx], sequence[:best_idx]
