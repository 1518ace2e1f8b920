"""
This module contains Monte Carlo Tree Searches: UCT, RAVE and GRAVE.

The three searches share one tree. They differ only in the value a node gives to its children:
UCT uses the mean reward, RAVE and GRAVE blend it with all-moves-as-first (AMAF) statistics.
Rewards are the scores squashed by the sigmoid function, the tracker keeps the raw scores.

"""
import math
from typing import Dict, List, Optional, Set

import numpy as np

from refutepy.conjectures import Conjecture
from refutepy.game import BuildState, BestTracker, Move, apply, random_playout
from refutepy.algorithms.search_base import SearchParams, search_algorithm
from refutepy.utils.utils import sigmoid

UCT, RAVE, GRAVE = 'uct', 'rave', 'grave'


class MCTSNode:
    """A node of the search tree

    ``amaf`` maps a move code to [sum of rewards, number of simulations] over the simulations
    passing through the node in which the move was played below the node.
    """
    __slots__ = ('state', 'move', 'parent', 'children', 'untried', 'visits', 'total_reward', 'amaf', 'exhausted')

    def __init__(self, state: BuildState, move: Optional[Move] = None, parent: Optional['MCTSNode'] = None):
        self.state = state
        self.move = move
        self.parent = parent
        self.children: List['MCTSNode'] = []
        self.untried: List[Move] = list(state.moves)
        self.visits = 0
        self.total_reward = 0.0
        self.amaf: Dict[int, List[float]] = {}
        self.exhausted = state.is_terminal

    @property
    def mean_reward(self) -> float:
        return self.total_reward / self.visits if self.visits else 0.0

    def expand(self) -> 'MCTSNode':
        """Create the child of the first untried move"""
        m = self.untried.pop(0)
        child = MCTSNode(apply(self.state, m), move=m, parent=self)
        self.children.append(child)
        return child

    def update_exhausted(self):
        self.exhausted = self.state.is_terminal or (
            not self.untried and all(child.exhausted for child in self.children))

    def __repr__(self):
        return f"MCTSNode(move={self.move}, visits={self.visits}, mean_reward={self.mean_reward:.4f})"


class TreeSearch:
    """One Monte Carlo Tree Search run with the selection rule ``mode`` in {'uct', 'rave', 'grave'}"""
    def __init__(
            self, root_state: BuildState, conj: Conjecture, params: SearchParams,
            tracker: BestTracker, rng: np.random.Generator, mode: str = UCT,
    ):
        if mode not in {UCT, RAVE, GRAVE}:
            raise ValueError(f'Unknown tree search mode "{mode}". Possible values are: {[UCT, RAVE, GRAVE]}')
        self.root = MCTSNode(root_state)
        self.conj = conj
        self.params = params
        self.tracker = tracker
        self.rng = rng
        self.mode = mode
        self.target_size = root_state.target_size
        self.n_iterations = 0

    def run(self):
        """Iterate until the tree is exhausted or ``params.max_iterations`` is reached.
        Raises SearchHalted when the tracker says to stop"""
        while not self.root.exhausted:
            if self.params.max_iterations is not None and self.n_iterations >= self.params.max_iterations:
                break
            self.iterate()

    def iterate(self):
        path = [self.root]
        node = self.root
        while not node.untried and not node.state.is_terminal:
            node = self.select_child(node, path)
            path.append(node)

        if node.untried:
            node = node.expand()
            path.append(node)

        score, playout_moves = random_playout(node.state, self.conj, self.tracker, self.rng)
        self.backpropagate(path, sigmoid(score), playout_moves)
        self.n_iterations += 1

    def select_child(self, node: MCTSNode, path: List[MCTSNode]) -> MCTSNode:
        amaf_node = self.amaf_source(path) if self.mode == GRAVE else node
        candidates = [child for child in node.children if not child.exhausted]
        return max(candidates, key=lambda child: self.child_value(node, child, amaf_node))

    def amaf_source(self, path: List[MCTSNode]) -> MCTSNode:
        """The closest node of ``path`` (from the end) with at least ``rave_ref`` visits, the root otherwise"""
        for node in reversed(path):
            if node.visits >= self.params.rave_ref:
                return node
        return self.root

    def child_value(self, parent: MCTSNode, child: MCTSNode, amaf_node: MCTSNode) -> float:
        exploration = self.params.uct_constant * math.sqrt(math.log(parent.visits) / child.visits)
        if self.mode == UCT:
            return child.mean_reward + exploration

        amaf_reward, amaf_visits = amaf_node.amaf.get(child.move.code(self.target_size), (0.0, 0))
        if not amaf_visits:
            return child.mean_reward + exploration

        if self.mode == RAVE:
            ref = self.params.rave_ref
            if math.isinf(ref):
                beta = 1.0
            else:
                beta = math.sqrt(ref / (3 * child.visits + ref)) if ref > 0 else 0.0
        else:
            beta = amaf_visits / (amaf_visits + child.visits + self.params.rave_bias * amaf_visits * child.visits)
        return (1 - beta) * child.mean_reward + beta * amaf_reward / amaf_visits + exploration

    def backpropagate(self, path: List[MCTSNode], reward: float, playout_moves: List[Move]):
        tree_moves = [node.move for node in path[1:]]
        all_codes = [m.code(self.target_size) for m in tree_moves + playout_moves]

        for depth in range(len(path) - 1, -1, -1):
            node = path[depth]
            node.visits += 1
            node.total_reward += reward

            codes_below: Set[int] = set(all_codes[depth:])
            for code in codes_below:
                stats = node.amaf.setdefault(code, [0.0, 0])
                stats[0] += reward
                stats[1] += 1
            node.update_exhausted()


@search_algorithm(UCT, restartable=False)
def uct(state: BuildState, conj: Conjecture, params: SearchParams, tracker: BestTracker, rng: np.random.Generator):
    """Upper Confidence bounds applied to Trees

    A child maximizes mean reward + ``uct_constant`` * sqrt(ln(parent visits) / child visits).
    Unvisited children are expanded first in the order of legal moves.

    Parameters
    ----------
    state: `BuildState`
    conj: `Conjecture`
    params: `SearchParams`
        Uses ``uct_constant``, ``max_iterations``
    tracker: `BestTracker`

    Returns
    -------
    outcome: `SearchOutcome`

    """
    TreeSearch(state, conj, params, tracker, rng, mode=UCT).run()


@search_algorithm(RAVE, restartable=False)
def rave(state: BuildState, conj: Conjecture, params: SearchParams, tracker: BestTracker, rng: np.random.Generator):
    """Rapid Action Value Estimation

    The mean reward of a child is blended with the AMAF value of its move in the parent:
    (1 - b) * mean + b * amaf with b = sqrt(``rave_ref`` / (3 * child visits + ``rave_ref``)).
    The UCT exploration term is added.

    Parameters
    ----------
    state: `BuildState`
    conj: `Conjecture`
    params: `SearchParams`
        Uses ``uct_constant``, ``rave_ref``, ``max_iterations``
    tracker: `BestTracker`

    Returns
    -------
    outcome: `SearchOutcome`

    """
    TreeSearch(state, conj, params, tracker, rng, mode=RAVE).run()


@search_algorithm(GRAVE, restartable=False)
def grave(state: BuildState, conj: Conjecture, params: SearchParams, tracker: BestTracker, rng: np.random.Generator):
    """Generalized Rapid Action Value Estimation

    As RAVE, but the AMAF statistics come from the closest ancestor with at least ``rave_ref`` visits
    (the root if there is none), and b = n_amaf / (n_amaf + n + ``rave_bias`` * n_amaf * n).

    Parameters
    ----------
    state: `BuildState`
    conj: `Conjecture`
    params: `SearchParams`
        Uses ``uct_constant``, ``rave_ref``, ``rave_bias``, ``max_iterations``
    tracker: `BestTracker`

    Returns
    -------
    outcome: `SearchOutcome`

    """
    TreeSearch(state, conj, params, tracker, rng, mode=GRAVE).run()
