"""
This module contains what all the search algorithms share: the hyperparameters,
the outcome of a search and the entry point wrapper which turns a search body into a halting search

"""
import dataclasses
import functools
import logging
import math
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np
from pydantic import Field
from pydantic.dataclasses import dataclass

from refutepy.graph import Graph
from refutepy.graph.converters import to_edge_list, parse_edge_list
from refutepy.conjectures import Conjecture, VIOLATION_EPSILON
from refutepy.game import BuildState, BestTracker, SearchHalted, Move, evaluate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchParams:
    """Hyperparameters of the search algorithms

    Parameters
    ----------
    nmcs_level: `int`
        Nesting level of NMCS
    lnmcs_level: `int`
        Nesting level of Lazy NMCS
    lnmcs_playouts: `int`
        Number of playouts evaluating a child before deciding whether to search it deeper
    lnmcs_ratio: `float`
        Children with playout score below ``lnmcs_ratio`` times the best one are pruned
    uct_constant: `float`
        Exploration constant of UCT, RAVE and GRAVE
    rave_ref: `float`
        RAVE: constant of the blending schedule. GRAVE: number of playouts a node needs to provide AMAF statistics
    rave_bias: `float`
        Bias of the GRAVE blending schedule
    beam_width: `int`
        Number of states kept at each depth of BEAM search
    nrpa_level: `int`
        Nesting level of NRPA
    nrpa_iterations: `int`
        Number of lower level calls at each NRPA level
    nrpa_alpha: `float`
        Learning rate of NRPA policy adaptation
    gbfs_open_cap: `int`
        The maximal size of the GBFS open list. The worst states are discarded beyond it
    budget_seconds: `float`
        Wall clock budget of a search
    seed: `int`
        Seed of the random generator. Drawn from OS entropy if not given
    max_iterations: `int`
        Optional cap on the number of UCT, RAVE and GRAVE iterations
    max_evaluations: `int`
        Optional cap on the number of evaluated states
    restarts: `bool`
        Whether nested searches start over (continuing the random stream)
        until a counter-example is found or the budget is exhausted
    violation_epsilon: `float`
        The smallest violation margin treated as a refutation

    """
    nmcs_level: int = Field(3, ge=0)
    lnmcs_level: int = Field(4, ge=1)
    lnmcs_playouts: int = Field(3, ge=1)
    lnmcs_ratio: float = Field(0.8, gt=0, le=1)
    uct_constant: float = Field(1.0, ge=0)
    rave_ref: float = Field(5, ge=0)
    rave_bias: float = Field(1e-5, ge=0)
    beam_width: int = Field(10, ge=1)
    nrpa_level: int = Field(3, ge=0)
    nrpa_iterations: int = Field(100, ge=1)
    nrpa_alpha: float = Field(1.0, ge=0)
    gbfs_open_cap: int = Field(10 ** 6, ge=1)
    budget_seconds: float = Field(900, gt=0)
    seed: Optional[int] = Field(None, ge=0)
    max_iterations: Optional[int] = Field(None, ge=1)
    max_evaluations: Optional[int] = Field(None, ge=1)
    restarts: bool = True
    violation_epsilon: float = Field(VIOLATION_EPSILON, ge=0)

    def with_overrides(self, **kwargs) -> 'SearchParams':
        """Return a copy of the parameters with some values replaced. None values are ignored"""
        return dataclasses.replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    def to_dict(self) -> Dict[str, Any]:
        return dataclasses.asdict(self)


@dataclasses.dataclass
class SearchOutcome:
    """The result of a search run

    ``best_graph`` is the first counter-example found if the conjecture was refuted,
    otherwise the best scoring graph ever evaluated.
    """
    algorithm: str
    conjecture_id: str
    best_graph: Optional[Graph]
    best_score: float
    lhs: Optional[float]
    rhs: Optional[float]
    refuted: bool
    elapsed_seconds: float
    evaluations: int
    move_history: Tuple[Move, ...]
    seed: Optional[int]
    target_size: int
    graph_class: str
    time_to_refutation: Optional[float] = None
    n_discarded: int = 0

    @property
    def n(self) -> int:
        return self.best_graph.n if self.best_graph is not None else 0

    def to_dict(self) -> Dict[str, Any]:
        """Return the outcome as JSON-compatible dict. Non-finite scores are written as None"""
        def finite_or_none(x):
            return x if x is not None and math.isfinite(x) else None

        return {
            'algorithm': self.algorithm,
            'conjecture': self.conjecture_id,
            'refuted': self.refuted,
            'n': self.n,
            'edges': to_edge_list(self.best_graph) if self.best_graph is not None else None,
            'best_score': finite_or_none(self.best_score),
            'lhs': finite_or_none(self.lhs),
            'rhs': finite_or_none(self.rhs),
            'elapsed_seconds': self.elapsed_seconds,
            'time_to_refutation': self.time_to_refutation,
            'evaluations': self.evaluations,
            'n_discarded': self.n_discarded,
            'move_history': [m.to_dict() for m in self.move_history],
            'seed': self.seed,
            'target_size': self.target_size,
            'graph_class': self.graph_class,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SearchOutcome':
        best_graph = None
        if data.get('edges') is not None:
            g = parse_edge_list(data['edges'])
            best_graph = Graph.from_edges(max(data.get('n', g.n), g.n), g.edges)
        return cls(
            algorithm=data['algorithm'], conjecture_id=data['conjecture'],
            best_graph=best_graph,
            best_score=data['best_score'] if data.get('best_score') is not None else -math.inf,
            lhs=data.get('lhs'), rhs=data.get('rhs'), refuted=data['refuted'],
            elapsed_seconds=data['elapsed_seconds'], evaluations=data['evaluations'],
            move_history=tuple(Move.from_dict(m) for m in data.get('move_history', [])),
            seed=data.get('seed'), target_size=data['target_size'], graph_class=data['graph_class'],
            time_to_refutation=data.get('time_to_refutation'), n_discarded=data.get('n_discarded', 0),
        )


def resolve_seed(seed: Optional[int]) -> int:
    """Return ``seed`` or a fresh one drawn from OS entropy"""
    if seed is not None:
        return seed
    return int(np.random.SeedSequence().entropy % (2 ** 63))


def make_tracker(params: SearchParams) -> BestTracker:
    return BestTracker(
        budget_seconds=params.budget_seconds, max_evaluations=params.max_evaluations,
        violation_epsilon=params.violation_epsilon,
    )


def evaluate_or_halt(s: BuildState, conj: Conjecture, tracker: BestTracker) -> float:
    """Evaluate the state ``s`` and raise SearchHalted if the search should stop right after"""
    value = evaluate(s, conj, tracker)
    tracker.raise_if_stopped()
    return value


def build_outcome(
        algorithm: str, state: BuildState, conj: Conjecture, tracker: BestTracker, seed: Optional[int]
) -> SearchOutcome:
    report = tracker.outcome_report
    graph = tracker.outcome_graph
    refuted = tracker.found_counterexample
    return SearchOutcome(
        algorithm=algorithm, conjecture_id=conj.id, best_graph=graph,
        best_score=report.score if report is not None else -math.inf,
        lhs=report.lhs if report is not None else None, rhs=report.rhs if report is not None else None,
        refuted=refuted, elapsed_seconds=tracker.elapsed_seconds, evaluations=tracker.evaluations,
        move_history=tuple(tracker.outcome_history), seed=seed,
        target_size=state.target_size, graph_class=state.graph_class.value,
        time_to_refutation=tracker.time_to_counterexample, n_discarded=tracker.n_discarded,
    )


SearchBody = Callable[[BuildState, Conjecture, SearchParams, BestTracker, np.random.Generator], None]


def search_algorithm(name: str, stochastic: bool = True, restartable: bool = True):
    """Turn a search body into a search entry point

    The entry point has the signature ``(state, conjecture, params=None, tracker=None) -> SearchOutcome``.
    It resolves the seed, creates the tracker and the random generator, runs the body
    (repeatedly if the search is restartable and ``params.restarts`` is set)
    and stops as soon as the tracker raises SearchHalted.
    """
    def decorator(body: SearchBody):
        @functools.wraps(body)
        def entry(
                state: BuildState, conjecture: Conjecture,
                params: Optional[SearchParams] = None, tracker: Optional[BestTracker] = None,
        ) -> SearchOutcome:
            params = params if params is not None else SearchParams()
            tracker = tracker if tracker is not None else make_tracker(params)
            seed = resolve_seed(params.seed) if stochastic else params.seed
            rng = np.random.default_rng(seed)

            logger.info('Start %s on %s: target=%d, class=%s, seed=%s, budget=%.1f s',
                        name, conjecture.id, state.target_size, state.graph_class.value, seed, params.budget_seconds)
            try:
                evaluate_or_halt(state, conjecture, tracker)
                body(state, conjecture, params, tracker, rng)
                while restartable and params.restarts:
                    body(state, conjecture, params, tracker, rng)
            except SearchHalted:
                pass

            if not tracker.found_counterexample and tracker.budget_exhausted:
                logger.info('%s on %s stopped by the budget after %d evaluations (best score %.6f)',
                            name, conjecture.id, tracker.evaluations, tracker.best_score)
            return build_outcome(name, state, conjecture, tracker, seed)

        entry.algorithm_name = name
        entry.is_stochastic = stochastic
        return entry
    return decorator
