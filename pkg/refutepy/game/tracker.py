"""
This module keeps track of the best graph seen during a search.
Every evaluated state goes through the tracker, whether the state is terminal or not

"""
import logging
import math
import threading
import time
from typing import Dict, Optional, Tuple

from refutepy.graph import Graph
from refutepy.conjectures import Conjecture, ScoreReport, score, is_counterexample, VIOLATION_EPSILON
from refutepy.game.build_state import BuildState
from refutepy.game.moves import Move

logger = logging.getLogger(__name__)

CACHE_MAX_SIZE = 100_000


class SearchHalted(Exception):
    """Raised inside a search when a counter-example is found or the budget is exhausted"""


class BestTracker:
    """The best state ever evaluated during a search run

    Parameters
    ----------
    budget_seconds: `float` or None
        Wall clock budget of the search. No time limit if None
    max_evaluations: `int` or None
        The maximal number of evaluations. No limit if None
    violation_epsilon: `float`
        The smallest violation margin treated as a refutation
    halt_on_counterexample: `bool`
        Whether ``should_stop`` becomes True once a counter-example is found

    """
    def __init__(
            self,
            budget_seconds: Optional[float] = None, max_evaluations: Optional[int] = None,
            violation_epsilon: float = VIOLATION_EPSILON, halt_on_counterexample: bool = True,
    ):
        self.budget_seconds = budget_seconds
        self.max_evaluations = max_evaluations
        self.violation_epsilon = violation_epsilon
        self.halt_on_counterexample = halt_on_counterexample

        self.best_score: float = -math.inf
        self.best_graph: Optional[Graph] = None
        self.best_report: Optional[ScoreReport] = None
        self.best_history: Tuple[Move, ...] = ()

        self.found_counterexample: bool = False
        self.counterexample_graph: Optional[Graph] = None
        self.counterexample_report: Optional[ScoreReport] = None
        self.counterexample_history: Tuple[Move, ...] = ()
        self.time_to_counterexample: Optional[float] = None

        self.evaluations: int = 0
        self.n_discarded: int = 0
        self._cache: Dict[Graph, Tuple[ScoreReport, bool]] = {}
        self._lock = threading.Lock()
        self.started_at = time.perf_counter()

    def restart_clock(self):
        self.started_at = time.perf_counter()

    @property
    def elapsed_seconds(self) -> float:
        return time.perf_counter() - self.started_at

    @property
    def budget_exhausted(self) -> bool:
        if self.budget_seconds is not None and self.elapsed_seconds >= self.budget_seconds:
            return True
        return self.max_evaluations is not None and self.evaluations >= self.max_evaluations

    def should_stop(self) -> bool:
        return (self.halt_on_counterexample and self.found_counterexample) or self.budget_exhausted

    def raise_if_stopped(self):
        """Raise SearchHalted if the search should not go on"""
        if self.should_stop():
            raise SearchHalted()

    def score_graph(self, conj: Conjecture, g: Graph) -> Tuple[ScoreReport, bool]:
        """Return the score report of ``g`` and whether ``g`` refutes ``conj`` (cached per graph)"""
        cached = self._cache.get(g)
        if cached is not None:
            return cached

        report = score(conj, g)
        refutes = report.score > self.violation_epsilon and is_counterexample(
            conj, g, violation_epsilon=self.violation_epsilon, report=report)
        if len(self._cache) >= CACHE_MAX_SIZE:
            self._cache.clear()
        self._cache[g] = (report, refutes)
        return report, refutes

    def update(self, s: BuildState, report: ScoreReport, refutes: bool):
        """Record the evaluation of the state ``s``"""
        with self._lock:
            self.evaluations += 1
            if report.score > self.best_score or self.best_graph is None:
                if report.score > self.best_score:
                    logger.debug('New best score %.6f at n=%d after %d evaluations',
                                 report.score, s.graph.n, self.evaluations)
                self.best_score = max(self.best_score, report.score)
                self.best_graph, self.best_report, self.best_history = s.graph, report, s.history

            if refutes and not self.found_counterexample:
                self.found_counterexample = True
                self.counterexample_graph, self.counterexample_report = s.graph, report
                self.counterexample_history = s.history
                self.time_to_counterexample = self.elapsed_seconds
                logger.info('Counter-example found: n=%d, score=%.6f, %.2f s, %d evaluations',
                            s.graph.n, report.score, self.time_to_counterexample, self.evaluations)

    @property
    def outcome_graph(self) -> Optional[Graph]:
        """The counter-example if one was found, otherwise the best graph"""
        return self.counterexample_graph if self.found_counterexample else self.best_graph

    @property
    def outcome_report(self) -> Optional[ScoreReport]:
        return self.counterexample_report if self.found_counterexample else self.best_report

    @property
    def outcome_history(self) -> Tuple[Move, ...]:
        return self.counterexample_history if self.found_counterexample else self.best_history

    def __repr__(self):
        return f"BestTracker(best_score={self.best_score:.6f}, found_counterexample={self.found_counterexample}, " \
               f"evaluations={self.evaluations})"


def evaluate(s: BuildState, conj: Conjecture, tracker: BestTracker) -> float:
    """Return the score of the graph of ``s`` and record it in ``tracker``

    Graphs with less than 2 vertices score -inf. The tracker flag ``found_counterexample`` is set
    when the graph refutes ``conj``; the caller is expected to check ``tracker.should_stop()`` afterwards.
    """
    if s.graph.n < 2:
        report, refutes = ScoreReport.undefined(), False
    else:
        report, refutes = tracker.score_graph(conj, s.graph)
    tracker.update(s, report, refutes)
    return report.score
