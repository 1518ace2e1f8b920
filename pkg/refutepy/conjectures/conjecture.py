"""
This module provides a class Conjecture which represents a conjectured inequality "LHS <= RHS" on graphs
and the functions to score a graph against it

"""
import dataclasses
import math
from typing import Callable, Optional

from pydantic.dataclasses import dataclass

from refutepy.graph import Graph, GraphClass, graph_in_class
from refutepy.spectral import RangeDefinition
from refutepy.utils import utils

VIOLATION_EPSILON = 1e-6


@dataclass(frozen=True)
class Conjecture:
    """A conjectured inequality "LHS <= RHS" together with the graphs it is stated for

    Parameters
    ----------
    id: `str`
        Stable identifier like "graffiti-197"
    statement: `str`
        Human readable inequality
    graph_class: `GraphClass`
        The class of graphs a search builds
    min_size: `int`
        The smallest number of vertices of a graph accepted as a counter-example (>= 2)
    score_func: `Callable`
        A function ``score_func(g, [range_definition], [verify]) -> (lhs, rhs)``.
        None in place of lhs or rhs means the value is undefined for ``g``
    default_target: `int`
        Number of vertices a search builds up to if no target is given
    range_definition: `RangeDefinition` or None
        How the "range" of a spectrum is measured (only for conjectures speaking of a range)
    check_class: `GraphClass` or None
        The class a counter-example must belong to if it differs from ``graph_class``
        (set by ``relaxed_class_search_wrapper``)

    """
    id: str
    statement: str
    graph_class: GraphClass
    min_size: int
    score_func: Callable
    default_target: int
    range_definition: Optional[RangeDefinition] = None
    check_class: Optional[GraphClass] = None

    def __post_init__(self):
        if self.min_size < 2:
            raise ValueError(f'Conjecture "{self.id}": min_size should be at least 2. Given: {self.min_size}')
        if self.default_target < 1:
            raise ValueError(f'Conjecture "{self.id}": default_target should be positive. Given: {self.default_target}')

    @property
    def counterexample_class(self) -> GraphClass:
        """The class a graph must belong to in order to refute the conjecture"""
        return utils.get_not_none(self.check_class, self.graph_class)

    @property
    def number(self) -> str:
        return self.id.split('-')[-1]

    def with_overrides(self, **kwargs) -> 'Conjecture':
        """Return a copy of the conjecture with some fields replaced. None values are ignored"""
        changes = {k: v for k, v in kwargs.items() if v is not None}
        return dataclasses.replace(self, **changes)

    def __repr__(self):
        return f"Conjecture({self.id}: {self.statement}; class={self.graph_class.value}, min_size={self.min_size})"


@dataclass(frozen=True)
class ScoreReport:
    """Values of both sides of a conjecture on a graph and the violation margin ``score = lhs - rhs``

    An undefined side makes the whole report undefined with ``score = -inf``
    """
    lhs: Optional[float]
    rhs: Optional[float]
    score: float
    defined: bool

    @classmethod
    def from_sides(cls, lhs: Optional[float], rhs: Optional[float]) -> 'ScoreReport':
        if lhs is None or rhs is None or math.isnan(lhs) or math.isnan(rhs):
            return cls(lhs=lhs, rhs=rhs, score=-math.inf, defined=False)
        return cls(lhs=float(lhs), rhs=float(rhs), score=float(lhs) - float(rhs), defined=True)

    @classmethod
    def undefined(cls) -> 'ScoreReport':
        return cls(lhs=None, rhs=None, score=-math.inf, defined=False)


def score(
        conj: Conjecture, g: Graph,
        verify: bool = False, range_definition: Optional[RangeDefinition] = None
) -> ScoreReport:
    """Compute both sides of the conjecture ``conj`` on the graph ``g``

    Parameters
    ----------
    conj: `Conjecture`
    g: `Graph`
    verify: `bool`
        Whether to use the eigensolver with a residual check
    range_definition: `RangeDefinition`
        Overrides ``conj.range_definition`` if given

    Returns
    -------
    report: `ScoreReport`
        Undefined report for graphs with less than 2 vertices or disconnected graphs

    """
    if g.n < 2 or not g.is_connected():
        return ScoreReport.undefined()

    kwargs = {'verify': verify, 'range_definition': utils.get_not_none(range_definition, conj.range_definition)}
    lhs, rhs = conj.score_func(g, **utils.get_kwargs_used(kwargs, conj.score_func))
    return ScoreReport.from_sides(lhs, rhs)


def is_counterexample(
        conj: Conjecture, g: Graph,
        violation_epsilon: float = VIOLATION_EPSILON, report: Optional[ScoreReport] = None, verify: bool = False,
) -> bool:
    """Return True if ``g`` refutes ``conj``

    The graph should belong to the counter-example class of ``conj``, be connected,
    have at least ``conj.min_size`` vertices and violate the inequality by more than ``violation_epsilon``.

    Parameters
    ----------
    conj: `Conjecture`
    g: `Graph`
    violation_epsilon: `float`
        The smallest violation margin treated as a refutation
    report: `ScoreReport`
        Precomputed score of ``g`` (computed inside if not given)
    verify: `bool`
        Whether to compute the score with the residual-checked eigensolver

    Returns
    -------
    flg: `bool`

    """
    if g.n < conj.min_size or not g.is_connected():
        return False
    if not graph_in_class(g, conj.graph_class) or not graph_in_class(g, conj.counterexample_class):
        return False

    report = report if report is not None else score(conj, g, verify=verify)
    return report.defined and report.score > violation_epsilon


def relaxed_class_search_wrapper(conj: Conjecture) -> Conjecture:
    """Return a variant of ``conj`` built in the class of any graphs

    Counter-examples of the variant still have to belong to the original class of ``conj``.
    """
    return dataclasses.replace(conj, graph_class=GraphClass.ANY, check_class=conj.counterexample_class)
