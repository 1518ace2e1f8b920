"""
This subpackage provides conjectured graph inequalities and the way to score graphs against them.

Classes
-------
conjecture.Conjecture
conjecture.ScoreReport

Modules
-------
  conjecture:
    Implements Conjecture class, scoring and the counter-example check
  registry:
    Built-in Graffiti conjectures and the functions to list, get and register conjectures
  conjecture_errors:
    Exceptions raised by the registry

"""

from .conjecture import (
    Conjecture, ScoreReport, VIOLATION_EPSILON, score, is_counterexample, relaxed_class_search_wrapper,
)
from .registry import list_conjectures, get_conjecture, register_conjecture, BUILTIN_CONJECTURES
