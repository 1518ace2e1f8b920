"""
This subpackage contains the search algorithms looking for counter-examples.

Modules:
--------
  search_base:
    Hyperparameters, outcome of a search and the shared entry point of the algorithms
  nested_search:
    Nested Monte Carlo Search (NMCS), Lazy NMCS and Nested Rollout Policy Adaptation (NRPA)
  tree_search:
    Monte Carlo Tree Searches: UCT, RAVE and GRAVE
  greedy_search:
    Greedy Best First Search (GBFS) and BEAM search
  search:
    Runs an algorithm chosen by its name on a registered conjecture
  benchmark:
    Runs (conjecture, algorithm) cells over several seeds and summarizes the times to refutation

"""

from .search_base import SearchParams, SearchOutcome
from .search import ALGORITHMS, run_search, prepare_conjecture, UnknownAlgorithmError
from .benchmark import BenchCell, DEFAULT_BENCH_CELLS, run_bench, summarize_bench, bench_table
