"""
This subpackage implements the graph construction game searched by the algorithms.

Classes
-------
moves.Move
build_state.BuildState
tracker.BestTracker

Modules
-------
  moves:
    Moves of the game and their integer codes
  build_state:
    States of the game, legal moves and their application
  tracker:
    Evaluation of states and tracking of the best state of a search
  playout:
    Uniform and policy driven random playouts

"""

from .moves import Move, MoveKind
from .build_state import BuildState, initial_state, legal_moves, apply, is_terminal, replay
from .tracker import BestTracker, SearchHalted, evaluate
from .playout import random_playout, best_prefix_playout, move_probabilities
