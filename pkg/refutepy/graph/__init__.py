"""
This subpackage provides a class Graph to work with the undirected simple graphs built by a search.
Other modules of the subpackage are implemented to shorten Graph class.

Classes
-------
graph.Graph
graph_class.GraphClass

Modules
-------
  graph:
    Implements Graph class (adjacency rows, degrees, BFS distances, girth)
  graph_class:
    Implements the classes of graphs a search may build and the rules to keep a graph inside its class
  converters:
    Contains functions to read/write a Graph object from/to edge lists, DOT, JSON and networkx
  graph_errors:
    Exceptions raised on invalid graph operations

"""

from .graph import Graph, UNREACHABLE
from .graph_class import GraphClass, edge_is_class_legal, graph_in_class
from .converters import parse_edge_list, read_edge_list, to_edge_list, to_dot
