"""
This subpackage provides the way to draw the graphs found by the searches

Modules
-------
graph_drawer:
    This module provides a function to draw a Graph (e.g. a counter-example) via NetworkX and Matplotlib packages

"""
from .graph_drawer import draw_graph, save_graph_drawing
