"""Exact checks for cusp lattices, admissible ternary codes and the Hesse pencil."""
__version__ = "0.1.0"
