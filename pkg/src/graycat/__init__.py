"""Symbolic toolkit for tabulated bicategories and Gray-categories:
coherence validation, strictification of weak functors and transformations,
path objects, and the repaired composition of semi-strict transformations.
"""

__version__ = "0.1.0"
