"""Matchings in k-uniform hypergraphs: exact and approximate counting."""

try:
    from ._hypermatch import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _hypermatch import *  # noqa: F401,F403  (in-tree build on PYTHONPATH)
