"""Schubert calculus through faces of Gelfand-Zetlin polytopes.

Permutations are 1-indexed tuples in one-line notation; words are tuples of
simple-reflection indices read left to right as function composition.
"""

__version__ = "0.1.0"
