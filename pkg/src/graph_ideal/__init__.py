"""Binomial edge-square ideals of graphs: Gröbner bases, Hilbert functions,
regularity, maximum vertex joins and ear decompositions."""

__version__ = "0.1.0"
