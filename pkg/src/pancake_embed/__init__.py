"""Embeddings of rings, grids and hypercubes into pancake and star networks."""

__version__ = "0.1.0"
