"""Exact algorithms for feedback vertex set variants and related problems on
subdivided-star-subgraph-free graphs."""

__version__ = "0.1.0"
