"""vecshap - exact Shapley attribution for vector-valued cooperative games."""

__version__ = "1.0.0"
