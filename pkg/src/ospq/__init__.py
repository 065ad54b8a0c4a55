"""Exact symbolic kernel for the quantum supergroup OSp_q(1/2) and its dual."""

__version__ = "0.1.0"
