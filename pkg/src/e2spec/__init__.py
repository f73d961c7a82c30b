"""Spectral toolkit for the three-parameter E2 quasi-exactly solvable Hamiltonian."""

__version__ = "0.1.0"
