"""Exact verification engine for q-deformed Clifford and Hopf algebra identities."""

__version__ = "0.1.0"
