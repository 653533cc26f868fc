"""Schur multipliers of finite groups, with a focus on central products."""

__version__ = "0.1.0"
