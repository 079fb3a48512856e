"""Hessian ideals of binary forms: transvectants, saturation sequences, syzygies and splitting types."""

__version__ = "0.1.0"
