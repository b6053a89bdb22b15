"""Exact computations with two-parameter type B Hecke algebras and coideal q-Schur algebras."""

from .scalars import ScalarField
from .schur import dim_formula

__all__ = ["ScalarField", "dim_formula"]
__version__ = "0.1.0"
