"""Exact and numerical checks for Z3-graded ternary algebras and the sextic oscillator."""
from .exactfield import I, J, J2, ONE, SQRT3, ZERO, ZETA, Cyclo12

__version__ = "0.1.0"

__all__ = ["Cyclo12", "ZERO", "ONE", "ZETA", "J", "J2", "I", "SQRT3", "__version__"]
