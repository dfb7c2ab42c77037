"""Equivariant Schubert calculus on Grassmannians via puzzles and GKM localization."""

from .strings import BitString, all_strings, lattice_leq
from .poly import Poly, NonzeroRemainder, NotInSubring

__version__ = "0.1.0"
