"""Exact Burnside and Grothendieck-Witt Tambara functors for cyclic groups and
finite fields, the Dress map between them, and Tambara-ideal saturation."""

from .burnside import BurnsideElement, IntegralityError, Level, LevelError, ProCyclicLevel
from .catalog import GeneratorSet, generator_catalog, verify_theorem
from .dress import ExtensionSpec, dress, dress_kernel_level
from .gw import GwClass
from .ideals import TambaraIdeal, saturate, trace_ideal_finite_field
from .lattice import IntLattice

__all__ = [
    "BurnsideElement", "ExtensionSpec", "GeneratorSet", "GwClass", "IntLattice",
    "IntegralityError", "Level", "LevelError", "ProCyclicLevel", "TambaraIdeal",
    "dress", "dress_kernel_level", "generator_catalog", "saturate",
    "trace_ideal_finite_field", "verify_theorem",
]
