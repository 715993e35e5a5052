"""Noncrossing and nonnesting complexes on increasing k-tuples of [n]."""
from .core import (
    complement,
    cyclic_shift,
    is_noncrossing,
    is_nonnesting,
    is_weakly_separated,
    reflect,
)
from .tableaux import Tableau, VectorTable, phi_nc, phi_nn, summing_tableau

__all__ = [
    "Tableau",
    "VectorTable",
    "complement",
    "cyclic_shift",
    "is_noncrossing",
    "is_nonnesting",
    "is_weakly_separated",
    "phi_nc",
    "phi_nn",
    "reflect",
    "summing_tableau",
]
__version__ = "0.1.0"
