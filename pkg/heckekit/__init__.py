# Load environment variables from .env file if it exists
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    # python-dotenv not installed, skip silently
    pass

from .config import Settings
from .errors import (
    HeckekitError,
    InvalidDiagram,
    InvalidInput,
    InvariantViolation,
    NonDivisible,
    SingularPairing,
    SizeMismatch,
)
from .laurent import LaurentPoly, exact_div, quantum_binomial, quantum_factorial, quantum_integer
from .matrix import LaurentMatrix
from .combinatorics import Permutation, Tableau, inverse_rsk, rsk, syt_count
from .hecke import HeckeElt, cells, kl_elt, kl_table, parabolic_module, verify_wedderburn
from .quantum import TangleWord, braid_closure, kauffman_jones, rt_invariant, simple_module, tensor
from .symmetric import GroupAlgebraElt, block_decompose, jucys_murphy

__version__ = "0.1.0"

__all__ = [
    "Settings",
    "HeckekitError",
    "InvalidDiagram",
    "InvalidInput",
    "InvariantViolation",
    "NonDivisible",
    "SingularPairing",
    "SizeMismatch",
    "LaurentPoly",
    "exact_div",
    "quantum_binomial",
    "quantum_factorial",
    "quantum_integer",
    "LaurentMatrix",
    "Permutation",
    "Tableau",
    "inverse_rsk",
    "rsk",
    "syt_count",
    "HeckeElt",
    "cells",
    "kl_elt",
    "kl_table",
    "parabolic_module",
    "verify_wedderburn",
    "TangleWord",
    "braid_closure",
    "kauffman_jones",
    "rt_invariant",
    "simple_module",
    "tensor",
    "GroupAlgebraElt",
    "block_decompose",
    "jucys_murphy",
]
