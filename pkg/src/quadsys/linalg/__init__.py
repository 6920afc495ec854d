"""Exact linear algebra over F_p, Q, Q(sqrt D) and Z."""
from .fields import QuadraticNumber, field_nullspace, field_rank, field_rref, field_solve
from .integer import (hermite_with_transform, integer_nullspace, lattice_basis_size,
                      lll_reduce, lll_violations)
from .matrix import (ExactMatrix, ScalarDomain, dumps, loads, nullspace_basis,
                     row_canonical_form)
from .reconstruct import ReconstructionError, integral_multiple, rational_reconstruct

__all__ = [
    "QuadraticNumber", "field_nullspace", "field_rank", "field_rref", "field_solve",
    "hermite_with_transform", "integer_nullspace", "lattice_basis_size", "lll_reduce",
    "lll_violations", "ExactMatrix", "ScalarDomain", "dumps", "loads", "nullspace_basis",
    "row_canonical_form", "ReconstructionError", "integral_multiple", "rational_reconstruct",
]
