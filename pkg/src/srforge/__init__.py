"""Superregular and block superregular matrices over finite fields."""
from __future__ import annotations

from .companion import BlockMat, CompanionCtx, companion, companion_matrix, mat_frobenius
from .construct import (
    PerturbSpecBlock,
    PerturbSpecRow,
    chain,
    kron_block,
    lift,
    perturb_block,
    perturb_row,
    random_search,
    scaled_columns,
)
from .errors import SrforgeError
from .field import GF, FieldElem, field_new, is_primitive, primitive_polys
from .linalg import Mat, det, inverse, kron, row_multilinearity_check, schur_det, submatrix
from .verify import VerifyReport, is_block_superregular, is_superregular, minor_table

__version__ = "0.1.0"
