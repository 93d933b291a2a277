"""Exact construction, verification and search of matrices orthogonal over finite groups."""

from .cyclotomic import CyclotomicInt, cyclo_zero_test, cyclotomic_polynomial
from .gmatrix import (
    GMatrix,
    MatrixError,
    adjoint,
    back_circulant,
    block_grid,
    circulant,
    embed,
    kronecker_compose,
    residue_class_matrix,
    residue_classes,
)
from .groupring import GroupRingVector, ring_convolve
from .groups import Group, GroupElement, GroupError, group_op, make_group, parse_element
from .quaternion import Quaternion, quat_mul
from .textio import MatrixFormatError, parse_matrix, read_matrix, serialize, write_matrix
from .verify import (
    VerificationReport,
    VerifyError,
    verify,
    verify_balance,
    verify_bhaskar_rao,
    verify_block_design,
    verify_butson,
    verify_numeric,
)

__all__ = [
    "CyclotomicInt", "cyclo_zero_test", "cyclotomic_polynomial",
    "GMatrix", "MatrixError", "adjoint", "back_circulant", "block_grid", "circulant", "embed",
    "kronecker_compose", "residue_class_matrix", "residue_classes",
    "GroupRingVector", "ring_convolve",
    "Group", "GroupElement", "GroupError", "group_op", "make_group", "parse_element",
    "Quaternion", "quat_mul",
    "MatrixFormatError", "parse_matrix", "read_matrix", "serialize", "write_matrix",
    "VerificationReport", "VerifyError", "verify", "verify_balance", "verify_bhaskar_rao",
    "verify_block_design", "verify_butson", "verify_numeric",
]
