"""Row/column determinants, double determinants, Cramer solvers and rank."""

from ncdet.determinants.cramer import (
    solve_left,
    solve_left_hermitian,
    solve_right,
    solve_right_hermitian,
)
from ncdet.determinants.cycles import OrderedCycles, left_ordered, right_ordered
from ncdet.determinants.double import ddet, double_adjoint, double_cofactors, inverse
from ncdet.determinants.hermitian import hermitian_det, hermitian_inverse, mdet
from ncdet.determinants.rank import principal_minor_rank, rank
from ncdet.determinants.reports import determinant_report
from ncdet.determinants.rowcol import (
    DetReport,
    PropertyReport,
    basic_property_checks,
    cdet,
    cdet_by_expansion,
    cdet_via_adjoint,
    determinant_by_permutations,
    left_cofactor,
    rdet,
    rdet_by_expansion,
    right_cofactor,
)

__all__ = [
    "OrderedCycles",
    "left_ordered",
    "right_ordered",
    "rdet",
    "cdet",
    "cdet_via_adjoint",
    "determinant_by_permutations",
    "DetReport",
    "determinant_report",
    "right_cofactor",
    "left_cofactor",
    "rdet_by_expansion",
    "cdet_by_expansion",
    "PropertyReport",
    "basic_property_checks",
    "mdet",
    "hermitian_det",
    "hermitian_inverse",
    "ddet",
    "double_cofactors",
    "double_adjoint",
    "inverse",
    "solve_right",
    "solve_left",
    "solve_right_hermitian",
    "solve_left_hermitian",
    "rank",
    "principal_minor_rank",
]
