"""Quasideterminants, block inversion, elimination and the correspondence with
row/column determinants."""

from ncdet.quasi.correspondence import CorrespondenceResult, quasidet_via_rc
from ncdet.quasi.elimination import quasi_solve, quasi_solve_left, solve_by_quasideterminants
from ncdet.quasi.quasideterminant import (
    QuasiResult,
    block_inverse_minor,
    hadamard_inverse,
    quasideterminant,
    quasideterminant_table,
    quasideterminant_via_inverse,
)

__all__ = [
    "QuasiResult",
    "hadamard_inverse",
    "quasideterminant",
    "quasideterminant_via_inverse",
    "quasideterminant_table",
    "block_inverse_minor",
    "quasi_solve",
    "quasi_solve_left",
    "solve_by_quasideterminants",
    "CorrespondenceResult",
    "quasidet_via_rc",
]
