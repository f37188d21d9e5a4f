"""Dense quaternion matrices, index conventions and file documents."""

from ncdet.matrix.io import (
    LinearSystem,
    input_digest,
    load_matrix,
    load_system,
    matrix_from_document,
    matrix_to_document,
    system_from_document,
    system_to_document,
)
from ncdet.matrix.qmatrix import (
    QMatrix,
    col_replace_then_delete,
    delete_rowcol,
    hermitian_adjoint,
    is_hermitian,
    matmul,
    replace_col,
    replace_row,
    row_replace_then_delete,
)

__all__ = [
    "QMatrix",
    "matmul",
    "hermitian_adjoint",
    "is_hermitian",
    "replace_col",
    "replace_row",
    "delete_rowcol",
    "col_replace_then_delete",
    "row_replace_then_delete",
    "LinearSystem",
    "input_digest",
    "load_matrix",
    "load_system",
    "matrix_from_document",
    "matrix_to_document",
    "system_from_document",
    "system_to_document",
]
