"""Independent reference computations used by the verification suites."""

from __future__ import annotations

from collections.abc import Sequence
from itertools import permutations

from ncdet.algebra.quaternion import Quaternion, conj, norm, qinv, trace
from ncdet.algebra.scalars import Scalar
from ncdet.determinants.cycles import left_ordered
from ncdet.matrix.qmatrix import QMatrix


def bareiss_det(rows: Sequence[Sequence[Scalar]]) -> Scalar:
    """Classical determinant by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in rows]
    n = len(M)
    if n == 1:
        return M[0][0]
    sign = 1
    prev: Scalar = 1  # type: ignore[assignment]
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0 * M[0][0]
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def leibniz_det(rows: Sequence[Sequence[Scalar]]) -> Scalar:
    """Classical permutation sum, signs from the cycle count of each permutation."""
    n = len(rows)
    total = 0 * rows[0][0]
    for perm in permutations(range(n)):
        term = left_ordered(perm, 0).sign
        for c in range(n):
            term = term * rows[c][perm[c]]
        total = total + term
    return total


def real_parts(A: QMatrix) -> list[list[Scalar]]:
    return [[q.real_part for q in r] for r in A.to_rows()]


def ddet_2x2(A: QMatrix) -> Scalar:
    """n(a11)n(a22) + n(a21)n(a12) - t(conj(a11) a12 conj(a22) a21)."""
    a11, a12, a21, a22 = A[0, 0], A[0, 1], A[1, 0], A[1, 1]
    cross = conj(a11) * a12 * conj(a22) * a21
    return norm(a11) * norm(a22) + norm(a21) * norm(a12) - trace(cross).real_part


def quasideterminants_2x2(A: QMatrix) -> list[list[Quaternion]]:
    """The four closed forms; every entry must be invertible."""
    a11, a12, a21, a22 = A[0, 0], A[0, 1], A[1, 0], A[1, 1]
    return [
        [a11 - a12 * qinv(a22) * a21, a12 - a11 * qinv(a21) * a22],
        [a21 - a22 * qinv(a12) * a11, a22 - a21 * qinv(a11) * a12],
    ]


def rdet_2x2(A: QMatrix) -> Quaternion:
    return A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]


def cdet_2x2(A: QMatrix) -> Quaternion:
    return A[1, 1] * A[0, 0] - A[0, 1] * A[1, 0]
