"""Seeded random instances: small rationals, quaternions and structured matrices."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ncdet.algebra.quaternion import AlgebraParams, Quaternion, norm
from ncdet.algebra.scalars import Scalar, ScalarKind, is_zero_scalar
from ncdet.determinants.double import ddet
from ncdet.errors import NcdetError
from ncdet.matrix.qmatrix import QMatrix

NUMERATOR_RANGE = (-5, 5)
DENOMINATOR_RANGE = (1, 4)


class SamplingError(NcdetError):
    """No instance with the requested property was found within the retry budget."""

    kind = "sampling"


def random_scalar(rng: np.random.Generator, kind: ScalarKind = ScalarKind.RATIONAL) -> Scalar:
    num = int(rng.integers(NUMERATOR_RANGE[0], NUMERATOR_RANGE[1] + 1))
    den = int(rng.integers(DENOMINATOR_RANGE[0], DENOMINATOR_RANGE[1] + 1))
    value = Fraction(num, den)
    return value if kind is ScalarKind.RATIONAL else float(value)


def random_quaternion(rng: np.random.Generator, params: AlgebraParams) -> Quaternion:
    return Quaternion(*(random_scalar(rng, params.kind) for _ in range(4)), params)


def random_real(rng: np.random.Generator, params: AlgebraParams) -> Quaternion:
    return Quaternion.scalar(random_scalar(rng, params.kind), params)


def random_invertible_quaternion(
    rng: np.random.Generator, params: AlgebraParams, max_tries: int = 100
) -> Quaternion:
    for _ in range(max_tries):
        q = random_quaternion(rng, params)
        if not is_zero_scalar(norm(q)):
            return q
    raise SamplingError(f"No invertible quaternion in {max_tries} draws over {params}.")


def random_matrix(rng: np.random.Generator, m: int, n: int, params: AlgebraParams) -> QMatrix:
    return QMatrix.from_rows(
        [[random_quaternion(rng, params) for _ in range(n)] for _ in range(m)], params
    )


def random_real_matrix(rng: np.random.Generator, n: int, params: AlgebraParams) -> QMatrix:
    """Square matrix with entries in the base field."""
    return QMatrix.from_rows(
        [[random_real(rng, params) for _ in range(n)] for _ in range(n)], params
    )


def random_entrywise_invertible(
    rng: np.random.Generator, n: int, params: AlgebraParams
) -> QMatrix:
    return QMatrix.from_rows(
        [[random_invertible_quaternion(rng, params) for _ in range(n)] for _ in range(n)], params
    )


def random_invertible_matrix(
    rng: np.random.Generator,
    n: int,
    params: AlgebraParams,
    *,
    entrywise: bool = False,
    max_tries: int = 50,
) -> QMatrix:
    """Resample until ddet != 0 (and, with ``entrywise``, every entry is invertible)."""
    for _ in range(max_tries):
        if entrywise:
            A = random_entrywise_invertible(rng, n, params)
        else:
            A = random_matrix(rng, n, n, params)
        if not is_zero_scalar(ddet(A, cross_check=False)):
            return A
    raise SamplingError(f"No invertible {n}x{n} matrix in {max_tries} draws over {params}.")


def random_hermitian(rng: np.random.Generator, n: int, params: AlgebraParams) -> QMatrix:
    """B* B for a random n x n B."""
    B = random_matrix(rng, n, n, params)
    return B.adjoint() @ B


def dependent_column_matrix(rng: np.random.Generator, n: int, params: AlgebraParams) -> QMatrix:
    """Random n x n matrix whose last column is a right linear combination of the others."""
    A = random_matrix(rng, n, n, params)
    combo = A.col_at(0).scale_right(random_quaternion(rng, params))
    for k in range(1, n - 1):
        combo = combo + A.col_at(k).scale_right(random_quaternion(rng, params))
    return A.replace_col(n - 1, combo)


def left_row_combination(rng: np.random.Generator, A: QMatrix, i: int) -> QMatrix:
    """Sum of q_k * (row k of A) over k != i with random q_k."""
    others = [k for k in range(A.rows) if k != i]
    combo = A.row_at(others[0]).scale_left(random_quaternion(rng, A.params))
    for k in others[1:]:
        combo = combo + A.row_at(k).scale_left(random_quaternion(rng, A.params))
    return combo


def right_column_combination(rng: np.random.Generator, A: QMatrix, j: int) -> QMatrix:
    """Sum of (column k of A) * q_k over k != j with random q_k."""
    others = [k for k in range(A.cols) if k != j]
    combo = A.col_at(others[0]).scale_right(random_quaternion(rng, A.params))
    for k in others[1:]:
        combo = combo + A.col_at(k).scale_right(random_quaternion(rng, A.params))
    return combo


def low_rank_matrix(
    rng: np.random.Generator, n: int, rank: int, params: AlgebraParams
) -> QMatrix:
    """Product of random n x rank and rank x n factors, so its rank is at most ``rank``."""
    return random_matrix(rng, n, rank, params) @ random_matrix(rng, rank, n, params)
