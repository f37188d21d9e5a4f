"""The invariant suites behind ``ncdet verify``.

Each suite draws its instances from a generator seeded with
(seed, position of the suite in ``SUITES``), so its outcome depends only on
the seed and the scale, never on which other suites ran.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ncdet import config
from ncdet.algebra.quaternion import AlgebraParams, Quaternion, conj, norm, trace
from ncdet.algebra.scalars import format_scalar, is_zero_scalar
from ncdet.determinants.cramer import (
    solve_left,
    solve_left_hermitian,
    solve_right,
    solve_right_hermitian,
)
from ncdet.determinants.double import ddet, double_adjoint, inverse
from ncdet.determinants.hermitian import hermitian_det, hermitian_inverse, mdet
from ncdet.determinants.rank import principal_minor_rank, rank
from ncdet.determinants.rowcol import (
    basic_property_checks,
    cdet,
    cdet_by_expansion,
    determinant_by_permutations,
    rdet,
    rdet_by_expansion,
)
from ncdet.errors import InternalDisagreementError, SingularMatrixError, UndefinedValueError
from ncdet.matrix.indexing import format_position
from ncdet.matrix.qmatrix import QMatrix
from ncdet.quasi.correspondence import quasidet_via_rc
from ncdet.quasi.elimination import quasi_solve, quasi_solve_left, solve_by_quasideterminants
from ncdet.quasi.quasideterminant import (
    block_inverse_minor,
    quasideterminant,
    quasideterminant_table,
    quasideterminant_via_inverse,
)
from ncdet.verify.oracles import (
    bareiss_det,
    cdet_2x2,
    ddet_2x2,
    leibniz_det,
    quasideterminants_2x2,
    rdet_2x2,
    real_parts,
)
from ncdet.verify.report import Counterexample, SuiteResult, VerifyReport
from ncdet.verify.sampling import (
    dependent_column_matrix,
    left_row_combination,
    low_rank_matrix,
    random_entrywise_invertible,
    random_hermitian,
    random_invertible_matrix,
    random_invertible_quaternion,
    random_matrix,
    random_quaternion,
    random_real_matrix,
    right_column_combination,
)

logger = logging.getLogger(__name__)

SCALES = ("small", "full")

WORKED_EXAMPLE = [["0,1,0,0", "0,0,1,0"], ["0,0,1,0", "0,-1,0,0"]]


@dataclass
class SuiteContext:
    """What a suite body works with: its generator, the scale and the result it fills."""

    rng: np.random.Generator
    scale: str
    result: SuiteResult
    params: AlgebraParams = field(default_factory=AlgebraParams.hamilton)
    focus: dict[str, QMatrix] = field(default_factory=dict)

    def count(self, small: int, full: int) -> int:
        return full if self.scale == "full" else small

    def examine(self, **operands: QMatrix) -> None:
        """Name the operands of the checks that follow; failures dump them."""
        self.focus = dict(operands)

    def check(self, ok: bool, detail: str) -> bool:
        self.result.cases += 1
        if not ok:
            logger.debug("Suite %s: %s", self.result.name, detail)
            self.result.counterexamples.append(Counterexample.of(detail, **self.focus))
        return ok

    def equal(self, lhs: object, rhs: object, what: str) -> bool:
        return self.check(lhs == rhs, f"{what}: {lhs} != {rhs}")


SuiteBody = Callable[[SuiteContext], None]


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    body: SuiteBody


SUITES: list[Suite] = []


def suite(name: str, description: str) -> Callable[[SuiteBody], SuiteBody]:
    """Register a suite body under ``name``; registration order fixes its seed."""

    def register(body: SuiteBody) -> SuiteBody:
        SUITES.append(Suite(name, description, body))
        return body

    return register


def _cycle(k: int, low: int, high: int) -> int:
    """k-th size in the repeating sequence low, low+1, ..., high."""
    return low + k % (high - low + 1)


# ---------------------------------------------------------------------------
# Quaternion algebra
# ---------------------------------------------------------------------------


@suite("quaternion-laws", "associativity, trace symmetry, multiplicative norm, conjugation")
def _quaternion_laws(ctx: SuiteContext) -> None:
    for params in (ctx.params, AlgebraParams(2, -3)):
        for _ in range(ctx.count(20, 200)):
            p, q, r = (random_quaternion(ctx.rng, params) for _ in range(3))
            ctx.examine(quaternions=QMatrix.row([p, q, r]))
            ctx.equal((p * q) * r, p * (q * r), "(pq)r = p(qr)")
            ctx.equal(trace(p * q), trace(q * p), "t(pq) = t(qp)")
            ctx.equal(norm(p * q), norm(p) * norm(q), "n(pq) = n(p)n(q)")
            ctx.equal(norm(conj(q)), norm(q), "n(conj q) = n(q)")
            ctx.equal(trace(conj(q)), trace(q), "t(conj q) = t(q)")
            ctx.equal(conj(p + q), conj(p) + conj(q), "conj(p + q) = conj p + conj q")
            ctx.equal(conj(p * q), conj(q) * conj(p), "conj(pq) = conj(q)conj(p)")
            ctx.equal(p * conj(p), Quaternion.scalar(norm(p), params), "p conj(p) = n(p)")


@suite("definite-norm", "over H(-1,-1) n(q) = 0 exactly when q = 0")
def _definite_norm(ctx: SuiteContext) -> None:
    zero = Quaternion.zero(ctx.params)
    ctx.examine(q=QMatrix.row([zero]))
    ctx.check(is_zero_scalar(norm(zero)), "n(0) != 0")
    for _ in range(ctx.count(50, 500)):
        q = random_quaternion(ctx.rng, ctx.params)
        ctx.examine(q=QMatrix.row([q]))
        ctx.check((norm(q) > 0) != q.is_zero, f"n({q}) = {format_scalar(norm(q))}")


@suite("multiplication-table", "k^2, ik, ki, jk, kj follow from the four defining rules")
def _multiplication_table(ctx: SuiteContext) -> None:
    for a, b in ((-1, -1), (2, -3), (1, 1), (-2, 5)):
        params = AlgebraParams(a, b)
        one, i, j, k = (Quaternion.basis(name, params) for name in "1ijk")
        ctx.examine(basis=QMatrix.row([one, i, j, k]))
        ctx.equal(i * i, one.scale(params.a), f"{params}: i^2 = a")
        ctx.equal(j * j, one.scale(params.b), f"{params}: j^2 = b")
        ctx.equal(i * j, k, f"{params}: ij = k")
        ctx.equal(j * i, -k, f"{params}: ji = -k")
        ctx.equal(k * k, (i * j) * (i * j), f"{params}: k^2 = (ij)(ij)")
        ctx.equal(k * k, one.scale(-params.a * params.b), f"{params}: k^2 = -ab")
        ctx.equal(i * k, (i * i) * j, f"{params}: ik = (ii)j")
        ctx.equal(i * k, j.scale(params.a), f"{params}: ik = aj")
        ctx.equal(k * i, -(j.scale(params.a)), f"{params}: ki = -aj")
        ctx.equal(k * j, i * (j * j), f"{params}: kj = i(jj)")
        ctx.equal(k * j, i.scale(params.b), f"{params}: kj = bi")
        ctx.equal(j * k, -(i.scale(params.b)), f"{params}: jk = -bi")


@suite("trace-rearrangement", "cyclic rearrangement of four-factor products under the trace")
def _trace_rearrangement(ctx: SuiteContext) -> None:
    for _ in range(ctx.count(20, 100)):
        A = random_matrix(ctx.rng, 2, 2, ctx.params)
        ctx.examine(A=A)
        a11, a12, a21, a22 = A[0, 0], A[0, 1], A[1, 0], A[1, 1]
        lhs = a12 * conj(a22) * a21 * conj(a11) + a11 * conj(a21) * a22 * conj(a12)
        rhs = conj(a21) * a22 * conj(a12) * a11 + conj(a11) * a12 * conj(a22) * a21
        ctx.equal(lhs, rhs, "rearranged trace of conj(a11) a12 conj(a22) a21")


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


@suite("matrix-structure", "associativity, adjoint laws, Hermitian Gram matrices, edit commuting")
def _matrix_structure(ctx: SuiteContext) -> None:
    for k in range(ctx.count(10, 50)):
        m, n, p = (int(x) for x in ctx.rng.integers(1, 5, size=3))
        A = random_matrix(ctx.rng, m, n, ctx.params)
        B = random_matrix(ctx.rng, n, p, ctx.params)
        C = random_matrix(ctx.rng, p, m, ctx.params)
        ctx.examine(A=A, B=B, C=C)
        ctx.equal((A @ B) @ C, A @ (B @ C), "(AB)C = A(BC)")
        ctx.equal(A.adjoint().adjoint(), A, "A** = A")
        ctx.equal((A @ B).adjoint(), B.adjoint() @ A.adjoint(), "(AB)* = B*A*")
        ctx.check((A @ A.adjoint()).is_hermitian(), "AA* is not Hermitian")
        ctx.check((A.adjoint() @ A).is_hermitian(), "A*A is not Hermitian")

        s = _cycle(k, 3, 4)
        S = random_matrix(ctx.rng, s, s, ctx.params)
        row = random_matrix(ctx.rng, 1, s, ctx.params)
        col = random_matrix(ctx.rng, s, 1, ctx.params)
        ctx.examine(S=S, row=row, col=col)
        i = k % s
        d = (i + 1) % s
        shifted = i if i < d else i - 1
        ctx.equal(
            S.replace_row(i, row).delete_rows([d]),
            S.delete_rows([d]).replace_row(shifted, row),
            f"row {i + 1} replacement commutes with deleting row {d + 1}",
        )
        ctx.equal(
            S.replace_col(i, col).delete_cols([d]),
            S.delete_cols([d]).replace_col(shifted, col),
            f"column {i + 1} replacement commutes with deleting column {d + 1}",
        )


# ---------------------------------------------------------------------------
# Row and column determinants
# ---------------------------------------------------------------------------


@suite("commutative-degeneration", "real matrices: all 2n determinants equal the classical one")
def _commutative_degeneration(ctx: SuiteContext) -> None:
    max_n = ctx.count(5, 6)
    for k in range(ctx.count(10, 50)):
        n = _cycle(k, 1, max_n)
        A = random_real_matrix(ctx.rng, n, ctx.params)
        ctx.examine(A=A)
        expected = bareiss_det(real_parts(A))
        ctx.equal(leibniz_det(real_parts(A)), expected, "cycle-sign Leibniz sum vs Bareiss")
        for idx in range(n):
            ctx.equal(rdet(A, idx), expected, f"rdet_{idx + 1} vs Bareiss")
            ctx.equal(cdet(A, idx), expected, f"cdet_{idx + 1} vs Bareiss")


@suite("enumeration-paths", "cycle walk agrees with the per-permutation reference sum")
def _enumeration_paths(ctx: SuiteContext) -> None:
    for k in range(ctx.count(5, 20)):
        n = _cycle(k, 1, 4)
        A = random_matrix(ctx.rng, n, n, ctx.params)
        ctx.examine(A=A)
        for idx in range(n):
            ctx.equal(rdet(A, idx), determinant_by_permutations(A, idx, "row"), f"rdet_{idx + 1}")
            ctx.equal(
                cdet(A, idx), determinant_by_permutations(A, idx, "column"), f"cdet_{idx + 1}"
            )


@suite("conjugation-duality", "rdet_i(A*) = conj(cdet_i A)")
def _conjugation_duality(ctx: SuiteContext) -> None:
    max_n = ctx.count(4, 5)
    for k in range(ctx.count(10, 50)):
        n = _cycle(k, 1, max_n)
        A = random_matrix(ctx.rng, n, n, ctx.params)
        ctx.examine(A=A)
        adj = A.adjoint()
        for idx in range(n):
            ctx.equal(rdet(adj, idx), conj(cdet(A, idx)), f"rdet_{idx + 1}(A*)")


@suite("cofactor-expansion", "rdet and cdet equal their cofactor expansions")
def _cofactor_expansion(ctx: SuiteContext) -> None:
    max_n = ctx.count(4, 5)
    for k in range(ctx.count(6, 30)):
        n = _cycle(k, 2, max_n)
        A = random_matrix(ctx.rng, n, n, ctx.params)
        ctx.examine(A=A)
        for idx in range(n):
            ctx.equal(rdet_by_expansion(A, idx), rdet(A, idx), f"expansion of rdet_{idx + 1}")
            ctx.equal(cdet_by_expansion(A, idx), cdet(A, idx), f"expansion of cdet_{idx + 1}")


@suite("basic-properties", "zero rows, one-sided scaling and additivity of rdet/cdet")
def _basic_properties(ctx: SuiteContext) -> None:
    for k in range(ctx.count(4, 20)):
        n = _cycle(k, 2, 4)
        A = random_matrix(ctx.rng, n, n, ctx.params)
        q = random_invertible_quaternion(ctx.rng, ctx.params)
        ctx.examine(A=A, q=QMatrix.row([q]))
        report = basic_property_checks(A, q, zero_row=int(ctx.rng.integers(n)))
        for check in report.checks:
            ctx.check(check.passed, f"{check.name}: {check.detail}")


@suite("hermitian-equality", "B*B: all 2n determinants coincide, are real and equal mdet")
def _hermitian_equality(ctx: SuiteContext) -> None:
    for k in range(ctx.count(6, 50)):
        n = _cycle(k, 2, 4)
        B = random_matrix(ctx.rng, n, n, ctx.params)
        H = B.adjoint() @ B
        ctx.examine(B=B)
        reference = mdet(H)
        ctx.check(reference.is_real, f"mdet(B*B) = {reference} has an imaginary part")
        for idx in range(n):
            ctx.equal(rdet(H, idx), reference, f"rdet_{idx + 1}(B*B) vs mdet")
            ctx.equal(cdet(H, idx), reference, f"cdet_{idx + 1}(B*B) vs mdet")
        ctx.equal(hermitian_det(H), reference.real_part, "hermitian_det(B*B) vs mdet")


@suite("dependent-lines", "a dependent column, row or column combination forces determinant 0")
def _linear_combinations(ctx: SuiteContext) -> None:
    zero = Quaternion.zero(ctx.params)
    for k in range(ctx.count(5, 30)):
        n = _cycle(k, 2, 4)
        A = dependent_column_matrix(ctx.rng, n, ctx.params)
        ctx.examine(A=A)
        d = ddet(A)
        ctx.check(is_zero_scalar(d), f"ddet = {format_scalar(d)} with a dependent last column")

        H = random_hermitian(ctx.rng, n, ctx.params)
        i = k % n
        by_row = H.replace_row(i, left_row_combination(ctx.rng, H, i))
        by_col = H.replace_col(i, right_column_combination(ctx.rng, H, i))
        ctx.examine(H=H, by_row=by_row, by_col=by_col)
        ctx.equal(rdet(by_row, i), zero, f"rdet_{i + 1} after a left row combination")
        ctx.equal(cdet(by_col, i), zero, f"cdet_{i + 1} after a right column combination")


# ---------------------------------------------------------------------------
# Double determinant, inverse and solvers
# ---------------------------------------------------------------------------


@suite("ddet-2x2", "ddet, rdet_1 and cdet_1 of 2x2 matrices against closed forms")
def _ddet_2x2(ctx: SuiteContext) -> None:
    for _ in range(ctx.count(20, 100)):
        A = random_matrix(ctx.rng, 2, 2, ctx.params)
        ctx.examine(A=A)
        ctx.equal(ddet(A), ddet_2x2(A), "ddet vs closed form")
        ctx.equal(rdet(A, 0), rdet_2x2(A), "rdet_1 vs a11 a22 - a12 a21")
        ctx.equal(cdet(A, 0), cdet_2x2(A), "cdet_1 vs a22 a11 - a12 a21")


@suite("ddet-multiplicativity", "ddet(AB) = ddet A ddet B and det(AA*) = det(A*A)")
def _ddet_multiplicativity(ctx: SuiteContext) -> None:
    for _ in range(ctx.count(10, 50)):
        A = random_matrix(ctx.rng, 3, 3, ctx.params)
        B = random_matrix(ctx.rng, 3, 3, ctx.params)
        ctx.examine(A=A, B=B)
        ctx.equal(ddet(A @ B), ddet(A) * ddet(B), "ddet(AB) vs ddet A ddet B")
    for k in range(ctx.count(5, 50)):
        n = _cycle(k, 3, 4)
        A = random_matrix(ctx.rng, n, n, ctx.params)
        ctx.examine(A=A)
        ctx.equal(hermitian_det(A @ A.adjoint()), hermitian_det(A.adjoint() @ A), "det(AA*)")


@suite("inverse", "A A^-1 = A^-1 A = I, L = R, involution and adjoint compatibility")
def _inverse(ctx: SuiteContext) -> None:
    identity = QMatrix.identity(4, ctx.params)
    for _ in range(ctx.count(3, 30)):
        A = random_invertible_matrix(ctx.rng, 4, ctx.params)
        ctx.examine(A=A)
        ctx.equal(double_adjoint(A, "left"), double_adjoint(A, "right"), "L vs R adjoint")
        inv = inverse(A)
        ctx.equal(A @ inv, identity, "A A^-1")
        ctx.equal(inv @ A, identity, "A^-1 A")

    identity = QMatrix.identity(3, ctx.params)
    for _ in range(ctx.count(3, 20)):
        A = random_invertible_matrix(ctx.rng, 3, ctx.params)
        ctx.examine(A=A)
        inv = inverse(A)
        ctx.equal(inverse(inv), A, "inverse(inverse(A))")
        ctx.equal(inv.adjoint(), inverse(A.adjoint()), "(A^-1)* vs (A*)^-1")

        H = random_hermitian(ctx.rng, 3, ctx.params)
        ctx.examine(H=H)
        if is_zero_scalar(hermitian_det(H)):
            continue
        right = hermitian_inverse(H, "right")
        ctx.equal(H @ right, identity, "H times its right-cofactor inverse")
        ctx.equal(hermitian_inverse(H, "left"), right, "left vs right Hermitian inverse")

    S = dependent_column_matrix(ctx.rng, 3, ctx.params)
    ctx.examine(S=S)
    try:
        inverse(S)
        ctx.check(False, "a matrix with a dependent column was inverted")
    except SingularMatrixError:
        ctx.check(True, "")


@suite("solver-agreement", "Cramer, inverse, elimination and quasideterminant solutions agree")
def _solver_agreement(ctx: SuiteContext) -> None:
    for _ in range(ctx.count(3, 30)):
        A = random_invertible_matrix(ctx.rng, 4, ctx.params)
        y = random_matrix(ctx.rng, 4, 1, ctx.params)
        z = random_matrix(ctx.rng, 1, 4, ctx.params)
        ctx.examine(A=A, y=y, z=z)
        inv = inverse(A)

        x = solve_right(A, y)
        ctx.equal(A @ x, y, "residual of Cramer A x = y")
        ctx.equal(inv @ y, x, "A^-1 y vs Cramer")
        ctx.equal(quasi_solve(A, y), x, "elimination vs Cramer")
        try:
            ctx.equal(solve_by_quasideterminants(A, y), x, "quasideterminant sum vs Cramer")
        except UndefinedValueError:
            logger.debug("Skipping quasideterminant solve: some |A|_ji undefined")

        w = solve_left(A, z)
        ctx.equal(w @ A, z, "residual of Cramer x A = z")
        ctx.equal(z @ inv, w, "z A^-1 vs Cramer")
        ctx.equal(quasi_solve_left(A, z), w, "left elimination vs Cramer")

    for k in range(ctx.count(3, 20)):
        n = _cycle(k, 2, 4)
        H = random_hermitian(ctx.rng, n, ctx.params)
        y = random_matrix(ctx.rng, n, 1, ctx.params)
        z = random_matrix(ctx.rng, 1, n, ctx.params)
        ctx.examine(H=H, y=y, z=z)
        if is_zero_scalar(hermitian_det(H)):
            continue
        ctx.equal(solve_right_hermitian(H, y), solve_right(H, y), "Hermitian right solver")
        ctx.equal(solve_left_hermitian(H, z), solve_left(H, z), "Hermitian left solver")


# ---------------------------------------------------------------------------
# Quasideterminants
# ---------------------------------------------------------------------------


@suite("correspondence", "double-cofactor forms, inverse entries and the direct expression agree")
def _correspondence(ctx: SuiteContext) -> None:
    for k in range(ctx.count(6, 30)):
        n = _cycle(k, 2, 3)
        A = random_invertible_matrix(ctx.rng, n, ctx.params)
        ctx.examine(A=A)
        for p, q in product(range(n), repeat=2):
            where = format_position(p, q)
            try:
                result = quasidet_via_rc(A, p, q)
            except InternalDisagreementError as exc:
                ctx.check(False, str(exc))
                continue
            direct = result.direct
            if direct is None or direct.value is None:
                continue
            ctx.equal(result.column_form.value, direct.value, f"column form at {where}")
            ctx.equal(result.row_form.value, direct.value, f"row form at {where}")
            via_inverse = quasideterminant_via_inverse(A, p, q)
            if via_inverse.defined:
                ctx.equal(via_inverse.value, direct.value, f"inverse-entry form at {where}")


@suite("quasideterminant-2x2", "the four 2x2 quasideterminants against closed forms")
def _quasideterminant_2x2(ctx: SuiteContext) -> None:
    for _ in range(ctx.count(10, 50)):
        A = random_entrywise_invertible(ctx.rng, 2, ctx.params)
        ctx.examine(A=A)
        table = quasideterminant_table(A)
        closed = quasideterminants_2x2(A)
        for i, j in product(range(2), repeat=2):
            ctx.equal(table[i][j].unwrap(), closed[i][j], f"|A|{format_position(i, j)}")


@suite("block-inverse", "Schur-complement blocks equal the blocks of A^-1")
def _block_inverse(ctx: SuiteContext) -> None:
    for k in range(ctx.count(3, 20)):
        n = _cycle(k, 3, 4)
        A = random_invertible_matrix(ctx.rng, n, ctx.params)
        ctx.examine(A=A)
        inv = inverse(A)
        blocks = [(list(range(s)), list(range(s))) for s in range(1, n)]
        blocks += [(list(range(s, n)), list(range(s, n))) for s in range(1, n)]
        blocks.append(([0, 2], [1, 2]))
        for rows, cols in blocks:
            try:
                got = block_inverse_minor(A, rows, cols)
            except UndefinedValueError:
                continue
            ctx.equal(got, inv.submatrix(cols, rows), f"block rows {rows} columns {cols}")


@suite("undefined-vs-singular", "undefined quasideterminants and singularity are unrelated")
def _undefined_vs_singular(ctx: SuiteContext) -> None:
    one = Quaternion.one(ctx.params)
    I2 = QMatrix.identity(2, ctx.params)
    ctx.examine(A=I2)
    ctx.equal(ddet(I2), 1, "ddet(I2)")
    for i, j in ((0, 1), (1, 0)):
        result = quasideterminant(I2, i, j)
        ctx.check(
            not result.defined and bool(result.failure_witness),
            f"|I2|{format_position(i, j)} should be undefined with a witness",
        )
    for i in range(2):
        ctx.equal(quasideterminant(I2, i, i).value, one, f"|I2|{format_position(i, i)}")

    W = QMatrix.from_text(WORKED_EXAMPLE, ctx.params)
    ctx.examine(A=W)
    ctx.check(is_zero_scalar(ddet(W)), "ddet of the worked example should vanish")
    ctx.check(not rdet(W, 0).is_zero, "rdet_1 of the worked example should not vanish")

    for k in range(ctx.count(3, 10)):
        n = _cycle(k, 3, 4)
        A = low_rank_matrix(ctx.rng, n, n - 2, ctx.params)
        ctx.examine(A=A)
        for i, j in product(range(n), repeat=2):
            ctx.check(
                not quasideterminant(A, i, j).defined,
                f"|A|{format_position(i, j)} defined although rank A <= {n - 2}",
            )


# ---------------------------------------------------------------------------
# Rank, regression and parallelism
# ---------------------------------------------------------------------------


@suite("rank-consistency", "column elimination rank equals principal-minor rank of A*A and AA*")
def _rank_consistency(ctx: SuiteContext) -> None:
    for k in range(ctx.count(6, 30)):
        if k % 2 == 0:
            bound = 3
            A = random_matrix(ctx.rng, 3, 4, ctx.params)
        else:
            bound = _cycle(k // 2, 1, 2)
            A = random_matrix(ctx.rng, 3, bound, ctx.params) @ random_matrix(
                ctx.rng, bound, 4, ctx.params
            )
        ctx.examine(A=A)
        r = rank(A)
        ctx.check(r <= bound, f"rank {r} exceeds the factor width {bound}")
        if not ctx.params.positive_definite:
            continue
        ctx.equal(principal_minor_rank(A.adjoint() @ A), r, "principal-minor rank of A*A")
        ctx.equal(principal_minor_rank(A @ A.adjoint()), r, "principal-minor rank of AA*")


@suite("worked-example", "the 2x2 example [[i, j], [j, -i]] over H(-1,-1)")
def _worked_example(ctx: SuiteContext) -> None:
    A = QMatrix.from_text(WORKED_EXAMPLE, ctx.params)
    gram = QMatrix.from_text([["2,0,0,0", "0,0,0,-2"], ["0,0,0,2", "2,0,0,0"]], ctx.params)
    two = Quaternion.scalar(2, ctx.params)
    ctx.examine(A=A)
    ctx.equal(A.adjoint() @ A, gram, "A*A")
    ctx.equal(ddet(A), 0, "ddet A")
    for idx in range(2):
        ctx.equal(rdet(A, idx), two, f"rdet_{idx + 1} A")
        ctx.equal(cdet(A, idx), two, f"cdet_{idx + 1} A")
    ctx.equal(rank(A), 1, "rank A")
    ctx.equal(principal_minor_rank(gram), 1, "principal-minor rank of A*A")


@suite("worker-independence", "rdet/cdet values do not depend on the worker count")
def _worker_independence(ctx: SuiteContext) -> None:
    for _ in range(ctx.count(1, 3)):
        A = random_matrix(ctx.rng, 5, 5, ctx.params)
        ctx.examine(A=A)
        for idx in (0, 4):
            ctx.equal(rdet(A, idx, workers=2), rdet(A, idx, workers=1), f"rdet_{idx + 1}")
            ctx.equal(cdet(A, idx, workers=2), cdet(A, idx, workers=1), f"cdet_{idx + 1}")


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


def suite_names() -> list[str]:
    return [s.name for s in SUITES]


def run_suites(
    seed: int, scale: str = "small", names: Iterable[str] | None = None
) -> VerifyReport:
    """Run the registered suites (or the named subset) and collect a report.

    A suite that raises is recorded as failed with the exception as its
    counterexample; the remaining suites still run.

    Raises:
        ValueError: unknown scale or suite name, or a negative seed.
    """
    if scale not in SCALES:
        raise ValueError(f"scale must be one of {SCALES}, got {scale!r}.")
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}.")
    wanted = set(names) if names is not None else None
    if wanted is not None and wanted - set(suite_names()):
        raise ValueError(f"Unknown suites: {sorted(wanted - set(suite_names()))}.")

    report = VerifyReport(seed, scale, config.settings_summary())
    for position, s in enumerate(SUITES):
        if wanted is not None and s.name not in wanted:
            continue
        result = SuiteResult(s.name, s.description)
        ctx = SuiteContext(np.random.default_rng([seed, position]), scale, result)
        logger.info("Running suite %s (%s scale)", s.name, scale)
        try:
            s.body(ctx)
        except Exception as exc:
            logger.exception("Suite %s raised", s.name)
            result.counterexamples.append(
                Counterexample.of(f"{type(exc).__name__}: {exc}", **ctx.focus)
            )
        logger.info("Suite %s: %d cases, %d failures", s.name, result.cases, result.failures)
        report.suites.append(result)
    return report
