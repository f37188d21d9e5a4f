"""Row and column determinants, cofactor expansions and property checks.

rdet_i sums n! signed monomials read along left-ordered cycle notation
anchored at row i; cdet_j is its mirror anchored at column j. The primary
engine walks cycle notations depth first, so monomials sharing a prefix
share its partial product. ``determinant_by_permutations`` is the plain
reference enumeration over all permutations.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Literal

from ncdet import config
from ncdet.algebra.quaternion import Quaternion, conj
from ncdet.determinants.cycles import all_permutations, left_ordered, right_ordered
from ncdet.errors import EnumerationLimitError, ShapeError
from ncdet.matrix.indexing import check_index, to_external
from ncdet.matrix.qmatrix import QMatrix

logger = logging.getLogger(__name__)

Entries = tuple[tuple[Quaternion, ...], ...]
Side = Literal["row", "column"]


# -- cycle walk ---------------------------------------------------------------


def _walk_chunk(entries: Entries, leader: int, first: int, mirror: bool) -> tuple[Quaternion, int]:
    """Sum the signed monomials whose leader cycle begins leader -> first.

    ``first == leader`` selects the permutations fixing the leader. With
    ``mirror`` each step c -> u prepends a_{u,c} instead of appending a_{c,u}.

    Returns:
        (partial sum, number of monomials visited)
    """
    n = len(entries)
    used = [False] * n
    terms: list[Quaternion] = []

    def step(prod: Quaternion | None, frm: int, to: int) -> Quaternion:
        if mirror:
            factor = entries[to][frm]
            return factor if prod is None else factor * prod
        factor = entries[frm][to]
        return factor if prod is None else prod * factor

    def close(prod: Quaternion | None, start: int, current: int, cycles: int, placed: int) -> None:
        prod = step(prod, current, start)
        cycles += 1
        if placed == n:
            terms.append(prod if (n - cycles) % 2 == 0 else -prod)
            return
        nxt = used.index(False)
        used[nxt] = True
        grow(prod, nxt, nxt, cycles, placed + 1)
        used[nxt] = False

    def grow(prod: Quaternion | None, start: int, current: int, cycles: int, placed: int) -> None:
        close(prod, start, current, cycles, placed)
        for u in range(n):
            if not used[u]:
                used[u] = True
                grow(step(prod, current, u), start, u, cycles, placed + 1)
                used[u] = False

    used[leader] = True
    if first == leader:
        close(None, leader, leader, 0, 1)
    else:
        used[first] = True
        grow(step(None, leader, first), leader, first, 0, 2)

    total = Quaternion.zero(entries[0][0].params)
    for t in terms:
        total = total + t
    return total, len(terms)


def _check_enumeration(n: int, allow_large: bool) -> None:
    if n > config.MAX_ENUM_ORDER and not allow_large:
        raise EnumerationLimitError(
            f"Direct enumeration of a {n}x{n} determinant ({math.factorial(n)} monomials) "
            f"exceeds the limit n <= {config.MAX_ENUM_ORDER}; pass allow_large to override."
        )


def cycle_walk(
    A: QMatrix,
    leader: int,
    *,
    mirror: bool = False,
    workers: int | None = None,
    allow_large: bool = False,
) -> tuple[Quaternion, int]:
    """Run the walk for every first step of the leader cycle and reduce in chunk order.

    The reduction order is fixed by chunk index, so float-mode results do not
    depend on ``workers``.
    """
    n = A.require_square("row/column determinant")
    check_index(leader, n, name="row" if not mirror else "column")
    _check_enumeration(n, allow_large)
    entries: Entries = tuple(tuple(r) for r in A.to_rows())
    firsts = [leader] + [u for u in range(n) if u != leader]
    workers = config.WORKERS if workers is None else workers

    task = partial(_walk_chunk, entries, leader, mirror=mirror)
    if workers > 1 and n > 2:
        logger.info("Fanning %d chunks of a %dx%d sum out to %d workers", n, n, n, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(task, firsts))
    else:
        chunks = [task(first) for first in firsts]

    total = Quaternion.zero(A.params)
    count = 0
    for value, visited in chunks:
        total = total + value
        count += visited
    logger.debug("Walked %d monomials (leader %d, mirror=%s)", count, to_external(leader), mirror)
    return total, count


def rdet(
    A: QMatrix, i: int, *, workers: int | None = None, allow_large: bool = False
) -> Quaternion:
    """i-th row determinant (0-based i).

    Raises:
        ShapeError: A is not square.
        EnumerationLimitError: n exceeds the enumeration bound.
    """
    return cycle_walk(A, i, workers=workers, allow_large=allow_large)[0]


def cdet(
    A: QMatrix, j: int, *, workers: int | None = None, allow_large: bool = False
) -> Quaternion:
    """j-th column determinant (0-based j), by mirrored enumeration."""
    return cycle_walk(A, j, mirror=True, workers=workers, allow_large=allow_large)[0]


def cdet_via_adjoint(A: QMatrix, j: int, **kwargs: object) -> Quaternion:
    """conj(rdet_j(A*)), the duality path for cdet_j."""
    return conj(rdet(A.adjoint(), j, **kwargs))  # type: ignore[arg-type]


def _block_monomial(
    A: QMatrix, perm: Sequence[int], block: Sequence[int], anchor: int
) -> Quaternion:
    """a_{c0,p(c0)} a_{p(c0),p(p(c0))} ... around one cycle, starting at its anchor."""
    prod = None
    c = anchor
    for _ in block:
        factor = A[c, perm[c]]
        prod = factor if prod is None else prod * factor
        c = perm[c]
    return prod  # type: ignore[return-value]


def determinant_by_permutations(A: QMatrix, index: int, side: Side = "row") -> Quaternion:
    """Reference enumeration of rdet_index (side "row") or cdet_index (side "column").

    Each permutation is normalized through ``left_ordered`` / ``right_ordered``
    and its monomial read block by block from each block's anchor.
    """
    n = A.require_square("determinant_by_permutations")
    check_index(index, n, name=side)
    _check_enumeration(n, False)
    total = Quaternion.zero(A.params)
    for perm in all_permutations(n):
        oc = left_ordered(perm, index) if side == "row" else right_ordered(perm, index)
        anchors = dict(zip(oc.cycles, oc.anchors()))
        prod = None
        for block in oc.written():
            m = _block_monomial(A, perm, block, anchors[block])
            prod = m if prod is None else prod * m
        total = total + (prod if oc.sign > 0 else -prod)  # type: ignore[operator]
    return total


# -- reports ------------------------------------------------------------------


@dataclass
class DetReport:
    """One determinant value with its provenance."""

    value: Quaternion
    index: int | None
    kind: str
    monomial_count: int
    n: int

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "index": to_external(self.index) if self.index is not None else None,
            "n": self.n,
            "value": str(self.value),
            "monomial_count": self.monomial_count,
        }


def row_report(A: QMatrix, i: int, **kwargs: object) -> DetReport:
    value, count = cycle_walk(A, i, **kwargs)  # type: ignore[arg-type]
    return DetReport(value, i, "rdet", count, A.rows)


def column_report(A: QMatrix, j: int, **kwargs: object) -> DetReport:
    value, count = cycle_walk(A, j, mirror=True, **kwargs)  # type: ignore[arg-type]
    return DetReport(value, j, "cdet", count, A.rows)


# -- cofactors ----------------------------------------------------------------


def _require_expandable(A: QMatrix) -> int:
    n = A.require_square("cofactor")
    if n < 2:
        raise ShapeError("Cofactors need n >= 2.")
    return n


def right_cofactor(A: QMatrix, i: int, j: int) -> Quaternion:
    """Right ij-th cofactor R_ij, so that rdet_i A = sum_j a_ij R_ij.

    R_ii = rdet_k(A^{ii}) with k the smallest index other than i; for i != j,
    R_ij = -rdet_j of A(i -> j), the matrix with column j replaced by column
    i and then row i and column i deleted.
    """
    n = _require_expandable(A)
    check_index(i, n, name="row")
    check_index(j, n, name="column")
    if i == j:
        # the smallest index other than i is position 0 of the minor
        return rdet(A.delete_rowcol(i, i), 0)
    minor = A.col_replace_then_delete(i, j)
    return -rdet(minor, j if j < i else j - 1)


def left_cofactor(A: QMatrix, i: int, j: int) -> Quaternion:
    """Left ij-th cofactor L_ij, so that cdet_j A = sum_i L_ij a_ij.

    L_jj = cdet_k(A^{jj}); for i != j, L_ij = -cdet_i of the matrix with row i
    replaced by row j and then row j and column j deleted.
    """
    n = _require_expandable(A)
    check_index(i, n, name="row")
    check_index(j, n, name="column")
    if i == j:
        return cdet(A.delete_rowcol(j, j), 0)
    minor = A.row_replace_then_delete(j, i)
    return -cdet(minor, i if i < j else i - 1)


def rdet_by_expansion(A: QMatrix, i: int) -> Quaternion:
    n = _require_expandable(A)
    total = Quaternion.zero(A.params)
    for j in range(n):
        total = total + A[i, j] * right_cofactor(A, i, j)
    return total


def cdet_by_expansion(A: QMatrix, j: int) -> Quaternion:
    n = _require_expandable(A)
    total = Quaternion.zero(A.params)
    for i in range(n):
        total = total + left_cofactor(A, i, j) * A[i, j]
    return total


# -- property checks ----------------------------------------------------------


@dataclass
class PropertyCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class PropertyReport:
    """Outcome of ``basic_property_checks``; failures are listed, never raised."""

    checks: list[PropertyCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[PropertyCheck]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, lhs: Quaternion, rhs: Quaternion) -> None:
        ok = lhs == rhs
        self.checks.append(PropertyCheck(name, ok, "" if ok else f"{lhs} != {rhs}"))

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }


def basic_property_checks(
    A: QMatrix,
    q: Quaternion | None = None,
    *,
    zero_row: int = 0,
) -> PropertyReport:
    """Check the elementary laws of rdet/cdet on A.

    - a zero row (and a zero column) makes all 2n determinants vanish;
    - rdet_i of A with row i left-multiplied by q is q * rdet_i A;
    - cdet_j of A with column j right-multiplied by q is cdet_j A * q;
    - rdet_i is additive in row i and cdet_j in column j.
    """
    n = A.require_square("basic_property_checks")
    params = A.params
    if q is None:
        q = Quaternion.of(1, 2, -1, 1, params)
    zero = Quaternion.zero(params)
    report = PropertyReport()

    zr = A.replace_row(zero_row, QMatrix.zeros(1, n, params))
    zc = A.replace_col(zero_row, QMatrix.zeros(n, 1, params))
    for k in range(n):
        report.add(f"zero-row rdet_{k + 1}", rdet(zr, k), zero)
        report.add(f"zero-row cdet_{k + 1}", cdet(zr, k), zero)
        report.add(f"zero-column rdet_{k + 1}", rdet(zc, k), zero)
        report.add(f"zero-column cdet_{k + 1}", cdet(zc, k), zero)

    adj = A.adjoint()
    for k in range(n):
        r_k = rdet(A, k)
        c_k = cdet(A, k)
        scaled_row = A.replace_row(k, A.row_at(k).scale_left(q))
        report.add(f"left row scaling rdet_{k + 1}", rdet(scaled_row, k), q * r_k)
        scaled_col = A.replace_col(k, A.col_at(k).scale_right(q))
        report.add(f"right column scaling cdet_{k + 1}", cdet(scaled_col, k), c_k * q)

        # row k = (row k - c) + c with c taken from the adjoint
        c_row = adj.row_at(k)
        b_row = A.row_at(k) - c_row
        split = rdet(A.replace_row(k, b_row), k) + rdet(A.replace_row(k, c_row), k)
        report.add(f"row additivity rdet_{k + 1}", split, r_k)
        c_col = adj.col_at(k)
        b_col = A.col_at(k) - c_col
        split = cdet(A.replace_col(k, b_col), k) + cdet(A.replace_col(k, c_col), k)
        report.add(f"column additivity cdet_{k + 1}", split, c_k)

    if report.failures:
        logger.warning("%d property checks failed", len(report.failures))
    return report
