"""Command-line entry point: ``ncdet <command> --in FILE [options]``.

Every run writes exactly one JSON document (stdout or ``--out``); logs go to
stderr. Indices on the command line are 1-based. Exit codes: 0 success,
2 parse error, 3 precondition violation, 4 undefined value, 5 disagreement
between computation paths (including a failed ``verify``).
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from ncdet import __version__, config
from ncdet.algebra.quaternion import AlgebraParams
from ncdet.algebra.scalars import format_scalar, is_zero_scalar
from ncdet.determinants.cramer import solve_left, solve_right
from ncdet.determinants.double import ddet, inverse
from ncdet.determinants.rank import principal_minor_rank, rank
from ncdet.determinants.reports import determinant_report
from ncdet.determinants.rowcol import cdet_via_adjoint, column_report, row_report
from ncdet.errors import InternalDisagreementError, NcdetError, ParseError
from ncdet.matrix.indexing import to_internal
from ncdet.matrix.io import (
    LinearSystem,
    dumps_document,
    input_digest,
    is_system_document,
    matrix_from_document,
    read_document,
    system_from_document,
)
from ncdet.matrix.qmatrix import QMatrix
from ncdet.quasi.correspondence import quasidet_via_rc
from ncdet.quasi.elimination import quasi_solve, quasi_solve_left
from ncdet.quasi.quasideterminant import quasideterminant
from ncdet.verify.suites import SCALES, run_suites, suite_names

logger = logging.getLogger(__name__)

COMMANDS = (
    "rdet", "cdet", "mdet", "ddet", "inverse", "solve", "quasidet", "qsolve", "rank", "verify"
)
METHODS = ("cramer", "inverse", "quasi")
SIDES = ("right", "left")

# index arguments each command needs; all others must be absent
REQUIRED_INDICES: dict[str, tuple[str, ...]] = {
    "rdet": ("i",),
    "cdet": ("j",),
    "quasidet": ("p", "q"),
}


@dataclass
class JobSpec:
    """One CLI invocation, validated.

    Attributes:
        command: One of ``COMMANDS``.
        input_path: Matrix (.qmat) or system (.qsys) document; unused by verify.
        i, j, p, q: 1-based index arguments.
        side: Expected side of the input system; must match it when given.
        method: Solver for ``solve``.
        parallel: Worker count for the permutation sum (None: config default).
        output_path: Where to write the document; None for stdout.
        scale: Verification scale.
        seed: Verification seed; None falls back to NCDET_SEED, then the default.
        suites: Restrict verify to these suite names.
        allow_large: Permit enumeration beyond ``config.MAX_ENUM_ORDER``.
    """

    command: str
    input_path: Path | None = None
    i: int | None = None
    j: int | None = None
    p: int | None = None
    q: int | None = None
    side: str | None = None
    method: str = "cramer"
    parallel: int | None = None
    output_path: Path | None = None
    scale: str = "small"
    seed: int | None = None
    suites: list[str] | None = None
    allow_large: bool = False

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ParseError(f"Unknown command {self.command!r}.")
        needed = REQUIRED_INDICES.get(self.command, ())
        for name in ("i", "j", "p", "q"):
            given = getattr(self, name) is not None
            if name in needed and not given:
                raise ParseError(f"{self.command} needs -{name}.")
            if name not in needed and given:
                raise ParseError(f"{self.command} takes no -{name}.")
        if self.command != "verify" and self.input_path is None:
            raise ParseError(f"{self.command} needs --in.")
        if self.side is not None and self.side not in SIDES:
            raise ParseError(f"--side must be one of {SIDES}, got {self.side!r}.")
        if self.method not in METHODS:
            raise ParseError(f"--method must be one of {METHODS}, got {self.method!r}.")
        if self.parallel is not None and self.parallel < 1:
            raise ParseError(f"--parallel needs at least one worker, got {self.parallel}.")
        if self.scale not in SCALES:
            raise ParseError(f"--scale must be one of {SCALES}, got {self.scale!r}.")
        if self.seed is not None and self.seed < 0:
            raise ParseError(f"--seed must be non-negative, got {self.seed}.")
        unknown = sorted(set(self.suites or ()) - set(suite_names()))
        if unknown:
            raise ParseError(f"Unknown suites {unknown}; known: {suite_names()}.")

    @property
    def workers(self) -> int:
        return self.parallel if self.parallel is not None else config.WORKERS


# ---------------------------------------------------------------------------
# Command handlers: (job, parsed input document) -> (algebra, result)
# ---------------------------------------------------------------------------

Handler = Callable[[JobSpec, dict[str, Any]], tuple[AlgebraParams, dict[str, Any]]]


def _matrix(source: dict[str, Any]) -> QMatrix:
    if is_system_document(source):
        raise ParseError("Expected a matrix document, got a linear system.")
    return matrix_from_document(source)


def _system(job: JobSpec, source: dict[str, Any]) -> LinearSystem:
    if not is_system_document(source):
        raise ParseError("Expected a linear system document with 'A' and 'y'.")
    system = system_from_document(source)
    if job.side is not None and job.side != system.side:
        raise ParseError(f"--side {job.side} but the input is a {system.side} system.")
    return system


def _rdet(job: JobSpec, source: dict[str, Any]) -> tuple[AlgebraParams, dict[str, Any]]:
    A = _matrix(source)
    n = A.require_square("rdet")
    i = to_internal(job.i, n, name="row")  # type: ignore[arg-type]
    report = row_report(A, i, workers=job.workers, allow_large=job.allow_large)
    return A.params, report.to_dict()


def _cdet(job: JobSpec, source: dict[str, Any]) -> tuple[AlgebraParams, dict[str, Any]]:
    A = _matrix(source)
    n = A.require_square("cdet")
    j = to_internal(job.j, n, name="column")  # type: ignore[arg-type]
    report = column_report(A, j, workers=job.workers, allow_large=job.allow_large)
    if config.CROSS_CHECK:
        dual = cdet_via_adjoint(A, j, workers=job.workers, allow_large=job.allow_large)
        if dual != report.value:
            raise InternalDisagreementError(
                f"cdet_{job.j} = {report.value} but conj(rdet_{job.j}(A*)) = {dual}",
                witness=str(A),
            )
    return A.params, report.to_dict()


def _mdet(job: JobSpec, source: dict[str, Any]) -> tuple[AlgebraParams, dict[str, Any]]:
    A = _matrix(source)
    return A.params, determinant_report(A, "mdet").to_dict()


def _ddet(job: JobSpec, source: dict[str, Any]) -> tuple[AlgebraParams, dict[str, Any]]:
    A = _matrix(source)
    d = ddet(A)
    return A.params, {"value": format_scalar(d), "invertible": not is_zero_scalar(d)}


def _inverse(job: JobSpec, source: dict[str, Any]) -> tuple[AlgebraParams, dict[str, Any]]:
    A = _matrix(source)
    inv = inverse(A, cross_check=config.CROSS_CHECK)
    return A.params, {"matrix": inv.to_text_rows()}


def _solution(system: LinearSystem, method: str) -> QMatrix:
    A, y = system.A, system.y
    if system.side == "right":
        if method == "cramer":
            return solve_right(A, y)
        if method == "inverse":
            return inverse(A) @ y
        return quasi_solve(A, y)
    if method == "cramer":
        return solve_left(A, y)
    if method == "inverse":
        return y @ inverse(A)
    return quasi_solve_left(A, y)


def _solve(job: JobSpec, source: dict[str, Any]) -> tuple[AlgebraParams, dict[str, Any]]:
    system = _system(job, source)
    method = "quasi" if job.command == "qsolve" else job.method
    x = _solution(system, method)
    logger.info("Solved %s system by %s", system.side, method)
    return system.A.params, {"side": system.side, "x": x.to_text_rows()}


def _quasidet(job: JobSpec, source: dict[str, Any]) -> tuple[AlgebraParams, dict[str, Any]]:
    A = _matrix(source)
    n = A.require_square("quasidet")
    p = to_internal(job.p, n, name="row")  # type: ignore[arg-type]
    q = to_internal(job.q, n, name="column")  # type: ignore[arg-type]
    value = quasideterminant(A, p, q).unwrap()
    result: dict[str, Any] = {"p": job.p, "q": job.q, "value": str(value)}
    if config.CROSS_CHECK and not is_zero_scalar(ddet(A)):
        result["correspondence"] = quasidet_via_rc(A, p, q).to_dict()
    return A.params, result


def _rank(job: JobSpec, source: dict[str, Any]) -> tuple[AlgebraParams, dict[str, Any]]:
    A = _matrix(source)
    r = rank(A)
    if config.CROSS_CHECK and not A.params.positive_definite:
        logger.warning(
            "Skipping principal-minor rank check over %s: not a division algebra", A.params
        )
    elif config.CROSS_CHECK and A.cols <= config.MAX_PRINCIPAL_ORDER:
        other = principal_minor_rank(A.adjoint() @ A)
        if other != r:
            raise InternalDisagreementError(
                f"Elimination rank {r} but principal-minor rank of A*A {other}", witness=str(A)
            )
    return A.params, {"rank": r}


HANDLERS: dict[str, Handler] = {
    "rdet": _rdet,
    "cdet": _cdet,
    "mdet": _mdet,
    "ddet": _ddet,
    "inverse": _inverse,
    "solve": _solve,
    "qsolve": _solve,
    "quasidet": _quasidet,
    "rank": _rank,
}


def _verify(job: JobSpec, doc: dict[str, Any]) -> int:
    seed = job.seed if job.seed is not None else config.SEED
    logger.info("Verifying at %s scale with seed %d", job.scale, seed)
    report = run_suites(seed, job.scale, job.suites)
    logger.info("Suite summary:\n%s", report.to_frame().to_string())
    doc["result"] = report.to_document()
    if report.passed:
        return 0
    doc["reproducer"] = str(report.write_reproducer(config.REPRO_DIR))
    return InternalDisagreementError.exit_code


def run(job: JobSpec) -> tuple[int, dict[str, Any]]:
    """Execute one job.

    Returns:
        (exit code, output document). Library errors never escape; they are
        reported in the document's "error" block with their exit code.
    """
    doc: dict[str, Any] = {"command": job.command}
    try:
        if job.command == "verify":
            return _verify(job, doc), doc
        source = read_document(job.input_path)  # type: ignore[arg-type]
        doc["input"] = {"path": str(job.input_path), "digest": input_digest(source)}
        params, result = HANDLERS[job.command](job, source)
        doc["scalar"] = params.kind.value
        doc["algebra"] = params.to_dict()
        doc["result"] = result
        return 0, doc
    except NcdetError as exc:
        logger.error("%s failed: %s", job.command, exc)
        doc["error"] = exc.to_dict()
        return exc.exit_code, doc


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", dest="output_path", type=Path, help="Write the document here.")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug.")

    matrix_input = argparse.ArgumentParser(add_help=False)
    matrix_input.add_argument(
        "--in", dest="input_path", type=Path, required=True, help="Input document."
    )
    matrix_input.add_argument(
        "--parallel", type=int, default=None, help="Workers for the permutation sum."
    )
    matrix_input.add_argument(
        "--allow-large",
        action="store_true",
        help=f"Allow enumeration beyond n = {config.MAX_ENUM_ORDER}.",
    )

    parser = argparse.ArgumentParser(
        prog="ncdet",
        description="Determinants, inverses and quasideterminants over quaternion algebras.",
    )
    parser.add_argument("--version", action="version", version=f"ncdet {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)
    parents = [common, matrix_input]

    sub = commands.add_parser("rdet", parents=parents, help="Row determinant rdet_i.")
    sub.add_argument("-i", type=int, required=True, help="Row index (1-based).")
    sub = commands.add_parser("cdet", parents=parents, help="Column determinant cdet_j.")
    sub.add_argument("-j", type=int, required=True, help="Column index (1-based).")
    commands.add_parser("mdet", parents=parents, help="Moore determinant of a Hermitian matrix.")
    commands.add_parser("ddet", parents=parents, help="Double determinant det(A*A).")
    commands.add_parser("inverse", parents=parents, help="Inverse via double cofactors.")
    commands.add_parser("rank", parents=parents, help="Rank by column elimination.")

    sub = commands.add_parser("solve", parents=parents, help="Solve a right or left system.")
    sub.add_argument("--side", choices=SIDES, default=None)
    sub.add_argument("--method", choices=METHODS, default="cramer")
    sub = commands.add_parser("qsolve", parents=parents, help="Solve by elimination.")
    sub.add_argument("--side", choices=SIDES, default=None)

    sub = commands.add_parser("quasidet", parents=parents, help="Quasideterminant |A|_pq.")
    sub.add_argument("-p", type=int, required=True, help="Row index (1-based).")
    sub.add_argument("-q", type=int, required=True, help="Column index (1-based).")

    sub = commands.add_parser("verify", parents=[common], help="Run the invariant suites.")
    sub.add_argument("--scale", choices=SCALES, default="small")
    sub.add_argument("--seed", type=int, default=None, help="Overrides NCDET_SEED.")
    sub.add_argument(
        "--suite", dest="suites", action="append", default=None, help="Repeatable."
    )
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    fields = (
        "input_path", "i", "j", "p", "q", "side", "method", "parallel",
        "output_path", "scale", "seed", "suites", "allow_large",
    )
    values = {name: getattr(args, name) for name in fields if hasattr(args, name)}
    return JobSpec(command=args.command, **values)


def _configure_logging(verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, config.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def emit(doc: dict[str, Any], output_path: Path | None) -> None:
    text = dumps_document(doc)
    if output_path is None:
        sys.stdout.write(text)
        return
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(text)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        job = job_from_args(args)
    except ParseError as exc:
        doc = {"command": args.command, "error": exc.to_dict()}
        emit(doc, getattr(args, "output_path", None))
        return exc.exit_code
    code, doc = run(job)
    emit(doc, job.output_path)
    return code


if __name__ == "__main__":
    sys.exit(main())
