"""Matrix (.qmat) and linear-system (.qsys) documents.

A matrix document is one JSON object::

    {"algebra": {"a": "-1", "b": "-1"}, "scalar": "rational",
     "matrix": [["0,1,0,0", "0,0,1,0"], ["0,0,1,0", "0,-1,0,0"]]}

A system document wraps two matrix documents and the side::

    {"A": <matrix document>, "y": <matrix document>, "side": "right"}
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from ncdet.algebra.quaternion import AlgebraParams
from ncdet.algebra.scalars import ScalarKind
from ncdet.errors import NcdetError, ParseError, ShapeError
from ncdet.matrix.qmatrix import QMatrix

logger = logging.getLogger(__name__)

SIDES = ("right", "left")


@dataclass(frozen=True)
class LinearSystem:
    """A x = y (side "right", y a column) or x A = y (side "left", y a row)."""

    A: QMatrix
    y: QMatrix
    side: str = "right"

    def __post_init__(self) -> None:
        if self.side not in SIDES:
            raise ParseError(f"side must be 'right' or 'left', got {self.side!r}.")
        n = self.A.require_square("A linear system")
        expected = (n, 1) if self.side == "right" else (1, n)
        if self.y.shape != expected:
            raise ShapeError(
                f"{self.side} system with {n}x{n} A needs y of shape {expected}, "
                f"got {self.y.shape}."
            )


def _parse_kind(raw: object) -> ScalarKind:
    try:
        return ScalarKind(raw if raw is not None else ScalarKind.RATIONAL.value)
    except ValueError as exc:
        raise ParseError(f"scalar must be 'rational' or 'float64', got {raw!r}.") from exc


def matrix_to_document(A: QMatrix) -> dict[str, Any]:
    return {
        "algebra": A.params.to_dict(),
        "scalar": A.params.kind.value,
        "matrix": A.to_text_rows(),
    }


def matrix_from_document(doc: object) -> QMatrix:
    """Parse a matrix document.

    Raises:
        ParseError: Missing keys, ragged rows or malformed quaternion text.
    """
    if not isinstance(doc, dict) or "matrix" not in doc or "algebra" not in doc:
        raise ParseError("Matrix document needs 'algebra' and 'matrix' keys.")
    kind = _parse_kind(doc.get("scalar"))
    params = AlgebraParams.from_dict(doc["algebra"], kind)
    rows = doc["matrix"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("'matrix' must be a nonempty list of rows.")
    if not all(isinstance(t, str) for r in rows for t in r):
        raise ParseError("Matrix entries must be strings of the form 'x0,x1,x2,x3'.")
    try:
        return QMatrix.from_text(rows, params)
    except ParseError:
        raise
    except NcdetError as exc:
        raise ParseError(str(exc)) from exc


def system_to_document(system: LinearSystem) -> dict[str, Any]:
    return {
        "A": matrix_to_document(system.A),
        "y": matrix_to_document(system.y),
        "side": system.side,
    }


def system_from_document(doc: object) -> LinearSystem:
    """Parse a system document; A and y must share one algebra."""
    if not isinstance(doc, dict) or "A" not in doc or "y" not in doc:
        raise ParseError("System document needs 'A' and 'y' keys.")
    A = matrix_from_document(doc["A"])
    y = matrix_from_document(doc["y"])
    if A.params != y.params:
        raise ParseError(f"System mixes algebras: A over {A.params}, y over {y.params}.")
    try:
        return LinearSystem(A, y, doc.get("side", "right"))
    except ShapeError as exc:
        raise ParseError(str(exc)) from exc


def dumps_document(doc: dict[str, Any]) -> str:
    """Canonical text: two-space indent, insertion order, trailing newline."""
    return json.dumps(doc, indent=2) + "\n"


def input_digest(doc: dict[str, Any]) -> str:
    """Content digest of a document, independent of whitespace and key order."""
    canonical = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()[:16]


def read_document(path: Path) -> dict[str, Any]:
    try:
        with open(path) as f:
            doc = json.load(f)
    except FileNotFoundError as exc:
        raise ParseError(f"No such input file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno}).") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object.")
    logger.debug("Read %s (digest %s)", path, input_digest(doc))
    return doc


def write_document(doc: dict[str, Any], path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        f.write(dumps_document(doc))


def load_matrix(path: Path) -> QMatrix:
    return matrix_from_document(read_document(path))


def load_system(path: Path) -> LinearSystem:
    return system_from_document(read_document(path))


def save_matrix(A: QMatrix, path: Path) -> None:
    write_document(matrix_to_document(A), path)


def save_system(system: LinearSystem, path: Path) -> None:
    write_document(system_to_document(system), path)


def is_system_document(doc: dict[str, Any]) -> bool:
    return "A" in doc and "y" in doc
