"""Shared test fixtures."""

import json
from pathlib import Path

import numpy as np
import pytest

from ncdet.algebra.quaternion import AlgebraParams, Quaternion
from ncdet.matrix.qmatrix import QMatrix

WORKED_EXAMPLE = [["0,1,0,0", "0,0,1,0"], ["0,0,1,0", "0,-1,0,0"]]


@pytest.fixture
def hamilton() -> AlgebraParams:
    """H(-1,-1) over the rationals."""
    return AlgebraParams.hamilton()


@pytest.fixture
def split() -> AlgebraParams:
    """H(1,1), a splittable algebra with zero divisors."""
    return AlgebraParams(1, 1)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20100511)


@pytest.fixture
def quat(hamilton):
    """Build a Hamilton quaternion from four coordinates."""

    def build(x0=0, x1=0, x2=0, x3=0) -> Quaternion:
        return Quaternion.of(x0, x1, x2, x3, hamilton)

    return build


@pytest.fixture
def example(hamilton) -> QMatrix:
    """[[i, j], [j, -i]]: ddet 0, every row/column determinant 2, rank 1."""
    return QMatrix.from_text(WORKED_EXAMPLE, hamilton)


@pytest.fixture
def matrix(hamilton):
    """Build a Hamilton matrix from rows of "x0,x1,x2,x3" strings."""

    def build(rows) -> QMatrix:
        return QMatrix.from_text(rows, hamilton)

    return build


@pytest.fixture
def write_json(tmp_path):
    """Write a document under tmp_path and return its path."""

    def write(name: str, doc: dict) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(doc, indent=2) + "\n")
        return path

    return write
