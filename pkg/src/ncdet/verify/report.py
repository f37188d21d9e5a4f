"""Verification results: per-suite outcomes, the run report and reproducer files."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import pandas as pd

from ncdet.matrix.io import matrix_to_document, write_document
from ncdet.matrix.qmatrix import QMatrix

logger = logging.getLogger(__name__)


@dataclass
class Counterexample:
    """One failed check with the matrices that trigger it.

    Attributes:
        detail: What disagreed, values in the quaternion textual form.
        inputs: Named operands as matrix documents, e.g. {"A": {...}}.
    """

    detail: str
    inputs: dict[str, dict[str, Any]] = field(default_factory=dict)

    @classmethod
    def of(cls, detail: str, **operands: QMatrix) -> Counterexample:
        return cls(detail, {name: matrix_to_document(M) for name, M in operands.items()})

    def to_dict(self) -> dict[str, Any]:
        return {"detail": self.detail, "inputs": self.inputs}


@dataclass
class SuiteResult:
    """Outcome of one invariant suite.

    Attributes:
        name: Short identifier, e.g. "conjugation-duality".
        description: One line naming the property.
        cases: Number of checks evaluated.
        counterexamples: Failed checks; empty when the suite passed.
    """

    name: str
    description: str
    cases: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def failures(self) -> int:
        return len(self.counterexamples)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }


@dataclass
class VerifyReport:
    """Everything a verification run produced; free of timing data so reruns compare equal."""

    seed: int
    scale: str
    settings: dict[str, object]
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    @property
    def failed_suites(self) -> list[SuiteResult]:
        return [s for s in self.suites if not s.passed]

    def to_document(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "scale": self.scale,
            "settings": self.settings,
            "passed": self.passed,
            "suites": [s.to_dict() for s in self.suites],
        }

    def to_frame(self) -> pd.DataFrame:
        """Pass/fail table, one row per suite, indexed by suite name."""
        frame = pd.DataFrame(
            [
                {
                    "suite": s.name,
                    "cases": s.cases,
                    "failures": s.failures,
                    "passed": s.passed,
                    "description": s.description,
                }
                for s in self.suites
            ],
            columns=["suite", "cases", "failures", "passed", "description"],
        )
        return frame.set_index("suite")

    def write_reproducer(self, directory: Path) -> Path | None:
        """Write the first counterexample of the first failing suite.

        Returns:
            The written path, or None if every suite passed.
        """
        if self.passed:
            return None
        suite = self.failed_suites[0]
        example = suite.counterexamples[0]
        path = Path(directory) / f"ncdet-repro-{suite.name}-{self.seed}.json"
        write_document(
            {
                "seed": self.seed,
                "scale": self.scale,
                "suite": suite.name,
                "description": suite.description,
                **example.to_dict(),
            },
            path,
        )
        logger.warning("Suite %s failed; reproducer written to %s", suite.name, path)
        return path
