"""Verification reports shared by the algebra, space and module harnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import numpy as np

MAX_WITNESSES = 10

# Separation floor and detection floor for implication-shaped laws, which are
# checked contrapositively: inputs at least SEPARATION apart must produce
# outputs at least DETECTION apart.
SEPARATION = 1e-3
DETECTION = 1e-9


@dataclass
class Witness:
    inputs: tuple
    lhs: Any
    rhs: Any
    dist: float

    def to_dict(self) -> dict:
        return {
            "inputs": jsonable(self.inputs),
            "lhs": jsonable(self.lhs),
            "rhs": jsonable(self.rhs),
            "dist": self.dist,
        }


@dataclass
class AxiomReport:
    """Outcome of checking one law on a batch of samples.

    Only the first ``MAX_WITNESSES`` failures are kept; ``n_failures`` counts
    all of them.
    """

    axiom_id: str
    samples_tested: int = 0
    failures: list[Witness] = field(default_factory=list)
    n_failures: int = 0
    max_dist: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def _fail(self, inputs, lhs, rhs, d):
        self.n_failures += 1
        if len(self.failures) < MAX_WITNESSES:
            self.failures.append(Witness(tuple(inputs), lhs, rhs, float(d)))

    def check_equal(self, inputs, lhs, rhs, dist: Callable, tol: float) -> None:
        """Record one sample of an equational law ``lhs == rhs``."""
        d = float(dist(lhs, rhs))
        self.samples_tested += 1
        if not d <= tol:  # NaN counts as a failure
            self._fail(inputs, lhs, rhs, d)
        if d > self.max_dist or d != d:
            self.max_dist = d

    def check_separated(self, inputs, out1, out2, dist: Callable, tol: float) -> None:
        """Record one sample of a contrapositive cancellation law.

        The caller has already established that the inputs are separated; the
        outputs must then be at least ``tol`` apart.
        """
        d = float(dist(out1, out2))
        self.samples_tested += 1
        if not d >= tol:
            self._fail(inputs, out1, out2, d)

    def check_holds(self, inputs, holds: bool, value=None) -> None:
        """Record one sample of a predicate (e.g. membership)."""
        self.samples_tested += 1
        if not holds:
            self._fail(inputs, value, None, float("nan"))

    def to_dict(self) -> dict:
        return {
            "axiom_id": self.axiom_id,
            "passed": self.passed,
            "samples_tested": self.samples_tested,
            "n_failures": self.n_failures,
            "max_dist": self.max_dist,
            "note": self.note,
            "failures": [w.to_dict() for w in self.failures],
        }


def jsonable(value):
    """Convert numbers, arrays and nested tuples into JSON-friendly objects."""
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    return value


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


def summary_lines(reports) -> list[str]:
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        line = f"{r.axiom_id:<14} {status}  samples={r.samples_tested} max_dist={r.max_dist:.3g}"
        if r.note:
            line += f"  ({r.note})"
        lines.append(line)
        for w in r.failures[:3]:
            lines.append(f"    witness inputs={jsonable(w.inputs)} dist={w.dist:.6g}")
    return lines
