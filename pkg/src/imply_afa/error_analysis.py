"""Exhaustive error metrics of approximate ripple-carry adders."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cells import PROPOSED, CellKind, extract_truth_table
from .design import EXACT_TABLE, CellErrorMetrics, score_table
from .rca import RcaConfig, rca_add_array

MAX_EXHAUSTIVE_BITS = 24


class SweepTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class ErrorReport:
    er: Fraction
    med: float
    nmed: float
    max_output: int
    sample_count: int
    total_ed: int

    def to_dict(self) -> dict:
        return {
            "er": float(self.er),
            "med": self.med,
            "nmed": self.nmed,
            "max_output": self.max_output,
            "sample_count": self.sample_count,
        }


def operand_grid(n: int) -> tuple[np.ndarray, np.ndarray]:
    values = np.arange(1 << n, dtype=np.int64)
    a, b = np.meshgrid(values, values, indexing="ij")
    return a.ravel(), b.ravel()


def exhaustive_metrics(config: RcaConfig) -> ErrorReport:
    """Enumerate every operand pair with carry-in 0.

    NMED is normalised by the largest exact sum of two n-bit operands,
    ``2 * (2**n - 1)`` (510 at n = 8).
    """
    if 2 * config.n > MAX_EXHAUSTIVE_BITS:
        raise SweepTooLargeError(
            f"2^{2 * config.n} operand pairs is too many to enumerate; "
            f"sample operands and use rca_add_array instead")
    a, b = operand_grid(config.n)
    ed = np.abs(rca_add_array(config, a, b) - (a + b))
    total = int(ed.sum())
    count = a.size
    max_output = 2 * ((1 << config.n) - 1)
    med = total / count
    return ErrorReport(
        er=Fraction(int(np.count_nonzero(ed)), count),
        med=med,
        nmed=med / max_output,
        max_output=max_output,
        sample_count=count,
        total_ed=total,
    )


def cell_metrics(kind: CellKind | str) -> CellErrorMetrics:
    kind = CellKind.parse(kind)
    if kind is CellKind.EXACT:
        return score_table(EXACT_TABLE)
    # scored from the executed program, not the transcribed table
    return score_table(extract_truth_table(kind))


def carry_violations(config: RcaConfig) -> int:
    """Pairs whose carry leaving the approximate region differs from the exact carry."""
    m = config.approx_lsbs
    if m == 0:
        return 0
    a, b = operand_grid(config.n)
    _, carries = rca_add_array(config, a, b, return_carries=True)
    mask = (1 << m) - 1
    exact_carry = ((a & mask) + (b & mask)) >> m
    return int(np.count_nonzero(carries[m - 1] != exact_carry))


def metrics_sweep(cells=None, scenarios=(1, 2, 3)) -> dict[tuple[str, int], ErrorReport]:
    cells = cells or PROPOSED
    return {
        (CellKind.parse(c).value, s): exhaustive_metrics(RcaConfig.scenario(s, c))
        for s in scenarios for c in cells
    }

