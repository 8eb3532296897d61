"""n-bit ripple-carry adders with approximate cells in the low positions."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cells import CellKind, behavioral_cell, cell_lookup
from .validation import check_bit, check_operand

EXACT_STEPS = 22
EXACT_ENERGY_NJ = 1.90859
# exact serial adder of the second comparison row (23 steps per bit)
EXACT2_STEPS = 23
EXACT2_ENERGY_NJ = 2.00727

SCENARIOS = {1: 3, 2: 4, 3: 5}


@dataclass(frozen=True)
class RcaConfig:
    n: int = 8
    approx_lsbs: int = 0
    cell: CellKind = CellKind.EXACT
    steps_per_exact: int = EXACT_STEPS
    energy_per_exact: float = EXACT_ENERGY_NJ

    def __post_init__(self):
        object.__setattr__(self, "cell", CellKind.parse(self.cell))
        if self.n < 1:
            raise ValueError(f"adder width must be >= 1, got {self.n}")
        if not 0 <= self.approx_lsbs <= self.n:
            raise ValueError(f"approx_lsbs must lie in [0, {self.n}], got {self.approx_lsbs}")

    @classmethod
    def scenario(cls, number: int, cell: CellKind | str, n: int = 8) -> "RcaConfig":
        if number not in SCENARIOS:
            raise ValueError(f"scenario must be 1, 2 or 3, got {number}")
        return cls(n=n, approx_lsbs=SCENARIOS[number], cell=CellKind.parse(cell))

    @property
    def exact_msbs(self) -> int:
        return self.n - self.approx_lsbs

    @property
    def alpha(self) -> int:
        return self.cell.steps

    @property
    def beta(self) -> float:
        return self.cell.energy_nj

    def exact(self) -> "RcaConfig":
        return RcaConfig(self.n, 0, self.cell, self.steps_per_exact, self.energy_per_exact)

    def cell_at(self, position: int) -> CellKind:
        return self.cell if position < self.approx_lsbs else CellKind.EXACT

    def to_dict(self) -> dict:
        return {"n": self.n, "approx_lsbs": self.approx_lsbs, "cell": self.cell.value}


@dataclass(frozen=True)
class AdderResult:
    sum: int
    carries: tuple[int, ...]
    cells: tuple[tuple[int, int], ...]

    @property
    def cout(self) -> int:
        return self.carries[-1]


def rca_add(config: RcaConfig, a: int, b: int, cin: int = 0) -> AdderResult:
    """Bit-serial ripple addition; ``carries[i]`` is the carry leaving cell ``i``."""
    check_operand(a, config.n, "a")
    check_operand(b, config.n, "b")
    check_bit(cin, "cin")
    carry, total, carries, cells = cin, 0, [], []
    for i in range(config.n):
        kind = config.cell_at(i)
        s, carry = behavioral_cell(kind, (a >> i) & 1, (b >> i) & 1, carry)
        total |= s << i
        carries.append(carry)
        cells.append((s, carry))
    total |= carry << config.n
    return AdderResult(total, tuple(carries), tuple(cells))


def _tables(kind: CellKind) -> tuple[np.ndarray, np.ndarray]:
    sums, couts = cell_lookup(kind)
    return np.asarray(sums, dtype=np.int64), np.asarray(couts, dtype=np.int64)


def rca_add_array(config: RcaConfig, a, b, cin=0, return_carries: bool = False):
    """Vectorised :func:`rca_add` over integer arrays (identical semantics)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    limit = 1 << config.n
    if a.size and (a.min() < 0 or a.max() >= limit or b.min() < 0 or b.max() >= limit):
        raise ValueError(f"operands must lie in [0, {limit})")
    a, b = np.broadcast_arrays(a, b)
    carry = np.broadcast_to(np.asarray(cin, dtype=np.int64), a.shape).copy()
    total = np.zeros(a.shape, dtype=np.int64)
    approx = _tables(config.cell)
    exact = _tables(CellKind.EXACT)
    carries = []
    for i in range(config.n):
        sum_lut, cout_lut = approx if i < config.approx_lsbs else exact
        idx = (((a >> i) & 1) << 2) | (((b >> i) & 1) << 1) | carry
        total |= sum_lut[idx] << i
        carry = cout_lut[idx]
        carries.append(carry)
    total |= carry << config.n
    if return_carries:
        return total, np.stack(carries)
    return total


def rca_steps(n: int, approx_lsbs: int, alpha: int, exact_steps: int = EXACT_STEPS) -> int:
    """Total serial steps: alpha*(n - m2) + exact*(n - m1), m1 approximate LSBs, m2 = n - m1."""
    m1 = approx_lsbs
    m2 = n - m1
    return alpha * (n - m2) + exact_steps * (n - m1)


def rca_energy(n: int, approx_lsbs: int, beta: float, exact_energy: float = EXACT_ENERGY_NJ) -> float:
    """Total energy in nJ: beta*(n - m1) + exact*(n - m2), here m1 exact MSBs, m2 approximate LSBs."""
    m2 = approx_lsbs
    m1 = n - m2
    return beta * (n - m1) + exact_energy * (n - m2)


def step_count(config: RcaConfig) -> int:
    return rca_steps(config.n, config.approx_lsbs, config.alpha, config.steps_per_exact)


def energy_estimate(config: RcaConfig) -> float:
    return rca_energy(config.n, config.approx_lsbs, config.beta, config.energy_per_exact)


def memristor_count(n: int) -> int:
    """2n operand devices, one carry-in, two shared work devices."""
    if n < 1:
        raise ValueError(f"adder width must be >= 1, got {n}")
    return 2 * n + 3

