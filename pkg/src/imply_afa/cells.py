"""Full-adder cells: the four proposed IMPLY programs and the exact cell.

Register layout for every program is ``A_in, B_in, C_in, S1[, S2]``. Primes
in the published step tables only mark overwrites of the same device, so
registers are identified by position.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product

from .logic import MicroOp, MicroProgram, run_program

INPUT_ORDER = tuple(product((0, 1), repeat=3))


class UnsupportedCellError(ValueError):
    pass


@dataclass(frozen=True)
class CellCost:
    steps: int
    memristors: int
    work_registers: int
    energy_nj: float


class CellKind(str, Enum):
    ICIS1 = "ICIS1"
    ICIS2 = "ICIS2"
    ICIS3 = "ICIS3"
    ECIS = "ECIS"
    EXACT = "EXACT"

    @classmethod
    def parse(cls, value: "str | CellKind") -> "CellKind":
        if isinstance(value, CellKind):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"unknown cell {value!r}; expected one of "
                             f"{[k.value.lower() for k in cls]}") from None

    @property
    def cost(self) -> CellCost:
        return CELL_COSTS[self]

    @property
    def steps(self) -> int:
        return self.cost.steps

    @property
    def memristors(self) -> int:
        return self.cost.memristors

    @property
    def work_registers(self) -> int:
        return self.cost.work_registers

    @property
    def energy_nj(self) -> float:
        return self.cost.energy_nj

    @property
    def approximate(self) -> bool:
        return self is not CellKind.EXACT


# steps/memristors from the cell summary and serial-exact comparison tables,
# energies are the published per-cell averages (nJ)
CELL_COSTS = {
    CellKind.ICIS1: CellCost(6, 4, 1, 0.50709),
    CellKind.ICIS2: CellCost(6, 4, 1, 0.50705),
    CellKind.ICIS3: CellCost(6, 4, 1, 0.50705),
    CellKind.ECIS: CellCost(12, 5, 2, 1.02631),
    CellKind.EXACT: CellCost(22, 5, 2, 1.90859),
}

PROPOSED = (CellKind.ICIS1, CellKind.ICIS2, CellKind.ICIS3, CellKind.ECIS)

_A, _B, _C, _S1, _S2 = range(5)
_F, _I = MicroOp.false, MicroOp.imply


def _icis(name: str, first: int, second: int, carry: int) -> MicroProgram:
    # FALSE(S1); first->S1; second->S1; S1->carry (Cout); FALSE(first); carry->first (Sum)
    ops = (
        _F(_S1),
        _I(first, _S1),
        _I(second, _S1),
        _I(_S1, carry),
        _F(first),
        _I(carry, first),
    )
    return MicroProgram(
        name=name,
        registers=("A_in", "B_in", "C_in", "S1"),
        ops=ops,
        inputs={"A": _A, "B": _B, "C": _C},
        outputs={"Sum": first, "Cout": carry},
        work_registers=1,
    )


PROGRAMS: dict[CellKind, MicroProgram] = {
    CellKind.ICIS1: _icis("ICIS1", _A, _B, _C),
    CellKind.ICIS2: _icis("ICIS2", _A, _C, _B),
    CellKind.ICIS3: _icis("ICIS3", _B, _C, _A),
    CellKind.ECIS: MicroProgram(
        name="ECIS",
        registers=("A_in", "B_in", "C_in", "S1", "S2"),
        ops=(
            _F(_S1),
            _F(_S2),
            _I(_A, _S1),
            _I(_C, _S2),
            _I(_S2, _A),
            _I(_C, _S1),
            _I(_S1, _B),
            _F(_C),
            _I(_B, _C),
            _I(_A, _C),   # step 10: Sum lands in C_in
            _F(_B),
            _I(_C, _B),   # step 12: Cout lands in B_in
        ),
        inputs={"A": _A, "B": _B, "C": _C},
        outputs={"Sum": _C, "Cout": _B},
        work_registers=2,
    ),
}

# rows in INPUT_ORDER (A, B, C) = 000 .. 111, entries are (Sum, Cout)
_TABLES = {
    CellKind.ICIS1: ((1, 0), (0, 1), (1, 0), (0, 1), (1, 0), (0, 1), (0, 1), (0, 1)),
    CellKind.ICIS2: ((1, 0), (1, 0), (0, 1), (0, 1), (1, 0), (0, 1), (0, 1), (0, 1)),
    CellKind.ICIS3: ((1, 0), (1, 0), (1, 0), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)),
    CellKind.ECIS: ((1, 0), (1, 0), (1, 0), (0, 1), (1, 0), (0, 1), (0, 1), (0, 1)),
}


def get_program(kind: CellKind | str) -> MicroProgram:
    kind = CellKind.parse(kind)
    if kind is CellKind.EXACT:
        raise UnsupportedCellError("the exact cell is behavioural only; no serial step table is modelled")
    return PROGRAMS[kind]


def exact_cell(a: int, b: int, c: int) -> tuple[int, int]:
    return a ^ b ^ c, (a & b) | (a & c) | (b & c)


def behavioral_cell(kind: CellKind | str, a: int, b: int, c: int) -> tuple[int, int]:
    kind = CellKind.parse(kind)
    for bit in (a, b, c):
        if bit not in (0, 1):
            raise ValueError(f"cell inputs must be bits, got {(a, b, c)}")
    if kind is CellKind.EXACT:
        return exact_cell(a, b, c)
    return _TABLES[kind][4 * a + 2 * b + c]


def cell_lookup(kind: CellKind | str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sum and Cout columns indexed by ``4a + 2b + c``."""
    rows = [behavioral_cell(kind, *abc) for abc in INPUT_ORDER]
    return tuple(r[0] for r in rows), tuple(r[1] for r in rows)


def extract_truth_table(kind: CellKind | str):
    """Run the cell's micro-program on all eight inputs."""
    from .design import TruthTable8

    program = get_program(kind)
    rows = []
    for abc in INPUT_ORDER:
        trace = run_program(program, *abc)
        rows.append((trace.sum, trace.cout))
    return TruthTable8(tuple(rows), provenance=f"program:{program.name}", name=program.name)


def measured_cost(kind: CellKind | str) -> tuple[int, int, int]:
    """(steps, memristors, work registers) measured from the program itself."""
    program = get_program(kind)
    return program.steps, program.size, program.size - len(set(program.inputs.values()))
