"""Logic-level execution of stateful IMPLY programs on a serial memristor row.

A row holds binary resistance states (HRS = 0, LRS = 1). Exactly one
FALSE or IMPLY micro-op runs per computational step; no voltages are
modelled here, see :mod:`imply_afa.analog` for device physics.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

STEP_TIME_US = 30


class ProgramError(ValueError):
    """Raised when a micro-op or program is malformed."""


class OpKind(str, Enum):
    FALSE = "FALSE"
    IMPLY = "IMPLY"


@dataclass(frozen=True)
class MicroOp:
    """One serial step: ``FALSE(target)`` or ``IMPLY(source, target)``."""

    kind: OpKind
    target: int
    source: int | None = None

    @classmethod
    def false(cls, target: int) -> "MicroOp":
        return cls(OpKind.FALSE, target)

    @classmethod
    def imply(cls, source: int, target: int) -> "MicroOp":
        return cls(OpKind.IMPLY, target, source)

    @property
    def registers(self) -> tuple[int, ...]:
        if self.kind is OpKind.FALSE:
            return (self.target,)
        return (self.source, self.target)

    def describe(self, names: Sequence[str] | None = None) -> str:
        label = (lambda i: names[i]) if names else str
        if self.kind is OpKind.FALSE:
            return f"FALSE({label(self.target)})"
        return f"IMPLY({label(self.source)}, {label(self.target)})"


class LogicRow:
    """Serial row of memristor logic states with a step counter."""

    def __init__(self, cells: Iterable[int]):
        cells = list(cells)
        for c in cells:
            if c not in (0, 1):
                raise ValueError(f"memristor state must be 0 or 1, got {c!r}")
        self.cells = cells
        self.step_counter = 0

    @classmethod
    def zeros(cls, size: int) -> "LogicRow":
        return cls([0] * size)

    def __len__(self) -> int:
        return len(self.cells)

    def __getitem__(self, index: int) -> int:
        return self.cells[index]

    def __repr__(self) -> str:
        return f"LogicRow({self.cells}, steps={self.step_counter})"

    def snapshot(self) -> tuple[int, ...]:
        return tuple(self.cells)

    def reset_counter(self) -> None:
        self.step_counter = 0

    def _check(self, index: int) -> None:
        if not 0 <= index < len(self.cells):
            raise IndexError(f"register {index} out of range for row of {len(self.cells)}")


def exec_false(row: LogicRow, target: int) -> LogicRow:
    """Reset ``target`` to HRS (logic 0). Mutates and returns ``row``."""
    row._check(target)
    row.cells[target] = 0
    row.step_counter += 1
    return row


def exec_imply(row: LogicRow, p: int, q: int) -> LogicRow:
    """Material implication ``q := NOT(p) OR q``. Mutates and returns ``row``."""
    if p == q:
        raise ProgramError(f"IMPLY source and target must differ (got {p} -> {q})")
    row._check(p)
    row._check(q)
    row.cells[q] = int((not row.cells[p]) or row.cells[q])
    row.step_counter += 1
    return row


def apply_op(row: LogicRow, op: MicroOp) -> LogicRow:
    if op.kind is OpKind.FALSE:
        return exec_false(row, op.target)
    return exec_imply(row, op.source, op.target)


@dataclass(frozen=True)
class MicroProgram:
    """Ordered FALSE/IMPLY sequence with input and output register bindings.

    Register aliasing is allowed: an output may live in a register that
    initially held an input (e.g. Sum written into ``A_in``).
    """

    name: str
    registers: tuple[str, ...]
    ops: tuple[MicroOp, ...]
    inputs: dict[str, int]
    outputs: dict[str, int]
    work_registers: int

    @property
    def steps(self) -> int:
        return len(self.ops)

    @property
    def size(self) -> int:
        return len(self.registers)

    def index(self, name: str) -> int:
        return self.registers.index(name)

    def initial_row(self, a: int, b: int, c: int) -> LogicRow:
        row = LogicRow.zeros(self.size)
        for key, bit in zip(("A", "B", "C"), (a, b, c)):
            if bit not in (0, 1):
                raise ValueError(f"input {key} must be a bit, got {bit!r}")
            row.cells[self.inputs[key]] = bit
        return row

    def listing(self) -> list[str]:
        return [f"{i + 1:>2}  {op.describe(self.registers)}" for i, op in enumerate(self.ops)]


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    step: int | None = None


@dataclass
class ValidationReport:
    program: str
    steps: int
    work_registers: int
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}


def validate_program(program: MicroProgram) -> ValidationReport:
    """Check a program without executing it; never raises."""
    report = ValidationReport(program.name, program.steps, program.work_registers)
    size = program.size
    written: set[int] = set()
    for step, op in enumerate(program.ops, start=1):
        if not isinstance(op, MicroOp):
            report.violations.append(Violation("not-serial", "each step holds exactly one micro-op", step))
            continue
        for reg in op.registers:
            if reg is None or not 0 <= reg < size:
                report.violations.append(
                    Violation("out-of-bounds", f"register {reg} not in row of {size}", step))
        if op.kind is OpKind.IMPLY and op.source == op.target:
            report.violations.append(
                Violation("invalid-operand", f"IMPLY({op.source},{op.target}): source equals target", step))
        written.add(op.target)
    for name, reg in list(program.inputs.items()) + list(program.outputs.items()):
        if not 0 <= reg < size:
            report.violations.append(Violation("out-of-bounds", f"binding {name} -> {reg} outside row"))
    for name, reg in program.outputs.items():
        if reg not in written:
            report.violations.append(
                Violation("unbound-output", f"output {name} (register {reg}) is never written"))
    missing = {"A", "B", "C"} - set(program.inputs)
    if missing:
        report.violations.append(Violation("unbound-input", f"missing input bindings {sorted(missing)}"))
    if program.size - len(set(program.inputs.values())) != program.work_registers:
        report.violations.append(
            Violation("work-count", "declared work registers disagree with row layout"))
    return report


@dataclass(frozen=True)
class ExecutionTrace:
    """Per-step snapshots; ``snapshots[0]`` is the initial row."""

    program: MicroProgram
    inputs: tuple[int, int, int]
    snapshots: tuple[tuple[int, ...], ...]
    sum: int
    cout: int

    @property
    def steps(self) -> int:
        return len(self.snapshots) - 1

    def __len__(self) -> int:
        return self.steps

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["step", "time_us", "reg_name", "logic_state"])
        for step, snap in enumerate(self.snapshots):
            for name, state in zip(self.program.registers, snap):
                writer.writerow([step, step * STEP_TIME_US, name, state])
        return buf.getvalue()


def run_program(program: MicroProgram, a: int, b: int, c: int) -> ExecutionTrace:
    report = validate_program(program)
    if not report.valid:
        raise ProgramError(f"{program.name}: " + "; ".join(v.message for v in report.violations))
    row = program.initial_row(a, b, c)
    snaps = [row.snapshot()]
    for op in program.ops:
        apply_op(row, op)
        snaps.append(row.snapshot())
    return ExecutionTrace(
        program=program,
        inputs=(a, b, c),
        snapshots=tuple(snaps),
        sum=row[program.outputs["Sum"]],
        cout=row[program.outputs["Cout"]],
    )
