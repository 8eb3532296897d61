import pytest
from hypothesis import given, strategies as st

from imply_afa.cells import INPUT_ORDER, PROPOSED, get_program
from imply_afa.logic import (
    LogicRow, MicroOp, MicroProgram, OpKind, ProgramError, apply_op, exec_false, exec_imply,
    run_program, validate_program,
)


def _prog(ops, registers=("A", "B", "C", "S1"), outputs=None, work=1):
    return MicroProgram("t", registers, tuple(ops), {"A": 0, "B": 1, "C": 2},
                        outputs if outputs is not None else {"Sum": 0, "Cout": 2}, work)


@pytest.mark.parametrize("p,q,expected", [(0, 0, 1), (0, 1, 1), (1, 0, 0), (1, 1, 1)])
def test_imply_truth_table(p, q, expected):
    row = exec_imply(LogicRow([p, q]), 0, 1)
    assert row[1] == expected
    assert row[0] == p
    assert row.step_counter == 1


@pytest.mark.parametrize("start", [0, 1])
def test_false_resets(start):
    row = exec_false(LogicRow([start]), 0)
    assert row[0] == 0


def test_false_example_row():
    row = exec_false(LogicRow([1, 1, 0]), 0)
    assert row.snapshot() == (0, 1, 0)
    assert row.step_counter == 1


def test_false_out_of_range():
    with pytest.raises(IndexError):
        exec_false(LogicRow([0, 1]), 5)


def test_imply_same_operand():
    with pytest.raises(ProgramError):
        exec_imply(LogicRow([0, 1]), 1, 1)


def test_logic_row_rejects_non_bits():
    with pytest.raises(ValueError):
        LogicRow([0, 2])


@pytest.mark.parametrize("p", [0, 1])
def test_two_step_inversion(p):
    row = LogicRow([p, 1])
    exec_false(row, 1)
    exec_imply(row, 0, 1)
    assert row[1] == 1 - p


@given(st.lists(st.integers(0, 1), min_size=3, max_size=7), st.data())
def test_untouched_registers_unchanged(cells, data):
    n = len(cells)
    p = data.draw(st.integers(0, n - 1))
    q = data.draw(st.integers(0, n - 1).filter(lambda x: x != p))
    op = data.draw(st.sampled_from([MicroOp.false(q), MicroOp.imply(p, q)]))
    before = list(cells)
    after = apply_op(LogicRow(cells), op).snapshot()
    for i in range(n):
        if i != q:
            assert after[i] == before[i]


@pytest.mark.parametrize("cell,abc,expected", [
    ("ICIS1", (0, 0, 1), (0, 1, 6)),
    ("ECIS", (1, 0, 1), (0, 1, 12)),
    ("ICIS3", (1, 1, 1), (0, 1, 6)),
])
def test_run_program_examples(cell, abc, expected):
    trace = run_program(get_program(cell), *abc)
    assert (trace.sum, trace.cout, trace.steps) == expected


@pytest.mark.parametrize("kind", PROPOSED)
def test_step_count_matches_length(kind):
    program = get_program(kind)
    for abc in INPUT_ORDER:
        trace = run_program(program, *abc)
        assert trace.steps == program.steps == len(trace.snapshots) - 1


def test_validate_icis1():
    program = get_program("ICIS1")
    report = validate_program(program)
    assert report.valid
    assert program.steps == 6
    assert program.work_registers == 1


def test_validate_same_operand():
    report = validate_program(_prog([MicroOp.false(3), MicroOp(OpKind.IMPLY, 3, 3)]))
    assert "invalid-operand" in report.codes()


def test_validate_unbound_output():
    report = validate_program(_prog([MicroOp.false(3)], outputs={"Sum": 0}))
    assert "unbound-output" in report.codes()


def test_validate_out_of_bounds():
    report = validate_program(_prog([MicroOp.false(9)]))
    assert "out-of-bounds" in report.codes()
    assert not report.valid


def test_run_program_refuses_invalid():
    with pytest.raises(ProgramError):
        run_program(_prog([MicroOp.false(9)]), 0, 0, 0)


def test_trace_csv():
    trace = run_program(get_program("ICIS1"), 0, 1, 1)
    lines = trace.to_csv().strip().splitlines()
    assert lines[0] == "step,time_us,reg_name,logic_state"
    assert len(lines) == 1 + 7 * 4
    assert lines[-1].startswith("6,180,")


def test_initial_row_rejects_non_bits():
    with pytest.raises(ValueError):
        get_program("ICIS1").initial_row(0, 2, 0)
