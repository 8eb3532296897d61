import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from imply_afa.cells import PROPOSED, CellKind, behavioral_cell
from imply_afa.rca import (
    RcaConfig, energy_estimate, memristor_count, rca_add, rca_add_array, rca_steps, step_count,
)

CELLS = [k.value for k in PROPOSED] + ["EXACT"]


def _oracle(cell, m, n, a, b, cin):
    # string-of-bits reference, written separately from the library loop
    abits = [int(x) for x in reversed(format(a, f"0{n}b"))]
    bbits = [int(x) for x in reversed(format(b, f"0{n}b"))]
    out, carry = [], cin
    for i in range(n):
        if i < m:
            s, carry = behavioral_cell(cell, abits[i], bbits[i], carry)
        else:
            t = abits[i] + bbits[i] + carry
            s, carry = t % 2, t // 2
        out.append(s)
    out.append(carry)
    return int("".join(map(str, reversed(out))), 2)


def test_ecis_scenario3_zero_plus_zero():
    assert rca_add(RcaConfig.scenario(3, "ECIS"), 0, 0).sum == 31


@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 1))
def test_exact_adder_is_addition(a, b, cin):
    assert rca_add(RcaConfig(8), a, b, cin).sum == a + b + cin


@settings(max_examples=200)
@given(st.sampled_from(CELLS), st.integers(0, 8), st.integers(0, 255), st.integers(0, 255),
       st.integers(0, 1))
def test_against_oracle(cell, m, a, b, cin):
    config = RcaConfig(8, m, cell)
    assert rca_add(config, a, b, cin).sum == _oracle(cell, m, 8, a, b, cin)


@settings(max_examples=50)
@given(st.sampled_from(CELLS), st.integers(0, 6),
       st.lists(st.tuples(st.integers(0, 63), st.integers(0, 63)), min_size=1, max_size=20))
def test_array_matches_scalar(cell, m, pairs):
    config = RcaConfig(6, m, cell)
    a = np.array([p[0] for p in pairs])
    b = np.array([p[1] for p in pairs])
    expected = [rca_add(config, int(x), int(y)).sum for x, y in pairs]
    assert rca_add_array(config, a, b).tolist() == expected


def test_array_carries_shape():
    total, carries = rca_add_array(RcaConfig(4), np.arange(16), np.arange(16), return_carries=True)
    assert carries.shape == (4, 16)
    assert (carries[-1] == total >> 4).all()


def test_scalar_carries():
    r = rca_add(RcaConfig(4), 0b1111, 0b0001)
    assert r.carries == (1, 1, 1, 1) and r.cout == 1 and r.sum == 16


@pytest.mark.parametrize("cell,scenario,steps,energy", [
    ("ICIS1", 1, 128, 11.06422),
    ("ICIS1", 3, 96, 8.26122),
    ("ECIS", 2, 136, 11.7396),
    ("ECIS", 3, 126, 10.85732),
])
def test_costs(cell, scenario, steps, energy):
    config = RcaConfig.scenario(scenario, cell)
    assert step_count(config) == steps
    assert energy_estimate(config) == pytest.approx(energy, abs=1e-9)


def test_exact_costs():
    config = RcaConfig(8)
    assert step_count(config) == 176
    assert energy_estimate(config) == pytest.approx(15.26872, abs=1e-9)


def test_step_formula_ecis_scenario1():
    # 3 approximate positions at 12 steps, 5 exact at 22
    assert rca_steps(8, 3, 12) == 3 * 12 + 5 * 22


@pytest.mark.parametrize("n,count", [(8, 19), (1, 5), (16, 35)])
def test_memristor_count(n, count):
    assert memristor_count(n) == count


@pytest.mark.parametrize("cell", [k.value for k in PROPOSED])
def test_costs_fall_with_more_approximation(cell):
    steps = [step_count(RcaConfig(8, m, cell)) for m in range(9)]
    energy = [energy_estimate(RcaConfig(8, m, cell)) for m in range(9)]
    assert steps == sorted(steps, reverse=True)
    assert energy == sorted(energy, reverse=True)


def test_validation_errors():
    with pytest.raises(ValueError):
        RcaConfig(8, 9)
    with pytest.raises(ValueError):
        RcaConfig(0)
    with pytest.raises(ValueError):
        RcaConfig.scenario(4, "ECIS")
    with pytest.raises(ValueError):
        rca_add(RcaConfig(8), 256, 0)
    with pytest.raises(ValueError):
        rca_add(RcaConfig(8), 0, 0, 2)
    with pytest.raises(ValueError):
        rca_add_array(RcaConfig(8), [-1], [0])
    with pytest.raises(ValueError):
        memristor_count(0)


def test_config_helpers():
    config = RcaConfig.scenario(2, "icis2")
    assert config.cell is CellKind.ICIS2 and config.exact_msbs == 4
    assert config.cell_at(3) is CellKind.ICIS2 and config.cell_at(4) is CellKind.EXACT
    assert config.exact().approx_lsbs == 0
    assert config.to_dict() == {"n": 8, "approx_lsbs": 4, "cell": "ICIS2"}
