"""Device-level transient simulation of IMPLY programs with the VTEAM model.

All quantities are SI (metres, seconds, volts, ohms, joules). Every device
taking part in a pulse has one terminal on its driver and the other on a
common node returned to ground through ``R_G``; idle devices float and keep
their state.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field, replace

from .cells import INPUT_ORDER, CellKind, get_program
from .logic import MicroProgram, OpKind


class IntegrationError(RuntimeError):
    pass


@dataclass(frozen=True)
class VteamParams:
    v_off: float = 0.7
    v_on: float = -10e-3
    alpha_off: float = 3.0
    alpha_on: float = 3.0
    r_off: float = 1e6
    r_on: float = 10e3
    k_on: float = -0.5e-9      # m/s
    k_off: float = 1e-2        # m/s
    w_off: float = 0.0
    w_on: float = 3e-9
    w_c: float = 107e-12
    a_off: float = 3e-9
    a_on: float = 0.0
    v_set: float = 1.0
    v_reset: float = 1.0
    v_cond: float = 0.9
    r_g: float = 40e3
    t_pulse: float = 30e-6
    substeps: int = 3000       # dt = t_pulse / substeps = 10 ns
    # read-out: logic 1 below r_read; ambiguous within a factor `guard` of it
    r_read: float = 316.2e3
    guard: float = 1.5

    @property
    def dt(self) -> float:
        return self.t_pulse / self.substeps

    @property
    def w_min(self) -> float:
        return min(self.w_on, self.w_off)

    @property
    def w_max(self) -> float:
        return max(self.w_on, self.w_off)

    def refined(self, factor: int = 2) -> "VteamParams":
        return replace(self, substeps=self.substeps * factor)

    def resistance(self, w: float) -> float:
        """Linear map: ``r_on`` at ``w_on``, ``r_off`` at ``w_off``."""
        frac = (w - self.w_off) / (self.w_on - self.w_off)
        return self.r_off + (self.r_on - self.r_off) * frac

    def state_for(self, bit: int) -> float:
        return self.w_on if bit else self.w_off

    def validity(self) -> dict[str, bool]:
        """The two IMPLY design conditions evaluated literally on these values."""
        return {
            "r_on << r_g << r_off": self.r_on < self.r_g < self.r_off,
            "v_cond < v_off": self.v_cond < self.v_off,
            "v_off < v_set": self.v_off < self.v_set,
        }


def vteam_dwdt(params: VteamParams, w: float, v: float) -> float:
    if v > params.v_off:
        window = math.exp(-math.exp((w - params.a_off) / params.w_c))
        return params.k_off * (v / params.v_off - 1.0) ** params.alpha_off * window
    if v < params.v_on:
        window = math.exp(-math.exp(-(w - params.a_on) / params.w_c))
        return params.k_on * (v / params.v_on - 1.0) ** params.alpha_on * window
    return 0.0


def read_logic(params: VteamParams, r: float) -> int | None:
    """Threshold read-out; ``None`` when ``r`` falls inside the guard band."""
    if params.r_read / params.guard < r < params.r_read * params.guard:
        return None
    return int(r < params.r_read)


@dataclass
class PulseResult:
    w: list[float]
    energy: list[float]


def _pulse(params: VteamParams, w: list[float], drives: list[float], probe=None) -> PulseResult:
    """Integrate devices sharing the R_G node for one pulse (forward Euler)."""
    dt = params.dt
    g_g = 1.0 / params.r_g
    lo, hi = params.w_min, params.w_max
    limit = 0.05 * (hi - lo)
    w = list(w)
    energy = [0.0] * len(w)
    n = len(w)
    for k in range(params.substeps):
        g = [1.0 / params.resistance(x) for x in w]
        v_node = sum(d * gi for d, gi in zip(drives, g)) / (sum(g) + g_g)
        for j in range(n):
            v = drives[j] - v_node
            energy[j] += v * v * g[j] * dt
            dw = vteam_dwdt(params, w[j], v) * dt
            if not math.isfinite(dw) or abs(dw) > limit:
                raise IntegrationError(
                    f"state step {dw:.3e} m at substep {k} (w={w[j]:.3e} m, v={v:.4f} V, "
                    f"dt={dt:.3e} s) exceeds 5% of the state range; increase substeps")
            w[j] = min(max(w[j] + dw, lo), hi)
        if probe is not None:
            probe(k, w, [d - v_node for d in drives], g)
    return PulseResult(w, energy)


@dataclass(frozen=True)
class ImplyTransient:
    w_p: float
    w_q: float
    energy_p: float
    energy_q: float


def imply_gate_transient(params: VteamParams, w_p: float, w_q: float) -> ImplyTransient:
    res = _pulse(params, [w_p, w_q], [params.v_cond, params.v_set])
    return ImplyTransient(res.w[0], res.w[1], res.energy[0], res.energy[1])


def reset_transient(params: VteamParams, w: float) -> tuple[float, float]:
    """FALSE: drive the device to HRS with -v_reset; returns (w, energy)."""
    res = _pulse(params, [w], [-params.v_reset])
    return res.w[0], res.energy[0]


@dataclass
class AnalogTrace:
    program: MicroProgram
    inputs: tuple[int, int, int]
    params: VteamParams
    w: list[float]
    step_energy: list[float]
    device_energy: list[float]
    samples: list[list[float]] = field(default_factory=list)

    @property
    def resistances(self) -> list[float]:
        return [self.params.resistance(x) for x in self.w]

    @property
    def logic(self) -> list[int | None]:
        return [read_logic(self.params, r) for r in self.resistances]

    @property
    def total_energy(self) -> float:
        return sum(self.step_energy)

    @property
    def sum(self) -> int | None:
        return self.logic[self.program.outputs["Sum"]]

    @property
    def cout(self) -> int | None:
        return self.logic[self.program.outputs["Cout"]]

    @property
    def ambiguous(self) -> list[str]:
        return [name for name, bit in zip(self.program.registers, self.logic) if bit is None]

    def csv_header(self) -> list[str]:
        cols = ["time_s"]
        for name in self.program.registers:
            cols += [f"{name}_w_nm", f"{name}_R_ohm", f"{name}_v_V", f"{name}_i_A"]
        return cols + ["energy_J"]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.csv_header())
        for row in self.samples:
            writer.writerow([f"{x:.6g}" for x in row])
        return buf.getvalue()


def run_program_analog(program: MicroProgram, a: int, b: int, c: int,
                       params: VteamParams | None = None, sample_every: int | None = None) -> AnalogTrace:
    """Execute ``program`` pulse by pulse; each step lasts ``t_pulse``.

    With ``sample_every`` set, waveform rows are recorded every that many
    substeps (plus the initial state) for CSV export.
    """
    params = params or VteamParams()
    row = program.initial_row(a, b, c)
    w = [params.state_for(bit) for bit in row.cells]
    device_energy = [0.0] * len(w)
    step_energy = []
    samples: list[list[float]] = []
    cumulative = [0.0]

    def record(t, volts, currents):
        line = [t]
        for j, x in enumerate(w):
            line += [x * 1e9, params.resistance(x), volts[j], currents[j]]
        samples.append(line + [cumulative[0]])

    if sample_every:
        record(0.0, [0.0] * len(w), [0.0] * len(w))

    for step, op in enumerate(program.ops):
        regs = list(op.registers)
        if op.kind is OpKind.FALSE:
            drives = [-params.v_reset]
        else:
            drives = [params.v_cond, params.v_set]
        probe = None
        if sample_every:
            t0 = step * params.t_pulse

            def probe(k, ws, vs, gs, regs=regs, t0=t0):
                for j, reg in enumerate(regs):
                    w[reg] = ws[j]
                cumulative[0] += sum(v * v * g for v, g in zip(vs, gs)) * params.dt
                if (k + 1) % sample_every == 0:
                    volts = [0.0] * len(w)
                    currents = [0.0] * len(w)
                    for j, reg in enumerate(regs):
                        volts[reg] = vs[j]
                        currents[reg] = vs[j] * gs[j]
                    record(t0 + (k + 1) * params.dt, volts, currents)

        res = _pulse(params, [w[r] for r in regs], drives, probe)
        for j, reg in enumerate(regs):
            w[reg] = res.w[j]
            device_energy[reg] += res.energy[j]
        step_energy.append(sum(res.energy))

    return AnalogTrace(program, (a, b, c), params, w, step_energy, device_energy, samples)


def cell_energies(kind: CellKind | str, params: VteamParams | None = None) -> list[float]:
    """Total energy (J) of one run for each of the eight input states."""
    program = get_program(kind)
    return [run_program_analog(program, *abc, params=params).total_energy for abc in INPUT_ORDER]


def average_cell_energy(kind: CellKind | str, params: VteamParams | None = None) -> float:
    """Mean per-run energy over the eight input states, in nJ."""
    energies = cell_energies(kind, params)
    return sum(energies) / len(energies) * 1e9
