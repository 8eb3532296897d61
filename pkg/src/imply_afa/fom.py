"""Figures of merit trading circuit cost against output accuracy."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from . import reference as ref
from .cells import CellKind
from .rca import EXACT_ENERGY_NJ, EXACT_STEPS, RcaConfig, energy_estimate, step_count

BASELINE_STEPS = EXACT_STEPS * 8                    # 176
BASELINE_ENERGY_NJ = round(EXACT_ENERGY_NJ * 8, 5)  # 15.26872


@dataclass(frozen=True)
class FomInputs:
    energy: float            # nJ for the whole n-bit adder
    steps: int
    nmed: float
    psnr_avg: float          # dB, mean over the three applications
    baseline_steps: int = BASELINE_STEPS
    baseline_energy: float = BASELINE_ENERGY_NJ

    def __post_init__(self):
        if not 0 <= self.nmed < 1:
            raise ValueError(f"nmed must lie in [0, 1), got {self.nmed}")
        if not math.isfinite(self.psnr_avg):
            raise ValueError("psnr_avg must be finite")

    def to_dict(self) -> dict:
        return asdict(self)


def fom1(x: FomInputs) -> float:
    """EDP / ((1 - NMED) * PSNR), EDP taken as energy (nJ) times step count. Lower is better."""
    if x.psnr_avg <= 0:
        raise ValueError(f"fom1 is undefined for psnr_avg={x.psnr_avg}")
    return x.energy * x.steps / ((1.0 - x.nmed) * x.psnr_avg)


def fom2(x: FomInputs) -> float:
    """Energy saving * delay saving * PSNR^2 against the exact adder. Higher is better."""
    energy_saving = (x.baseline_energy - x.energy) / x.baseline_energy
    delay_saving = (x.baseline_steps - x.steps) / x.baseline_steps
    return energy_saving * delay_saving * x.psnr_avg ** 2


def published_inputs(cell: CellKind | str, scenario: int = 3) -> FomInputs:
    """Inputs assembled from the published per-cell figures for one scenario.

    Energy and steps come from the cost formulas on the published per-cell
    constants; NMED and the three PSNRs are the printed values.
    """
    kind = CellKind.parse(cell)
    config = RcaConfig.scenario(scenario, kind)
    name = kind.value
    psnrs = [ref.IMAGE_QUALITY[app][scenario][name][0] for app in ("add", "sub", "gray")]
    return FomInputs(
        energy=energy_estimate(config),
        steps=step_count(config),
        nmed=float(ref.ERROR_METRICS[scenario][name][1]),
        psnr_avg=sum(psnrs) / len(psnrs),
    )


def inputs_from_metrics(entry: dict) -> FomInputs:
    """Build inputs from one cell entry of a metrics document.

    Expected keys: ``energy_nj``, ``steps``, ``nmed`` and either ``psnr_avg``
    or ``psnr`` (a list or a mapping of per-application values).
    """
    try:
        psnr = entry["psnr_avg"] if "psnr_avg" in entry else entry["psnr"]
        if isinstance(psnr, dict):
            psnr = list(psnr.values())
        if isinstance(psnr, (list, tuple)):
            psnr = sum(psnr) / len(psnr)
        return FomInputs(float(entry["energy_nj"]), int(entry["steps"]), float(entry["nmed"]), float(psnr))
    except KeyError as exc:
        raise ValueError(f"metrics entry is missing {exc.args[0]!r}") from None


def rank(scores: dict[str, float], higher_is_better: bool) -> list[str]:
    return sorted(scores, key=scores.get, reverse=higher_is_better)


def fom_table(inputs: dict[str, FomInputs]) -> dict:
    f1 = {k: fom1(v) for k, v in inputs.items()}
    f2 = {k: fom2(v) for k, v in inputs.items()}
    return {
        "cells": {k: {"inputs": inputs[k].to_dict(), "fom1": f1[k], "fom2": f2[k]} for k in inputs},
        "rank_fom1": rank(f1, higher_is_better=False),
        "rank_fom2": rank(f2, higher_is_better=True),
    }
