"""Simulation and evaluation of IMPLY-based memristive approximate full adders."""
from __future__ import annotations

__version__ = "0.1.0"

from .cells import PROPOSED, CellKind, behavioral_cell, extract_truth_table, get_program
from .design import TruthTable8, filter_candidates, generate_family, score_table
from .error_analysis import ErrorReport, exhaustive_metrics
from .estimators import ApproximateAdder
from .fom import FomInputs, fom1, fom2
from .logic import LogicRow, MicroOp, MicroProgram, ProgramError, run_program, validate_program
from .rca import RcaConfig, energy_estimate, memristor_count, rca_add, rca_add_array, step_count

__all__ = [
    "ApproximateAdder", "CellKind", "ErrorReport", "FomInputs", "LogicRow", "MicroOp",
    "MicroProgram", "PROPOSED", "ProgramError", "RcaConfig", "TruthTable8",
    "behavioral_cell", "energy_estimate", "exhaustive_metrics", "extract_truth_table",
    "filter_candidates", "fom1", "fom2", "generate_family", "get_program", "memristor_count",
    "rca_add", "rca_add_array", "run_program", "score_table", "step_count", "validate_program",
]
