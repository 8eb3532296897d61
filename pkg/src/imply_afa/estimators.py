"""scikit-learn compatible wrapper around a configured approximate adder.

The adder is fixed by its hyper-parameters, so ``fit`` only validates them
and records the derived cost figures; ``transform`` performs the additions.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .cells import CellKind, extract_truth_table
from .design import EXACT_TABLE
from .rca import RcaConfig, energy_estimate, memristor_count, rca_add_array, step_count
from .validation import check_operand_array


class ApproximateAdder(TransformerMixin, BaseEstimator):
    """Add operand pairs on an n-bit ripple-carry adder with approximate LSB cells.

    Parameters
    ----------
    cell : str
        One of ICIS1, ICIS2, ICIS3, ECIS, EXACT.
    n_bits : int
        Operand width.
    approx_lsbs : int
        How many low positions use ``cell``; the rest are exact.

    ``X`` has two columns ``(a, b)`` or three ``(a, b, cin)``.
    """

    def __init__(self, cell: str = "ECIS", n_bits: int = 8, approx_lsbs: int = 5):
        self.cell = cell
        self.n_bits = n_bits
        self.approx_lsbs = approx_lsbs

    def _config(self) -> RcaConfig:
        return RcaConfig(n=self.n_bits, approx_lsbs=self.approx_lsbs, cell=CellKind.parse(self.cell))

    def fit(self, X=None, y=None):
        config = self._config()
        self.config_ = config
        kind = config.cell
        self.truth_table_ = EXACT_TABLE if kind is CellKind.EXACT else extract_truth_table(kind)
        self.steps_ = step_count(config)
        self.energy_nj_ = energy_estimate(config)
        self.memristors_ = memristor_count(config.n)
        if X is not None:
            self._split(X)
            self.n_features_in_ = np.asarray(X).shape[1]
        return self

    def _split(self, X):
        X = np.asarray(X)
        if X.ndim != 2 or X.shape[1] not in (2, 3):
            raise ValueError(f"X must have shape (n_samples, 2) or (n_samples, 3), got {X.shape}")
        ops = check_operand_array(X[:, :2], self.n_bits, "X")
        cin = check_operand_array(X[:, 2], 1, "cin") if X.shape[1] == 3 else 0
        return ops[:, 0], ops[:, 1], cin

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "config_")
        a, b, cin = self._split(X)
        return rca_add_array(self.config_, a, b, cin)

    def predict(self, X) -> np.ndarray:
        return self.transform(X)

    def score(self, X, y=None) -> float:
        """``1 - NMED`` of the approximate sums against exact sums on ``X``."""
        check_is_fitted(self, "config_")
        a, b, cin = self._split(X)
        exact = a + b + cin if y is None else np.asarray(y, dtype=np.int64)
        err = np.abs(self.transform(X) - exact)
        return 1.0 - float(err.mean()) / (2 * ((1 << self.n_bits) - 1))
