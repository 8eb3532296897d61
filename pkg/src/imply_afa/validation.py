"""Input validation helpers shared by the adders, estimators and image apps."""
from __future__ import annotations

import numbers

import numpy as np


def check_bit(value, name: str = "bit") -> int:
    if value not in (0, 1):
        raise ValueError(f"{name} must be 0 or 1, got {value!r}")
    return int(value)


def check_operand(value, n_bits: int, name: str = "operand") -> int:
    if not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if not 0 <= value < (1 << n_bits):
        raise ValueError(f"{name}={value} does not fit in {n_bits} unsigned bits")
    return int(value)


def check_operand_array(X, n_bits: int, name: str = "X") -> np.ndarray:
    """Integer array with every entry in ``[0, 2**n_bits)``."""
    arr = np.asarray(X)
    if arr.dtype.kind == "f":
        if not np.all(np.isfinite(arr)) or not np.all(arr == np.round(arr)):
            raise ValueError(f"{name} must hold integer values")
    elif arr.dtype.kind not in "iub":
        raise TypeError(f"{name} must be numeric, got dtype {arr.dtype}")
    arr = arr.astype(np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= (1 << n_bits)):
        raise ValueError(f"{name} entries must lie in [0, {1 << n_bits})")
    return arr


def check_same_shape(*arrays, names=None) -> None:
    shapes = [np.shape(a) for a in arrays]
    if len(set(shapes)) > 1:
        label = ", ".join(f"{n}={s}" for n, s in zip(names or range(len(shapes)), shapes))
        raise ValueError(f"dimension mismatch: {label}")


def check_image(img, bit_depth: int = 8, channels: int | None = None, name: str = "image") -> np.ndarray:
    arr = np.asarray(img)
    if arr.ndim not in (2, 3) or 0 in arr.shape[:2]:
        raise ValueError(f"{name} must be a non-empty 2-D (or HxWxC) array, got shape {arr.shape}")
    if channels is not None:
        got = 1 if arr.ndim == 2 else arr.shape[2]
        if got != channels:
            raise ValueError(f"{name} must have {channels} channel(s), got {got}")
    return check_operand_array(arr, bit_depth, name)
