"""Standard test images, taken from scikit-image's bundled data (optional extra).

All images are cropped or decimated to 256x256 so they pair up.
"""
from __future__ import annotations

import numpy as np


def _data():
    try:
        from skimage import data
    except ImportError as exc:  # pragma: no cover - depends on environment
        raise ImportError(
            "sample images need scikit-image; install with `pip install artifact[samples]`"
        ) from exc
    return data


def _to_gray(rgb: np.ndarray) -> np.ndarray:
    # exact integer mean of the channels, the same conversion the grayscale app models
    return (rgb.astype(np.int64).sum(axis=2) // 3).astype(np.uint8)


def cameraman() -> np.ndarray:
    return _data().camera()[::2, ::2].copy()


def coins() -> np.ndarray:
    """Stand-in for the rice image: dark background, many small bright objects."""
    return _data().coins()[23:279, 64:320].copy()


def astronaut() -> np.ndarray:
    return _data().astronaut()[::2, ::2].copy()


def frame_pair() -> tuple[np.ndarray, np.ndarray]:
    """Two views of one scene with small displacement, used as consecutive frames (250x256)."""
    left, right, _ = _data().stereo_motorcycle()
    return _to_gray(left)[::2, :512:2].copy(), _to_gray(right)[::2, :512:2].copy()


def gray_set() -> dict[str, np.ndarray]:
    data = _data()
    out = {"cameraman": cameraman(), "coins": coins()}
    for name in ("moon", "page", "text", "brick", "grass", "gravel", "camera"):
        img = getattr(data, name)()
        if name == "camera":
            img = img[256:, 256:]        # other quadrant, a distinct crop
        h, w = img.shape
        step = max(1, min(h, w) // 256)
        out[name] = img[::step, ::step][:256, :256].copy()
    return {k: v for k, v in out.items() if v.shape == (256, 256)}


def rgb_set() -> dict[str, np.ndarray]:
    data = _data()
    out = {"astronaut": astronaut()}
    for name in ("chelsea", "coffee", "rocket", "retina"):
        img = getattr(data, name)()
        step = max(1, min(img.shape[:2]) // 256)
        out[name] = img[::step, ::step][:256, :256].copy()
    return out
