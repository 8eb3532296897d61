"""Full-reference image quality: PSNR, global SSIM and windowed mean SSIM."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import convolve2d

from ..validation import check_same_shape

K1 = 0.01
K2 = 0.03
WINDOW = 11
SIGMA = 1.5


@dataclass(frozen=True)
class QualityReport:
    psnr: float
    ssim: float
    mssim: float

    def to_dict(self) -> dict:
        # JSON has no infinity; identical images serialise as the string "inf"
        return {"psnr": "inf" if math.isinf(self.psnr) else self.psnr,
                "ssim": self.ssim, "mssim": self.mssim}


def _pair(reference, test) -> tuple[np.ndarray, np.ndarray]:
    check_same_shape(reference, test, names=("reference", "test"))
    return np.asarray(reference, dtype=np.float64), np.asarray(test, dtype=np.float64)


def psnr(reference, test, peak: float = 255.0) -> float:
    """``10 log10(peak^2 / MSE)``; ``math.inf`` when the images are identical."""
    ref, tst = _pair(reference, test)
    mse = float(np.mean((ref - tst) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(peak * peak / mse)


def _ssim_terms(mu_x, mu_y, var_x, var_y, cov, data_range):
    c1 = (K1 * data_range) ** 2
    c2 = (K2 * data_range) ** 2
    return ((2 * mu_x * mu_y + c1) * (2 * cov + c2)) / ((mu_x ** 2 + mu_y ** 2 + c1) * (var_x + var_y + c2))


def global_ssim(reference, test, data_range: float = 255.0) -> float:
    """SSIM evaluated once with the whole image as the window."""
    x, y = _pair(reference, test)
    mx, my = x.mean(), y.mean()
    cov = ((x - mx) * (y - my)).mean()
    return float(_ssim_terms(mx, my, x.var(), y.var(), cov, data_range))


def gaussian_window(size: int = WINDOW, sigma: float = SIGMA) -> np.ndarray:
    ax = np.arange(size) - (size - 1) / 2
    g = np.exp(-(ax ** 2) / (2 * sigma ** 2))
    w = np.outer(g, g)
    return w / w.sum()


def ssim_map(reference, test, data_range: float = 255.0,
             size: int = WINDOW, sigma: float = SIGMA) -> np.ndarray:
    """Local SSIM under a Gaussian window, evaluated only where it fits."""
    x, y = _pair(reference, test)
    if x.ndim != 2:
        raise ValueError("SSIM is defined on single-channel images")
    if min(x.shape) < size:
        raise ValueError(f"image {x.shape} is smaller than the {size}x{size} window")
    w = gaussian_window(size, sigma)

    def filt(a):
        return convolve2d(a, w, mode="valid")

    mx, my = filt(x), filt(y)
    var_x = filt(x * x) - mx ** 2
    var_y = filt(y * y) - my ** 2
    cov = filt(x * y) - mx * my
    return _ssim_terms(mx, my, var_x, var_y, cov, data_range)


def mean_ssim(reference, test, data_range: float = 255.0) -> float:
    return float(ssim_map(reference, test, data_range).mean())


def ssim_mssim(reference, test, data_range: float = 255.0) -> tuple[float, float]:
    return global_ssim(reference, test, data_range), mean_ssim(reference, test, data_range)


def quality(reference, test, peak: float = 255.0) -> QualityReport:
    """PSNR, SSIM, MSSIM with the SSIM dynamic range tied to ``peak``."""
    s, ms = ssim_mssim(reference, test, peak)
    return QualityReport(psnr(reference, test, peak), s, ms)
