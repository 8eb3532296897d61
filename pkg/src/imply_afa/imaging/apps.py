"""Image addition, motion detection and grayscale conversion on approximate adders."""
from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from ..rca import RcaConfig, rca_add_array
from ..validation import check_image, check_same_shape
from .quality import QualityReport, quality

GRAY_ADDER_BITS = 10


class AddConvention(str, Enum):
    """How 9-bit sums are compared against the exact reference.

    ``full``  keeps both sums at full range and scores with peak 510, the
              largest exact sum of two 8-bit pixels.
    ``full255`` keeps full range but scores with peak 255.
    ``clip``  saturates both sums at 255 and scores with peak 255.
    """

    FULL = "full"
    FULL255 = "full255"
    CLIP = "clip"


@dataclass(frozen=True)
class AppResult:
    output: np.ndarray
    reference: np.ndarray
    peak: int

    def score(self) -> QualityReport:
        return quality(self.reference, self.output, self.peak)


def _as_exact(config: RcaConfig) -> RcaConfig:
    return replace(config, approx_lsbs=0)


def image_add(img1, img2, config: RcaConfig,
              convention: AddConvention | str = AddConvention.FULL) -> AppResult:
    """Pixel-wise ``img1 + img2`` through the configured adder (carry-in 0)."""
    a = check_image(img1, 8, name="img1")
    b = check_image(img2, 8, name="img2")
    check_same_shape(a, b, names=("img1", "img2"))
    convention = AddConvention(convention)
    out = rca_add_array(config, a, b)
    ref = rca_add_array(_as_exact(config), a, b)
    if convention is AddConvention.CLIP:
        out, ref, peak = np.minimum(out, 255), np.minimum(ref, 255), 255
    elif convention is AddConvention.FULL255:
        peak = 255
    else:
        peak = 510
    return AppResult(out.astype(np.uint16), ref.astype(np.uint16), peak)


def _difference(config: RcaConfig, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # a + NOT(b) + 1 in n+1 bits; the carry-out is the sign bit flipped
    mask = (1 << config.n) - 1
    total = rca_add_array(config, a, (~b) & mask, cin=1)
    return np.minimum(np.abs(total - (1 << config.n)), mask)


def motion_detect(img1, img2, config: RcaConfig) -> AppResult:
    """``|img1 - img2|`` via two's-complement addition on the configured adder."""
    a = check_image(img1, 8, name="img1")
    b = check_image(img2, 8, name="img2")
    check_same_shape(a, b, names=("img1", "img2"))
    out = _difference(config, a, b)
    ref = _difference(_as_exact(config), a, b)
    return AppResult(out.astype(np.uint8), ref.astype(np.uint8), 255)


def _gray(config: RcaConfig, rgb: np.ndarray) -> np.ndarray:
    r, g, b = (rgb[..., k] for k in range(3))
    partial = rca_add_array(config, r, g)
    # R+G stays well below 2**10; the clamp only guards the operand width
    limit = (1 << config.n) - 1
    total = rca_add_array(config, np.minimum(partial, limit), b)
    return np.minimum(total // 3, 255)


def grayscale(img, config: RcaConfig) -> AppResult:
    """Mean of R, G, B: two chained adds on a 10-bit adder, then exact division by 3.

    The approximate cells keep their scenario positions (the lowest
    ``config.approx_lsbs`` bits); the two extra high bits are exact.
    """
    rgb = check_image(img, 8, channels=3, name="img")
    wide = RcaConfig(GRAY_ADDER_BITS, config.approx_lsbs, config.cell,
                     config.steps_per_exact, config.energy_per_exact)
    out = _gray(wide, rgb)
    ref = _gray(_as_exact(wide), rgb)
    return AppResult(out.astype(np.uint8), ref.astype(np.uint8), 255)


APPLICATIONS = {"add": image_add, "sub": motion_detect, "gray": grayscale}


def batch_quality(app: str, images: list[np.ndarray], config: RcaConfig, **kw) -> tuple[QualityReport, int]:
    """Average quality over a set of inputs.

    ``add`` and ``sub`` run on consecutive pairs (image k with image k+1);
    ``gray`` runs on every image. Returns the mean report and the run count.
    """
    fn = APPLICATIONS[app]
    if app == "gray":
        runs = [fn(img, config) for img in images]
    else:
        if len(images) < 2:
            raise ValueError(f"batch {app} needs at least two images")
        runs = [fn(x, y, config, **kw) for x, y in zip(images, images[1:])]
    reports = [r.score() for r in runs]
    mean = QualityReport(
        float(np.mean([r.psnr for r in reports])),
        float(np.mean([r.ssim for r in reports])),
        float(np.mean([r.mssim for r in reports])),
    )
    return mean, len(reports)
