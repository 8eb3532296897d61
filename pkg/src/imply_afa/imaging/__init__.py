"""Image applications on approximate adders, quality metrics and PGM/PPM I/O."""
from .apps import AddConvention, grayscale, image_add, motion_detect
from .pnm import read_pnm, write_pnm
from .quality import QualityReport, psnr, ssim_mssim

__all__ = ["AddConvention", "QualityReport", "grayscale", "image_add", "motion_detect",
           "psnr", "read_pnm", "ssim_mssim", "write_pnm"]
