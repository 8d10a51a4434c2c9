"""Cartoonization pipeline.

Color palette reduction by repeated bilateral filtering, combined with a
black edge mask built from the grayscale image via median filtering and
adaptive thresholding.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from .image import PlaneImage, to_grayscale
from .smoothing import BilateralSpec, bilateral, median_filter


@dataclass(frozen=True)
class CartoonSpec:
    bilateral_passes: int = 4
    bilateral: BilateralSpec = field(default_factory=BilateralSpec)
    median_radius: int = 3        # 7x7 window
    thresh_block_radius: int = 4  # 9x9 block
    thresh_offset: float = 2.0

    def __post_init__(self):
        if self.bilateral_passes < 1:
            raise ValueError("bilateral_passes must be >= 1")
        if self.median_radius < 1 or self.thresh_block_radius < 1:
            raise ValueError("window radii must be >= 1")


def adaptive_threshold(img: PlaneImage, block_radius: int, offset: float) -> PlaneImage:
    """Binary mask: 255 where the pixel exceeds its local box mean minus
    ``offset``, else 0. 1-channel input only."""
    if img.channels != 1:
        raise ValueError("adaptive_threshold accepts 1-channel images only")
    plane = img.planes[0]
    size = 2 * block_radius + 1
    local_mean = ndimage.uniform_filter(plane, size=size, mode="nearest")
    mask = np.where(plane > local_mean - offset, 255.0, 0.0)
    return PlaneImage(mask[None, :, :])


def edge_mask(img: PlaneImage, spec: CartoonSpec) -> PlaneImage:
    """Grayscale -> median filter -> adaptive threshold."""
    gray = to_grayscale(img)
    smoothed = median_filter(gray, spec.median_radius)
    return adaptive_threshold(smoothed, spec.thresh_block_radius, spec.thresh_offset)


def cartoonize(img: PlaneImage, spec: CartoonSpec = CartoonSpec()) -> PlaneImage:
    """Bilateral color reduction masked by black edge lines."""
    if img.channels != 3:
        raise ValueError("cartoonize needs a 3-channel image")
    color = img
    for _ in range(spec.bilateral_passes):
        color = bilateral(color, spec.bilateral)
    mask = edge_mask(img, spec)
    combined = color.planes * (mask.planes[0] / 255.0)
    return PlaneImage(combined)
