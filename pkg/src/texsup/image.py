"""Raster data model shared by every filter.

Images are stored planar (channel, row, column) as float64 on the 0-255
intensity scale. All filters treat channels independently; the only
channel-mixing operation is :func:`to_grayscale`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np


class BoundaryMode(Enum):
    """Out-of-range neighbor handling. Replicate clamps to the nearest
    in-range pixel, which realizes a zero-flux (Neumann) boundary for
    difference stencils."""

    REPLICATE = "replicate"


# BT.601 luma weights (R, G, B); sum to 1.
LUMA_WEIGHTS = (0.299, 0.587, 0.114)

_RANGE_EPS = 1e-9


@dataclass(frozen=True)
class PlaneImage:
    """Multi-channel float64 raster, planar layout.

    ``planes`` has shape (channels, height, width) with channels 1 or 3
    and every value finite in [0, 255]. Instances are treated as
    immutable; filters always allocate a new image.
    """

    planes: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.planes, dtype=np.float64)
        if p.ndim != 3:
            raise ValueError(f"planes must be 3-D (c, h, w), got shape {p.shape}")
        c, h, w = p.shape
        if c not in (1, 3):
            raise ValueError(f"channels must be 1 or 3, got {c}")
        if h < 1 or w < 1:
            raise ValueError(f"image must be at least 1x1, got {h}x{w}")
        if not np.all(np.isfinite(p)):
            raise ValueError("image contains non-finite values")
        lo, hi = p.min(), p.max()
        # Absorb sub-1e-9 float drift from unclamped filter arithmetic;
        # anything larger is a real range violation.
        if lo < -_RANGE_EPS or hi > 255.0 + _RANGE_EPS:
            raise ValueError("intensities must lie in [0, 255]")
        if lo < 0.0 or hi > 255.0:
            p = np.clip(p, 0.0, 255.0)
        object.__setattr__(self, "planes", p)
        self.planes.setflags(write=False)

    @property
    def channels(self) -> int:
        return self.planes.shape[0]

    @property
    def height(self) -> int:
        return self.planes.shape[1]

    @property
    def width(self) -> int:
        return self.planes.shape[2]

    def copy(self) -> "PlaneImage":
        return PlaneImage(self.planes.copy())


def from_u8(array: np.ndarray) -> PlaneImage:
    """Widen a uint8 array to a PlaneImage.

    Accepts (h, w) grayscale, (h, w, 1) or (h, w, 3) interleaved arrays.
    """
    a = np.asarray(array)
    if a.ndim == 2:
        a = a[:, :, None]
    if a.ndim != 3 or a.shape[2] not in (1, 3):
        raise ValueError(f"expected (h, w[, 1|3]) array, got shape {a.shape}")
    return PlaneImage(np.moveaxis(a, 2, 0).astype(np.float64))


def to_u8(img: PlaneImage) -> np.ndarray:
    """Quantize to an interleaved (h, w, c) uint8 array.

    Rounds half away from zero, then clamps to [0, 255] to absorb
    floating-point drift from the filters.
    """
    rounded = np.floor(img.planes + 0.5)  # values are nonnegative
    clipped = np.clip(rounded, 0.0, 255.0)
    return np.moveaxis(clipped, 0, 2).astype(np.uint8)


def to_grayscale(img: PlaneImage) -> PlaneImage:
    """BT.601 luma conversion; rejects non-3-channel input."""
    if img.channels != 3:
        raise ValueError(f"to_grayscale needs a 3-channel image, got {img.channels}")
    wr, wg, wb = LUMA_WEIGHTS
    gray = wr * img.planes[0] + wg * img.planes[1] + wb * img.planes[2]
    return PlaneImage(gray[None, :, :])


def neighbor(
    img: PlaneImage,
    x: int,
    y: int,
    dx: int,
    dy: int,
    mode: BoundaryMode = BoundaryMode.REPLICATE,
    channel: int = 0,
) -> float:
    """Read the (dx, dy) neighbor of pixel (x, y) with boundary clamping."""
    if not (0 <= x < img.width and 0 <= y < img.height):
        raise ValueError(f"pixel ({x}, {y}) out of range")
    if abs(dx) > 1 or abs(dy) > 1:
        raise ValueError("offsets limited to |dx|, |dy| <= 1")
    if mode is not BoundaryMode.REPLICATE:
        raise ValueError(f"unsupported boundary mode: {mode}")
    nx = min(max(x + dx, 0), img.width - 1)
    ny = min(max(y + dy, 0), img.height - 1)
    return float(img.planes[channel, ny, nx])


def pad_replicate(plane: np.ndarray, radius: int) -> np.ndarray:
    """Edge-replicate padding used by every windowed filter."""
    return np.pad(plane, radius, mode="edge")
