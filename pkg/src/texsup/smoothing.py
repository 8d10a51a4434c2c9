"""Gaussian blur, bilateral filter, and median filter.

All three use replicate boundaries and operate per channel. Gaussian
blur is separable; the bilateral filter is the direct windowed form
(no grid/lattice approximations).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from .image import PlaneImage, pad_replicate


@dataclass(frozen=True)
class GaussianSpec:
    """Blur parameterized by kernel half-width ``radius``.

    ``sigma`` defaults to radius / 3 so the (2r+1)-tap kernel keeps over
    99.7% of the Gaussian mass. This is the interpretation used for the
    random-radius augmentation draws.
    """

    radius: int
    sigma: float = field(default=0.0)

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError("radius must be >= 1")
        if self.sigma == 0.0:
            object.__setattr__(self, "sigma", self.radius / 3.0)
        if not self.sigma > 0:
            raise ValueError("sigma must be positive")


@dataclass(frozen=True)
class BilateralSpec:
    sigma_spatial: float = 5.0
    sigma_range: float = 50.0  # intensity units on the 0-255 scale

    def __post_init__(self):
        if not (self.sigma_spatial > 0 and self.sigma_range > 0):
            raise ValueError("bilateral sigmas must be positive")

    @property
    def window_radius(self) -> int:
        return math.ceil(3.0 * self.sigma_spatial)


def gaussian_kernel(spec: GaussianSpec) -> np.ndarray:
    """Symmetric 1-D kernel of length 2*radius+1, normalized to sum 1."""
    x = np.arange(-spec.radius, spec.radius + 1, dtype=np.float64)
    w = np.exp(-(x * x) / (2.0 * spec.sigma * spec.sigma))
    return w / w.sum()


def gaussian_blur(img: PlaneImage, spec: GaussianSpec) -> PlaneImage:
    """Separable Gaussian convolution (horizontal then vertical)."""
    k = gaussian_kernel(spec)
    out = np.empty_like(img.planes)
    for c, plane in enumerate(img.planes):
        tmp = ndimage.convolve1d(plane, k, axis=1, mode="nearest")
        out[c] = ndimage.convolve1d(tmp, k, axis=0, mode="nearest")
    return PlaneImage(out)


def bilateral(img: PlaneImage, spec: BilateralSpec) -> PlaneImage:
    """Edge-preserving smoothing whose weights combine spatial distance
    and photometric distance; per channel, replicate boundary."""
    r = spec.window_radius
    inv2ss = 1.0 / (2.0 * spec.sigma_spatial**2)
    inv2sr = 1.0 / (2.0 * spec.sigma_range**2)
    out = np.empty_like(img.planes)
    for c, plane in enumerate(img.planes):
        padded = pad_replicate(plane, r)
        h, w = plane.shape
        acc = np.zeros_like(plane)
        norm = np.zeros_like(plane)
        for dy in range(-r, r + 1):
            for dx in range(-r, r + 1):
                shifted = padded[r + dy : r + dy + h, r + dx : r + dx + w]
                sw = math.exp(-(dx * dx + dy * dy) * inv2ss)
                diff = shifted - plane
                wgt = sw * np.exp(-(diff * diff) * inv2sr)
                acc += wgt * shifted
                norm += wgt
        out[c] = acc / norm
    return PlaneImage(out)


def median_filter(img: PlaneImage, window_radius: int) -> PlaneImage:
    """Median over the (2r+1)^2 replicate-padded window; 1-channel only."""
    if img.channels != 1:
        raise ValueError("median_filter accepts 1-channel images only")
    if window_radius < 1:
        raise ValueError("window_radius must be >= 1")
    r = window_radius
    padded = pad_replicate(img.planes[0], r)
    windows = np.lib.stride_tricks.sliding_window_view(padded, (2 * r + 1, 2 * r + 1))
    med = np.median(windows, axis=(2, 3))
    return PlaneImage(med[None, :, :])
