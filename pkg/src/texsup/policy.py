"""Stochastic augmentation policies.

Three regimes:

* ``DOUBLE`` - emit the original and a K=20 / 20-iteration diffusion copy
  of every image (dataset doubling for supervised training).
* ``MOCOV2_MIX`` - per image, diffusion with probability 0.5 (iterations
  uniform over 10..20 inclusive), Gaussian blur with probability 0.25
  (radius uniform over 10..20), identity otherwise.
* ``PATCH_JIGSAW`` - split into a 3x3 grid of non-overlapping patches and
  diffuse each patch independently with probability 0.5.

The branch draw uses a single uniform real with fixed thresholds
(diffusion below 0.5, Gaussian below 0.75), so a logged draw fully
determines the branch for manifest replay.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from .cartoon import CartoonSpec, cartoonize
from .diffusion import DiffusionSpec, diffuse, perona_malik_spec
from .image import PlaneImage
from .rng import SeededRng
from .smoothing import BilateralSpec, GaussianSpec, bilateral, gaussian_blur


class Method(Enum):
    IDENTITY = "identity"
    DIFFUSION = "diffusion"
    GAUSSIAN = "gaussian"
    BILATERAL = "bilateral"
    CARTOON = "cartoon"


ParamSpec = Union[DiffusionSpec, GaussianSpec, BilateralSpec, CartoonSpec, None]


@dataclass(frozen=True)
class FilterSpec:
    """One fully-parameterized filter invocation."""

    method: Method
    params: ParamSpec = None

    def __post_init__(self):
        expected = {
            Method.IDENTITY: type(None),
            Method.DIFFUSION: DiffusionSpec,
            Method.GAUSSIAN: GaussianSpec,
            Method.BILATERAL: BilateralSpec,
            Method.CARTOON: CartoonSpec,
        }[self.method]
        if not isinstance(self.params, expected):
            raise ValueError(f"{self.method.value} expects {expected.__name__} params")


IDENTITY = FilterSpec(Method.IDENTITY)


def apply_filter(spec: FilterSpec, img: PlaneImage) -> PlaneImage:
    if spec.method is Method.IDENTITY:
        return img.copy()
    if spec.method is Method.DIFFUSION:
        return diffuse(img, spec.params)
    if spec.method is Method.GAUSSIAN:
        return gaussian_blur(img, spec.params)
    if spec.method is Method.BILATERAL:
        return bilateral(img, spec.params)
    if spec.method is Method.CARTOON:
        return cartoonize(img, spec.params)
    raise ValueError(f"unknown method {spec.method}")  # pragma: no cover


class PolicyKind(Enum):
    DOUBLE = "double"
    MOCOV2_MIX = "mocov2"
    PATCH_JIGSAW = "patch-jigsaw"


@dataclass(frozen=True)
class PolicySpec:
    kind: PolicyKind
    # Diffusion settings shared by all policies; the stochastic policies
    # redraw iterations per image or patch.
    k: float = 20.0
    iterations: int = 20
    time_step: float = 0.1


def sample(policy: PolicySpec, rng: SeededRng) -> list[FilterSpec]:
    """Draw the filter choices for one input image.

    Returns one FilterSpec per output image, except PATCH_JIGSAW which
    returns 9 per-patch specs for its single output.
    """
    if policy.kind is PolicyKind.DOUBLE:
        return [
            IDENTITY,
            FilterSpec(Method.DIFFUSION, perona_malik_spec(policy.k, policy.iterations, policy.time_step)),
        ]
    if policy.kind is PolicyKind.MOCOV2_MIX:
        r = rng.random()
        if r < 0.5:
            iters = rng.randint(10, 20)
            return [FilterSpec(Method.DIFFUSION, perona_malik_spec(policy.k, iters, policy.time_step))]
        if r < 0.75:
            radius = rng.randint(10, 20)
            return [FilterSpec(Method.GAUSSIAN, GaussianSpec(radius))]
        return [IDENTITY]
    if policy.kind is PolicyKind.PATCH_JIGSAW:
        specs = []
        for _ in range(9):
            if rng.random() < 0.5:
                specs.append(FilterSpec(Method.DIFFUSION, perona_malik_spec(policy.k, policy.iterations, policy.time_step)))
            else:
                specs.append(IDENTITY)
        return specs
    raise ValueError(f"unknown policy {policy.kind}")  # pragma: no cover


def apply(policy: PolicySpec, img: PlaneImage, rng: SeededRng) -> list[PlaneImage]:
    """Sample the policy and apply it; returns the emitted images."""
    specs = sample(policy, rng)
    if policy.kind is PolicyKind.PATCH_JIGSAW:
        return [apply_patchwise(img, specs)]
    return [apply_filter(s, img) for s in specs]


def apply_patchwise(img: PlaneImage, specs: list[FilterSpec]) -> PlaneImage:
    """Filter each cell of the 3x3 grid as an independent image
    (per-patch replicate boundary) and reassemble in place."""
    if img.height % 3 != 0 or img.width % 3 != 0:
        raise ValueError(
            f"patch-jigsaw needs dimensions divisible by 3, got {img.width}x{img.height}"
        )
    if len(specs) != 9:
        raise ValueError("patch-jigsaw needs exactly 9 per-patch specs")
    ph, pw = img.height // 3, img.width // 3
    out = np.empty_like(img.planes)
    for i, spec in enumerate(specs):
        gy, gx = divmod(i, 3)
        ys, xs = slice(gy * ph, (gy + 1) * ph), slice(gx * pw, (gx + 1) * pw)
        patch = PlaneImage(img.planes[:, ys, xs].copy())
        out[:, ys, xs] = apply_filter(spec, patch).planes
    return PlaneImage(out)
