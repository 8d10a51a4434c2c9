"""texsup: texture-suppressing image filters and deterministic batch
augmentation.

Filters: Perona-Malik and robust (Tukey) anisotropic diffusion,
Gaussian blur, bilateral filter, median filter, and a cartoonization
pipeline. Policies reproduce the augmentation regimes these filters
were designed for: dataset doubling, a stochastic diffusion/blur mix,
and patch-wise diffusion.
"""

from .cartoon import CartoonSpec, adaptive_threshold, cartoonize
from .diffusion import (
    ConductionFn,
    ConductionKind,
    DiffusionSpec,
    conduction,
    diffuse,
    diffuse_step,
    perona_malik_spec,
)
from .image import (
    BoundaryMode,
    PlaneImage,
    from_u8,
    neighbor,
    to_grayscale,
    to_u8,
)
from .io import load_image, save_image
from .metrics import (
    MetricsReport,
    edge_preservation,
    gradient_energy,
    psnr,
    total_variation,
)
from .pipeline import PipelineConfig, RunSummary, enumerate_inputs, run
from .policy import FilterSpec, Method, PolicyKind, PolicySpec, apply, apply_filter, sample
from .rng import SeededRng, derive_stream_seed
from .smoothing import (
    BilateralSpec,
    GaussianSpec,
    bilateral,
    gaussian_blur,
    gaussian_kernel,
    median_filter,
)

__version__ = "0.1.0"
