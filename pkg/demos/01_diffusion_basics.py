"""Anisotropic diffusion in a nutshell.

Builds a synthetic shape-on-texture test card, runs Perona-Malik
diffusion with the standard K=20 / 20-iteration setting, and shows that
texture vanishes while the shape outline survives.
"""

import numpy as np

from texsup import (
    ConductionFn,
    ConductionKind,
    DiffusionSpec,
    PlaneImage,
    diffuse,
    edge_preservation,
    perona_malik_spec,
    save_image,
    total_variation,
)


def test_card(size=128, seed=0):
    """Bright disc on a dark background, both covered in fine texture."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:size, 0:size]
    disc = (yy - size / 2) ** 2 + (xx - size / 2) ** 2 < (size / 3) ** 2
    base = np.where(disc, 190.0, 60.0)
    texture = rng.uniform(-10, 10, size=(size, size))
    return PlaneImage(np.clip(base + texture, 0, 255)[None])


def main():
    img = test_card()
    save_image(img, "demo_card_input.png")

    spec = perona_malik_spec()  # exponential conduction, K=20, 20 iterations
    out = diffuse(img, spec)
    save_image(out, "demo_card_diffused.png")

    print(f"total variation: {total_variation(img):,.0f} -> {total_variation(out):,.0f}")
    print(f"edge preservation (threshold 60): {edge_preservation(img, out):.3f}")

    # The robust (Tukey) variant cuts diffusion off entirely above its scale,
    # giving even sharper edges at the cost of more residual texture.
    tukey = DiffusionSpec(ConductionFn(ConductionKind.TUKEY, 20.0), 20, 0.1)
    out_t = diffuse(img, tukey)
    save_image(out_t, "demo_card_tukey.png")
    print(f"tukey edge preservation:          {edge_preservation(img, out_t):.3f}")


if __name__ == "__main__":
    main()
