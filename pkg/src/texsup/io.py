"""PNG/JPEG decode and encode via Pillow.

Only baseline PNG and JPEG (quality 95 on encode) are supported; alpha
channels and 16-bit depths are out of scope and are converted away on
load.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image

from .image import PlaneImage, from_u8, to_u8

IMAGE_SUFFIXES = (".png", ".jpg", ".jpeg")
JPEG_QUALITY = 95


def load_image(path: str | Path) -> PlaneImage:
    """Decode a PNG or JPEG file into a PlaneImage (1 or 3 channels)."""
    with Image.open(path) as im:
        if im.mode in ("L", "I;16", "I"):
            im = im.convert("L")
        else:
            im = im.convert("RGB")
        return from_u8(np.asarray(im, dtype=np.uint8))


def save_image(img: PlaneImage, path: str | Path) -> None:
    """Encode to PNG or JPEG (by suffix); JPEG uses quality 95."""
    path = Path(path)
    arr = to_u8(img)
    if arr.shape[2] == 1:
        pil = Image.fromarray(arr[:, :, 0], mode="L")
    else:
        pil = Image.fromarray(arr, mode="RGB")
    suffix = path.suffix.lower()
    if suffix == ".png":
        pil.save(path, format="PNG")
    elif suffix in (".jpg", ".jpeg"):
        pil.save(path, format="JPEG", quality=JPEG_QUALITY)
    else:
        raise ValueError(f"unsupported output format: {path.suffix}")
