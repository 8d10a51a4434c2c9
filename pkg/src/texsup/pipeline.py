"""Batch augmentation engine.

Walks an input tree, applies a policy to every image, and writes the
outputs plus a JSON-lines provenance manifest. Determinism contract:
for a fixed input tree and seed, every output byte and every manifest
field except ``elapsed_ms`` is identical regardless of worker count.
Each file gets its own RNG stream derived from (seed, file index), so
scheduling order cannot change any draw.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .io import IMAGE_SUFFIXES, load_image, save_image
from .policy import (
    FilterSpec,
    Method,
    PolicyKind,
    PolicySpec,
    apply_filter,
    apply_patchwise,
    sample,
)
from .rng import SeededRng, derive_stream_seed


@dataclass(frozen=True)
class PipelineConfig:
    input_dir: Path
    output_dir: Path
    policy: PolicySpec
    seed: int = 0
    workers: int = 1
    output_format: str = "png"  # "png" or "jpeg" (quality 95)
    manifest_path: Path | None = None  # default: <output_dir>/manifest.jsonl

    def __post_init__(self):
        object.__setattr__(self, "input_dir", Path(self.input_dir))
        object.__setattr__(self, "output_dir", Path(self.output_dir))
        if not self.input_dir.is_dir():
            raise FileNotFoundError(f"input directory not found: {self.input_dir}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.output_format not in ("png", "jpeg"):
            raise ValueError(f"output_format must be png or jpeg, got {self.output_format}")
        if self.manifest_path is None:
            object.__setattr__(self, "manifest_path", self.output_dir / "manifest.jsonl")
        else:
            object.__setattr__(self, "manifest_path", Path(self.manifest_path))


@dataclass
class RunSummary:
    processed: int = 0
    emitted: int = 0
    skipped: int = 0
    wall_time_s: float = 0.0


def enumerate_inputs(input_dir: str | Path) -> list[tuple[int, Path]]:
    """Recursive listing of *.png/*.jpg/*.jpeg, sorted by the UTF-8 bytes
    of the relative path. The resulting index order is the anchor every
    per-file RNG stream is derived from."""
    root = Path(input_dir)
    if not root.is_dir():
        raise FileNotFoundError(f"input directory not found: {root}")
    rels = [
        p.relative_to(root)
        for p in root.rglob("*")
        if p.is_file() and p.suffix.lower() in IMAGE_SUFFIXES
    ]
    rels.sort(key=lambda r: r.as_posix().encode("utf-8"))
    return [(i, root / r) for i, r in enumerate(rels)]


def filter_params(spec: FilterSpec) -> dict:
    """Flatten a FilterSpec into manifest-ready key/value pairs."""
    m = spec.method
    if m is Method.IDENTITY:
        return {}
    if m is Method.DIFFUSION:
        d = spec.params
        return {
            "conduction": d.conduction.kind.value,
            "k": d.conduction.scale,
            "iterations": d.iterations,
            "lambda": d.time_step,
        }
    if m is Method.GAUSSIAN:
        return {"radius": spec.params.radius, "sigma": spec.params.sigma}
    if m is Method.BILATERAL:
        return {
            "sigma_spatial": spec.params.sigma_spatial,
            "sigma_range": spec.params.sigma_range,
        }
    if m is Method.CARTOON:
        c = spec.params
        return {
            "bilateral_passes": c.bilateral_passes,
            "sigma_spatial": c.bilateral.sigma_spatial,
            "sigma_range": c.bilateral.sigma_range,
            "median_radius": c.median_radius,
            "thresh_block_radius": c.thresh_block_radius,
            "thresh_offset": c.thresh_offset,
        }
    raise ValueError(f"unknown method {m}")  # pragma: no cover


def _process_file(config: PipelineConfig, file_index: int, path: Path) -> list[dict]:
    """Produce and write all outputs for one input; returns its manifest
    records (or a single skip record)."""
    rel = path.relative_to(config.input_dir)
    start = time.perf_counter()
    try:
        img = load_image(path)
    except Exception as exc:
        return [{
            "input_path": rel.as_posix(),
            "file_index": file_index,
            "policy": config.policy.kind.value,
            "skipped": True,
            "reason": f"decode failed: {exc}",
        }]

    rng = SeededRng(derive_stream_seed(config.seed, file_index))
    specs = sample(config.policy, rng)
    ext = "png" if config.output_format == "png" else "jpg"

    if config.policy.kind is PolicyKind.PATCH_JIGSAW:
        outputs = [(apply_patchwise(img, specs), "patch-jigsaw",
                    {f"patch{i}.{k}": v
                     for i, s in enumerate(specs)
                     for k, v in [("method", s.method.value), *filter_params(s).items()]})]
    else:
        outputs = [(apply_filter(s, img), s.method.value, filter_params(s)) for s in specs]

    records = []
    for ordinal, (out_img, branch, params) in enumerate(outputs):
        out_rel = rel.parent / f"{rel.stem}__{branch}{ordinal}.{ext}"
        out_path = config.output_dir / out_rel
        out_path.parent.mkdir(parents=True, exist_ok=True)
        try:
            save_image(out_img, out_path)
        except Exception as exc:
            records.append({
                "input_path": rel.as_posix(),
                "file_index": file_index,
                "policy": config.policy.kind.value,
                "skipped": True,
                "reason": f"write failed: {exc}",
            })
            continue
        digest = hashlib.sha256(out_path.read_bytes()).hexdigest()
        records.append({
            "input_path": rel.as_posix(),
            "file_index": file_index,
            "policy": config.policy.kind.value,
            "branch": branch,
            "params": params,
            "output_path": out_rel.as_posix(),
            "output_sha256": digest,
            "elapsed_ms": round((time.perf_counter() - start) * 1000.0, 3),
        })
    return records


def run(config: PipelineConfig) -> RunSummary:
    """Process every input under ``config.input_dir`` and write the
    manifest. Manifest records are ordered by (file_index, output
    ordinal) regardless of completion order."""
    started = time.perf_counter()
    inputs = enumerate_inputs(config.input_dir)
    config.output_dir.mkdir(parents=True, exist_ok=True)

    if config.workers == 1:
        per_file = [_process_file(config, i, p) for i, p in inputs]
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            per_file = list(pool.map(lambda ip: _process_file(config, *ip), inputs))

    summary = RunSummary()
    config.manifest_path.parent.mkdir(parents=True, exist_ok=True)
    with open(config.manifest_path, "w", encoding="utf-8") as fh:
        for records in per_file:
            file_ok = False
            for rec in records:
                fh.write(json.dumps(rec) + "\n")
                if rec.get("skipped"):
                    summary.skipped += 1
                else:
                    summary.emitted += 1
                    file_ok = True
            if file_ok:
                summary.processed += 1
    summary.wall_time_s = time.perf_counter() - started
    return summary
