"""Shared helpers for the demo scripts: a locally cached weight container and
small synthetic-image generators, so every demo runs self-contained."""

from __future__ import annotations

import io
import os
from pathlib import Path

import numpy as np
from PIL import Image as PILImage

from deepssim import ConvLayer, PreprocessSpec, WeightContainer, load_weights, write_weights
from deepssim.container import VGG16_LAYERS

DEMO_WEIGHTS = Path(__file__).parent / "demo_weights.dsimw"


def ensure_weights():
    """Use $DEEPSIM_WEIGHTS when set (e.g. a pretrained export); otherwise
    build and cache a deterministic seeded container next to the demos.

    Seeded weights exercise every code path; score *values* are only
    comparable to published numbers with a pretrained container.
    """
    env = os.environ.get("DEEPSIM_WEIGHTS")
    if env and Path(env).is_file():
        print(f"[demo] using weights from DEEPSIM_WEIGHTS: {env}")
        return load_weights(env)
    if not DEMO_WEIGHTS.is_file():
        print(f"[demo] building seeded demo container at {DEMO_WEIGHTS} ...")
        rng = np.random.default_rng(1234)
        layers = []
        for name, cin, cout in VGG16_LAYERS:
            scale = np.sqrt(2.0 / (cin * 9))
            layers.append(
                ConvLayer(
                    name,
                    (rng.standard_normal((cout, cin, 3, 3)) * scale).astype(np.float32),
                    (rng.standard_normal(cout) * 0.02).astype(np.float32),
                )
            )
        write_weights(DEMO_WEIGHTS, WeightContainer(tuple(layers), PreprocessSpec(), source="demo-seeded"))
    return load_weights(DEMO_WEIGHTS)


def pink_image(h: int, w: int, seed: int = 0) -> np.ndarray:
    """1/f-amplitude noise: natural-image-like spectral statistics."""
    rng = np.random.default_rng(seed)
    fy = np.fft.fftfreq(h)[:, None]
    fx = np.fft.rfftfreq(w)[None, :]
    amp = 1.0 / np.maximum(np.hypot(fy, fx), 1.0 / max(h, w))
    img = np.zeros((h, w, 3))
    for c in range(3):
        spec = amp * np.exp(1j * rng.uniform(0, 2 * np.pi, amp.shape))
        plane = np.fft.irfft2(spec, s=(h, w))
        img[..., c] = (plane - plane.min()) / max(np.ptp(plane), 1e-9)
    return img.astype(np.float32)


def blob_image(h: int, w: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    yy, xx = np.meshgrid(np.arange(h), np.arange(w), indexing="ij")
    img = np.zeros((h, w, 3))
    for _ in range(10):
        cy, cx = rng.uniform(0, h), rng.uniform(0, w)
        sig = rng.uniform(0.06, 0.22) * min(h, w)
        blob = np.exp(-((yy - cy) ** 2 + (xx - cx) ** 2) / (2 * sig**2))
        img += blob[..., None] * rng.uniform(0.2, 1.0, 3)
    return np.clip(img / max(img.max(), 1e-6), 0, 1).astype(np.float32)


def gaussian_blur(img: np.ndarray, sigma: float) -> np.ndarray:
    if sigma <= 0:
        return img.copy()
    radius = max(1, int(np.ceil(3 * sigma)))
    t = np.arange(-radius, radius + 1)
    k = np.exp(-(t**2) / (2 * sigma**2))
    k /= k.sum()
    out = img.astype(np.float64)
    for axis in (0, 1):
        padded = np.pad(out, [(radius, radius) if a == axis else (0, 0) for a in range(3)], mode="edge")
        acc = np.zeros_like(out)
        for i, c in enumerate(k):
            sl = [slice(None)] * 3
            sl[axis] = slice(i, i + img.shape[axis])
            acc += c * padded[tuple(sl)]
        out = acc
    return np.clip(out, 0, 1).astype(np.float32)


def jpeg_roundtrip(img: np.ndarray, quality: int) -> np.ndarray:
    buf = io.BytesIO()
    arr = np.clip(np.rint(img.astype(np.float64) * 255), 0, 255).astype(np.uint8)
    PILImage.fromarray(arr, "RGB").save(buf, format="JPEG", quality=quality)
    buf.seek(0)
    with PILImage.open(buf) as im:
        return np.asarray(im.convert("RGB"), dtype=np.uint8).astype(np.float32) / 255.0
