"""Score a pair of images, standard and lite variants.

The score compares 512x512 Gram matrices of deep features, so it never
needs the two images to share a resolution. Identical inputs score 1.0.
"""

import numpy as np

from deepssim import SimilarityConfig, deepssim, deepssim_lite

from _common import blob_image, ensure_weights, pink_image

weights = ensure_weights()

reference = pink_image(128, 128, seed=1)
same = reference.copy()
other = blob_image(128, 128, seed=2)

print("\nidentical pair (must be 1.0):")
print(f"  standard: {deepssim(reference, same, weights):.6f}")
print(f"  lite:     {deepssim_lite(reference, same, weights):.6f}")

print("\nunrelated pair:")
print(f"  standard: {deepssim(reference, other, weights):.6f}")
print(f"  lite:     {deepssim_lite(reference, other, weights):.6f}")

# the window geometry of the standard variant is configurable
for window in (4, 8, 32, 512):
    cfg = SimilarityConfig(window=window, stride=window)
    print(f"  window {window:3d}: {deepssim(reference, other, weights, cfg):.6f}")

# a mildly corrupted copy lands between the two extremes
noisy = np.clip(reference + np.random.default_rng(0).normal(0, 0.05, reference.shape), 0, 1).astype(np.float32)
print(f"\nnoisy copy: {deepssim(reference, noisy, weights):.6f}")
