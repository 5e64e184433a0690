"""Score a reference against the same scene at other resolutions.

Feature grids shrink with the input, but the Gram representation is always
512x512, so a 256x256 reference scores directly against 64x64 or 180x120
tests with no resizing or registration anywhere in the pipeline.
"""

from deepssim import deepssim
from deepssim.backbone import extract_features
from deepssim.transforms import rescale

from _common import ensure_weights, pink_image

weights = ensure_weights()

reference = pink_image(256, 256, seed=7)
print(f"\nreference: {reference.shape[0]}x{reference.shape[1]}")

for factor in (1.0, 0.75, 0.5, 0.25):
    test = rescale(reference, factor)
    feats = extract_features(test, weights)
    score = deepssim(reference, test, weights)
    print(
        f"  scale {factor:4.2f}: test {test.shape[0]:3d}x{test.shape[1]:3d}"
        f"  feature grid {feats.shape[1]}x{feats.shape[2]}  score {score:.6f}"
    )

# entirely unrelated sizes work the same way
odd = pink_image(180, 120, seed=8)
print(f"  unrelated 180x120 scene: score {deepssim(reference, odd, weights):.6f}")
