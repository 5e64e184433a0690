"""Distortion response: the score should fall as blur widens and as JPEG
quality drops. Prints a small ladder per distortion."""

from deepssim import deepssim

from _common import ensure_weights, gaussian_blur, jpeg_roundtrip, pink_image

weights = ensure_weights()
img = pink_image(160, 160, seed=3)

print("\ngaussian blur:")
for sigma in (0.5, 1.0, 2.0, 4.0):
    print(f"  sigma {sigma:3.1f}: {deepssim(img, gaussian_blur(img, sigma), weights):.6f}")

print("\njpeg compression:")
for quality in (90, 50, 25, 10):
    print(f"  quality {quality:2d}: {deepssim(img, jpeg_roundtrip(img, quality), weights):.6f}")
