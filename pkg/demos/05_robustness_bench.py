"""Geometric-robustness bench: score images against rotated, translated,
rescaled and sheared copies of themselves, and emit the CSV the CLI's
`bench` subcommand produces."""

import tempfile
from pathlib import Path

from deepssim import build_grid, robustness_bench
from deepssim.robustness import write_bench_csv

from _common import blob_image, ensure_weights, pink_image

weights = ensure_weights()

images = [
    ("texture.png", pink_image(128, 128, seed=11)),
    ("blobs.png", blob_image(128, 128, seed=12)),
]
grid = build_grid(
    rotate=[0, 2, 4],
    translate=[(10, 0), (0, 8)],
    scale=[0.5, 0.75],
    shear=[0.1],
)

cases = robustness_bench(images, weights, grid=grid)

print(f"\n{'image':12s} {'transform':10s} {'param':8s} score")
for case in cases:
    print(f"{case.image:12s} {case.transform:10s} {case.param:8s} {case.score:.6f}")

out = Path(tempfile.mkdtemp(prefix="deepssim_demo_")) / "robustness.csv"
write_bench_csv(cases, out)
print(f"\nwrote {out}")
