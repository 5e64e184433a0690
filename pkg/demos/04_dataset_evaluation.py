"""Batch evaluation against subjective scores.

Builds a small synthetic 'dataset' on disk (blur ladders with pseudo-MOS),
writes the generic manifest CSV, evaluates the metric over it, and prints
the report (PLCC raw + logistic-fitted, SRCC). The same flow runs on real
benchmarks via `deepssim adapt <kind> <root>` followed by `deepssim eval`.
"""

import tempfile
from pathlib import Path

from deepssim import EvalRecord, evaluate, load_manifest, write_manifest
from deepssim.evaluate import report_to_csv_row, report_csv_header, report_to_json
from deepssim.gramsim import deepssim
from deepssim.images import save_image

from _common import ensure_weights, gaussian_blur, pink_image

weights = ensure_weights()
workdir = Path(tempfile.mkdtemp(prefix="deepssim_demo_"))
print(f"\nwriting a synthetic dataset under {workdir}")

records = []
for scene in range(4):
    ref = pink_image(128, 128, seed=scene)
    ref_path = workdir / f"scene{scene}_ref.png"
    save_image(ref_path, ref)
    # pseudo-MOS: cleaner images get higher subjective scores
    for level, (sigma, mos) in enumerate([(0.4, 4.6), (1.0, 3.8), (2.0, 2.7), (4.0, 1.5)]):
        test_path = workdir / f"scene{scene}_blur{level}.png"
        save_image(test_path, gaussian_blur(ref, sigma))
        records.append(EvalRecord(ref_path, test_path, mos, "higher_better", f"scene{scene}"))

manifest = write_manifest(workdir / "manifest.csv", records)
loaded = load_manifest(manifest)
print(f"manifest rows: {len(loaded)}")


def metric(ref_path, test_path):
    from deepssim.images import load_image

    return deepssim(load_image(ref_path), load_image(test_path), weights)


report = evaluate(metric, loaded)
print("\nreport (JSON):")
print(report_to_json(report))
print("\nreport (CSV row):")
print(report_csv_header())
print(report_to_csv_row(report))
