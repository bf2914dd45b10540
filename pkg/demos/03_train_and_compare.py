"""Train SARN, the all-pairs RN and the unpaired baseline briefly on the same data and compare.

A short run like this one only shows the machinery working; accuracies
stay near chance. See the README for the longer reduced-scale runs.

Run:  python demos/03_train_and_compare.py [workdir] [epochs]
"""
import logging
import sys
from pathlib import Path

from sarn.train import TrainConfig, compare_models, ensure_dataset, train

logging.basicConfig(level=logging.INFO, format="%(message)s")
work = Path(sys.argv[1] if len(sys.argv) > 1 else "demo-out/train")
epochs = int(sys.argv[2]) if len(sys.argv) > 2 else 1

train_path, test_path = ensure_dataset(work, image_size=64, object_size=4, n_train=40, n_test=10, seed=3)

reports = {}
for kind in ("sarn", "rn", "baseline"):
    cfg = TrainConfig(kind, str(train_path), str(test_path), epochs=epochs, out_dir=str(work / kind))
    result = train(cfg)
    reports[kind] = result.report
    print(f"{kind}: {result.seconds:.1f}s, checkpoint in {result.out_dir}")

comparison = compare_models(reports)
print("\nranked by relational accuracy")
for line in comparison.lines(reports):
    print(" ", line)
