"""Sweep image and object sizes for every model kind and write the accuracy table.

The full sweep takes many hours on one core, so this demo runs a toy grid.

Run:  python demos/05_robustness_grid.py [workdir]
"""
import sys
from pathlib import Path

from sarn.train import run_robustness_suite

work = Path(sys.argv[1] if len(sys.argv) > 1 else "demo-out/robustness")
grid = run_robustness_suite(work, configs=((64, 4), (75, 5)), n_train=12, n_test=6, epochs=1)
grid.to_csv(work / "robustness.csv")
print((work / "robustness.csv").read_text())
