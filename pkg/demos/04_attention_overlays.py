"""Look inside a SARN: where it attends, and how much each object contributes through g_theta.

Pass a trained model directory (containing model.ckpt) to inspect it;
without one, a freshly initialized model is used.

Run:  python demos/04_attention_overlays.py [model_dir] [outdir]
"""
import sys
from pathlib import Path

import numpy as np

from sarn import dataset as D
from sarn import introspect as I
from sarn.models import init_params, load_model

if len(sys.argv) > 1 and sys.argv[1] != "-":
    kind, size, params, _ = load_model(sys.argv[1])
else:
    kind, size, params = "sarn", 64, init_params("sarn", seed=0)
out = Path(sys.argv[2] if len(sys.argv) > 2 else "demo-out/inspect")

cfg = D.DatasetConfig(image_size=size, object_size=size // 16, n_train_images=0, n_test_images=1, seed=11)
scene = D.sample_scene(cfg, D.scene_rng(cfg.seed, D.TEST, 0))
image = D.render_scene(scene, cfg)

# Ask "what shape is furthest from the green object?"
question = D.Question(color_id=1, qtype=4)
label = D.answer_oracle(scene, question, cfg)
report = I.build_report(params, image, question, label=label)

print(f"{kind} at {size}px, predicted {D.ANSWER_NAMES[report.predicted]}, truth {D.ANSWER_NAMES[label]}")
if report.attention_grid is not None:
    grid = report.attention_grid
    r, c = np.unravel_index(grid.argmax(), grid.shape)
    green = scene.by_color(1)
    hit = I.cell_contains(int(grid.argmax()), grid.shape[0], green.x, green.y, size)
    print(f"attention peaks at cell ({r}, {c}) with weight {grid.max():.3f}; "
          f"its receptive field {'contains' if hit else 'misses'} the green object")
print("per-cell g_theta channel sums:")
print(np.array2string(report.gsum.grid, precision=1, suppress_small=True))

for path in I.export_report(report, out):
    print("wrote", path)
