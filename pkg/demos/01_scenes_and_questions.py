"""Walk through one generated scene: objects, pixels, and the 48 questions asked about it.

Run:  python demos/01_scenes_and_questions.py [outdir]
"""
import sys
from pathlib import Path

import numpy as np

from sarn import dataset as D

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo-out/scenes")
out.mkdir(parents=True, exist_ok=True)

# A small configuration: 75 px images, half-width 5 objects, a handful of scenes.
cfg = D.DatasetConfig(image_size=75, object_size=5, n_train_images=4, n_test_images=2, seed=0)

# Each scene has its own PCG32 stream, so scene 3 can be drawn without drawing 0..2 first.
scene = D.sample_scene(cfg, D.scene_rng(cfg.seed, D.TRAIN, 3))
print("scene 3 of the training split")
for o in scene.objects:
    print(f"  {D.COLOR_NAMES[o.color_id]:7s} {D.SHAPE_NAMES[o.shape_id]:6s} at x={o.x:2d} y={o.y:2d}")

image = D.render_scene(scene, cfg)
D.write_ppm(out / "scene3.ppm", image)
print(f"wrote {out / 'scene3.ppm'}  ({image.shape[1]}x{image.shape[0]}, white background)")

# The answer oracle is plain geometry over the object list.
print("\nquestions about the red object")
for q, a in D.generate_questions(scene, cfg):
    if q.color_id == 0:
        print(f"  {D.QTYPE_NAMES[q.qtype]:15s} -> {D.ANSWER_NAMES[a]}")

# Questions become 14-wide one-hot vectors: 6 colour slots then 8 question-type slots.
vec = D.encode_question(D.Question(color_id=0, qtype=5))
print("\nencoding of (red, count):", vec.astype(int))

# Whole splits serialize to a compact binary file that round-trips exactly.
train = D.build_split(cfg, D.TRAIN)
blob = D.dataset_bytes(train)
again = D.parse_dataset(blob)
assert np.array_equal(again.images, train.images)
print(f"\ntrain split: {len(train)} images, {train.n_samples} questions, {len(blob)} bytes on disk")
