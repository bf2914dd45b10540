"""The tensor engine on its own, then a gradient check of a whole SARN model.

Run:  python demos/02_autodiff_and_gradcheck.py
"""
import numpy as np

from sarn import dataset as D
from sarn import tensor as T
from sarn.gradcheck import grad_check_detailed
from sarn.models import ATTENTION_LOGIT_WEIGHT, forward, init_params

rng = np.random.default_rng(0)

# Tiny network: conv -> relu -> layer norm -> linear -> cross-entropy.
x = T.Tensor(rng.normal(size=(2, 3, 8, 8)))
w = T.Tensor(rng.normal(size=(4, 3, 3, 3)) * 0.3, requires_grad=True)
b = T.Tensor(np.zeros(4), requires_grad=True)
h = T.relu(T.conv2d(x, w, b, stride=2, padding=1))  # (2, 4, 4, 4)
h = T.reshape(h, (2, 64))
v = T.Tensor(rng.normal(size=(18, 64)) * 0.1, requires_grad=True)
loss = T.cross_entropy(T.linear(h, v), np.array([3, 7]))
loss.backward()
print(f"loss {float(loss.data):.4f}; |dL/dw| {np.abs(w.grad).sum():.4f}; |dL/dv| {np.abs(v.grad).sum():.4f}")

# The same check the tests run: backprop against central differences on a full SARN.
# The attention logit layer is initialised to zero, which would leave the rest of the attention
# MLP with exactly zero gradient; give it random weights so the check covers that path too.
params = init_params("sarn", seed=1)
w = params[ATTENTION_LOGIT_WEIGHT]
w.data = rng.normal(0, np.sqrt(2 / w.shape[1]), w.shape).astype(np.float32)
cfg = D.DatasetConfig(image_size=64, object_size=4, n_train_images=2, n_test_images=0, seed=1)
images = D.build_split(cfg, D.TRAIN).images
questions = np.zeros((3, 14))
questions[[0, 1, 2], [0, 2, 4]] = 1
questions[[0, 1, 2], [6, 9, 13]] = 1
targets = np.array([2, 8, 14])
index = np.array([0, 1, 1])


def objective():
    return T.cross_entropy(forward("sarn", params, images, questions, index).logits, targets)


res = grad_check_detailed(objective, params, step=1e-3, n_coords=6, skip_kinks=True)
print(f"step 1e-3: worst relative error {res.max_rel_error:.2e} over {res.checked} coordinates "
      f"({res.skipped} resampled because the step crossed a ReLU kink)")
