"""
Classifier-free guidance on a small digit generator
===================================================

Train a small conditional denoiser on 16x16 digits for a few minutes with
label dropout, then sample the same seeds at several guidance strengths.
With omega = 0 the samples follow the conditional model alone; raising
omega pushes them away from the unconditional prediction, which sharpens
the class identity and eventually costs realism.

Run from the repository root (about five minutes on one CPU core)::

    python notebooks/02_guided_sampling.py
"""

from pathlib import Path

import torch

from diffmia.denoiser import DenoiserConfig, init_denoiser
from diffmia.diffusion import SamplerConfig, TrainConfig, sample, train_diffusion
from diffmia.harness.data import export_digits_corpus, load_dataset
from diffmia.harness.imaging import save_grid
from diffmia.schedule import make_linear_schedule

out = Path("runs/notebooks")
out.mkdir(parents=True, exist_ok=True)
corpus = Path("data/digits16")
if not corpus.exists():
    export_digits_corpus(corpus, 16)
data = load_dataset(corpus, 16, 1)

s = make_linear_schedule(200, 5e-4, 0.12)
cfg = DenoiserConfig(image_size=16, channels=1, base_width=16, depth=2, num_classes=10,
                     time_embed_dim=64, attn_max_size=8)
params = init_denoiser(cfg, seed=0)

# Ten percent of labels are swapped for the null label, so one network
# learns both the conditional and the unconditional noise predictor.
train = TrainConfig(max_epochs=8, batch_size=32, learning_rate=1e-3, late_learning_rate=3e-4,
                    ema_warmup=100, label_dropout_p=0.1)
losses = train_diffusion(params, s, data.images * 2 - 1, data.labels, train,
                         on_epoch=lambda e, l: print(f"epoch {e + 1}: loss {l:.4f}"))

# Same eight seeds per row; only omega changes between rows.
rows = []
for omega in (0.0, 1.0, 4.0, 8.0):
    x = sample(params, s, 3, SamplerConfig(omega=omega, num_samples=8, seed=1))
    rows.append((x + 1) / 2)
    print(f"omega {omega}: pixel mean {rows[-1].mean():.3f}, std {rows[-1].std():.3f}")
save_grid(torch.cat(rows), out / "guidance_rows.png", ncol=8)
print("wrote", out / "guidance_rows.png", "(rows: omega 0, 1, 4, 8; label 3)")
