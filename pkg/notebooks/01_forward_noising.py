"""
Forward noising, one step at a time and all at once
===================================================

The generator learns to undo a fixed corruption process.  This script
builds the linear variance schedule, checks how much of the clean image
survives at the end of the chain, and renders a digit at a few noise levels.

Run from the repository root::

    python notebooks/01_forward_noising.py
"""

import math
from pathlib import Path

import torch

from diffmia.harness.data import export_digits_corpus, load_dataset
from diffmia.harness.imaging import save_grid
from diffmia.schedule import make_linear_schedule, q_sample, terminal_snr_report

out = Path("runs/notebooks")
out.mkdir(parents=True, exist_ok=True)

# The default chain: 1500 steps, beta growing linearly from 1e-4 to 0.02.
s = make_linear_schedule(1500, 1e-4, 0.02)
print("beta_1 =", s.beta_at(1), " beta_T =", s.beta_at(s.T))
print("alpha_bar_T =", terminal_snr_report(s))

# A shorter chain with a steeper ramp ends just as close to pure noise,
# which is what the CPU-sized toy configuration relies on.
short = make_linear_schedule(300, 5e-4, 0.1)
print("300-step chain, alpha_bar_T =", terminal_snr_report(short))

# One-shot corruption agrees with applying the single-step kernel t times:
# the mean shrinks by sqrt(1 - beta) and the variance follows v <- (1 - b) v + b.
mean, var = 1.0, 0.0
for t in range(1, 401):
    b = s.beta_at(t)
    mean *= math.sqrt(1 - b)
    var = (1 - b) * var + b
print(f"after 400 steps: mean coef {mean:.6f} vs {math.sqrt(s.alpha_bar_at(400)):.6f}, "
      f"variance {var:.6f} vs {1 - s.alpha_bar_at(400):.6f}")

# Noise one digit at a handful of timesteps.
corpus = Path("data/digits32")
if not corpus.exists():
    export_digits_corpus(corpus, 32)
digit = load_dataset(corpus, 32, 1).images[:1] * 2 - 1
eps = torch.randn(digit.shape, generator=torch.Generator().manual_seed(0))
steps = [1, 50, 150, 300, 600, 1000, 1500]
frames = torch.cat([q_sample(s, digit, t, eps) for t in steps])
save_grid((frames.clamp(-1, 1) + 1) / 2, out / "forward_noising.png", ncol=len(steps))
print("wrote", out / "forward_noising.png", "for t =", steps)
