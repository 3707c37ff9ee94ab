"""
A label-only model-inversion attack, start to finish
====================================================

The attacker holds a black box that returns one class index per query and
an auxiliary pile of unlabeled images that look like the private data.
The attack has two phases.

Training: ask the black box to label the auxiliary images, then train a
conditional diffusion model on those (image, predicted label) pairs.

Recovery: for each target label, draw candidates with guidance, brighten
contrast with gamma correction, and keep the candidates whose label
survives random crops and flips most often.

An independent evaluation classifier scores the result.  This script runs
the whole pipeline through the library's experiment runner with a very
small configuration (a few minutes on one CPU core), so the numbers are
only a smoke test.  ``configs/toy_digits.cfg`` is the real toy setting.

Run from the repository root::

    python notebooks/03_label_only_attack.py
"""

from pathlib import Path

from diffmia.harness.config import load_config
from diffmia.harness.data import export_digits_corpus
from diffmia.harness.pipeline import Experiment

corpus = Path("data/digits16")
if not corpus.exists():
    export_digits_corpus(corpus, 16)

cfg = load_config(overrides=[
    f"data.train_corpus={corpus}", "data.image_size=16", "data.channels=1",
    "schedule.T=200", "schedule.beta_start=5e-4", "schedule.beta_end=0.12",
    "denoiser.base_width=16", "denoiser.depth=2", "denoiser.time_embed_dim=64", "denoiser.attn_max_size=8",
    "diffusion.max_epochs=20", "diffusion.batch_size=32", "diffusion.learning_rate=1e-3",
    "diffusion.late_learning_rate=3e-4", "diffusion.ema_warmup=100",
    "target.epochs=3", "target.width=8", "eval.epochs=10", "eval.width=16",
    "sampler.num_samples=16", "attack.M=20", "attack.labels=0,3,7",
    "out=runs/notebooks/attack",
])
exp = Experiment(cfg, resume=True)

# The black box and the evaluator are trained on the same private split.
# The evaluator is only used for scoring and should be the stronger model.
target = exp.stage_train_target()
evaluator = exp.stage_train_eval()
print(f"target accuracy {target.test_accuracy:.3f}, evaluator accuracy {evaluator.test_accuracy:.3f}")

# Phase one.  Only predicted labels cross the boundary.
exp.stage_label_aux()
print("auxiliary label histogram:", exp.manifest.data["aux_histogram"])
exp.stage_train_diffusion()

# Phase two, then scoring.
for label, cs in exp.stage_recover().items():
    top = ", ".join(f"{cs.weights[i]:.2f}" for i in cs.selected)
    print(f"label {label}: kept candidates {cs.selected} with weights {top}")
report = exp.stage_evaluate()
print(report.table())
print("recovered grids are under", exp.out / "recover")
