"""Grow synthetic spectrograms for one class with a weight-clipped WGAN.

The critic scores realness on an unbounded scale and is clipped after
every update; the generator chases it. Healthy training settles where a
midpoint threshold on critic scores separates real from fake only about
half the time. The gallery PNGs show fakes next to real samples.
"""

from pathlib import Path

import numpy as np

from tonesift import sonogen, wgan
from tonesift.dsp import save_png

OUT = Path(__file__).parent / "out" / "gan"
CLASS_ID = "hum"

manifest = sonogen.render_corpus(sonogen.default_classes(), OUT / "corpus",
                                 per_class=50, seed=0)
entries = manifest.select(class_id=CLASS_ID, split="train")
images = np.stack([manifest.load_grid(e) for e in entries])

bundle = wgan.train_wgan(images, seed=0, verbose=True,
                         image_params=manifest.params)
probes = bundle.history["probe_acc"]
print(f"\nprobe accuracy, mean of final 10 epochs: "
      f"{np.mean(probes[-10:]):.3f} (0.5 is the equilibrium)")
print(f"critic max |weight| ever: {max(bundle.history['critic_max_abs']):.4f}")

fakes = wgan.sample_synthetic(bundle, 4, seed=1)
for i, fake in enumerate(fakes):
    save_png(OUT / f"fake_{i}.png", fake.grid)
for i, real in enumerate(images[:2]):
    save_png(OUT / f"real_{i}.png", real)
print(f"gallery in {OUT}")
