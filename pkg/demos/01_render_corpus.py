"""Render a small labeled spectrogram corpus and look at what comes out.

Each sample is a 64x64 grayscale spectrogram of one synthetic acoustic
class (steady tones, FM warbles, a close tone pair) buried in pink-ish
noise, paired with a binary ground-truth mask marking the tonal cells.
Everything is derived from the class list, the render parameters, and a
seed, so rerunning this script reproduces the corpus byte for byte.
"""

from pathlib import Path

import numpy as np

from tonesift import sonogen

OUT = Path(__file__).parent / "out" / "corpus"

manifest = sonogen.render_corpus(sonogen.default_classes(), OUT,
                                 per_class=12, seed=0, export_png=True)

print(f"wrote {len(manifest.entries)} samples to {OUT}")
print(f"params: {manifest.params}")
for spec in manifest.classes:
    n_train = len(manifest.select(class_id=spec["class_id"], split="train"))
    n_test = len(manifest.select(class_id=spec["class_id"], split="test"))
    print(f"  {spec['class_id']:8s} {spec['name']:30s} "
          f"train {n_train}  test {n_test}")

# a mask row sums to the number of tonal cells in that time column
entry = manifest.select(class_id="twin")[0]
mask = manifest.load_grid(entry.mask)
print(f"\nexample twin mask: {int(mask.sum())} tonal cells "
      f"across rows {sorted(set(np.nonzero(mask)[0].tolist()))}")
print(f"browse the PNGs under {OUT / 'png'}")
