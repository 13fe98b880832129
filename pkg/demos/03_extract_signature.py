"""Denoise one spectrogram by masking it with its own class saliency.

The chain: train a classifier, cluster each class's embeddings to find
representative training images, average their saliency maps into a
per-class general mask, then fuse that mask with the saliency of one
held-out image, binarize at 0.75, and keep only the surviving cells.
The result is the clean tonal signature on a white background.
"""

from pathlib import Path

from tonesift import clusterer, maskforge, nnkit, scorecam, sonogen
from tonesift.dsp import save_png

OUT = Path(__file__).parent / "out" / "extract"

manifest = sonogen.render_corpus(sonogen.default_classes(), OUT / "corpus",
                                 per_class=20, seed=0)
train_x, train_y = manifest.load_arrays(manifest.select(split="train"))

net = nnkit.init_network(nnkit.spec_cnn(len(manifest.class_ids())), seed=0)
nnkit.train_classifier(net, train_x, train_y, epochs=15, seed=0)

# one general mask per class, from the member nearest each cluster centroid
general = {}
for cid in manifest.class_ids():
    label = manifest.label_index(cid)
    entries = manifest.select(class_id=cid, split="train")
    images = [manifest.load_grid(e) for e in entries]
    emb = nnkit.embed_images(net, images, normalize=True)
    elbow = clusterer.elbow_select(emb, range(1, 5), seed=0)
    model = clusterer.kmeans_fit(emb, elbow.k_star, seed=0)
    reps = clusterer.representatives(model, emb)
    maps = [scorecam.score_cam(net, images[i], label, sample_id=entries[i].seed)
            for i in reps.sample_ids()]
    general[label] = maskforge.general_mask(maps, class_index=label)
    print(f"{cid}: k={elbow.k_star}, general mask from {len(maps)} maps")

entry = manifest.select(class_id="twin", split="test")[0]
image = manifest.load_grid(entry)
label = manifest.label_index("twin")
fused = maskforge.image_mask(net, image, label, general[label], threshold=0.75)
signature = maskforge.extract_signature(image, fused, class_index=label)

save_png(OUT / "noisy.png", image)
save_png(OUT / "signature.png", signature.grid)
print(f"\nkept {int(fused.coverage * fused.grid.size)} of "
      f"{fused.grid.size} cells; images in {OUT}")
