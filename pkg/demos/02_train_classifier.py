"""Train the spectrogram classifier and watch it converge.

The network is a small two-conv CNN whose 64-wide penultimate layer
doubles as the embedding used later for clustering. On a modest corpus
it reaches perfect train accuracy within a couple dozen epochs; the
held-out accuracy printed at the end is what matters.
"""

from pathlib import Path

from tonesift import nnkit, sonogen

OUT = Path(__file__).parent / "out" / "classifier"

manifest = sonogen.render_corpus(sonogen.default_classes(), OUT / "corpus",
                                 per_class=20, seed=0)
train_x, train_y = manifest.load_arrays(manifest.select(split="train"))
test_x, test_y = manifest.load_arrays(manifest.select(split="test"))

net = nnkit.init_network(nnkit.spec_cnn(len(manifest.class_ids())), seed=0)
history = nnkit.train_classifier(net, train_x, train_y, epochs=15, seed=0,
                                 test_images=test_x, test_labels=test_y,
                                 verbose=True)

print(f"\nfinal test accuracy: {history['test_acc'][-1]:.3f}")
nnkit.save_network(net, OUT / "classifier.params")
print(f"saved weights to {OUT / 'classifier.params'}")
