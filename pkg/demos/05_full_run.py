"""Run every pipeline stage end to end and print the sweep report.

Stages: synth, train-cnn, train-wgan, augment, cluster, extract, sweep,
report. Each stage records its artifacts and their hashes in the run
ledger, so any later stage can verify its inputs are fresh, and a rerun
with the same config reproduces every file byte for byte.

The config below trims sizes so the whole run finishes in a few
minutes; drop the overrides to reproduce the full-scale numbers.
"""

import json
from pathlib import Path

from tonesift import pipeline

OUT = Path(__file__).parent / "out" / "fullrun"

config = pipeline.default_config()
config["corpus"]["per_class"] = 16
config["classifier"]["epochs"] = 12
config["wgan"]["epochs"] = 40
config["augment"]["per_class"] = 8

pipeline.run_all(config, OUT)

print("\nledger stages:")
ledger = json.loads((OUT / "ledger.json").read_text())
for name, info in ledger["stages"].items():
    print(f"  {name:12s} {len(info['artifacts'])} artifacts "
          f"in {info['wall_time_s']:.1f}s")

print("\n" + (OUT / "report.md").read_text())
