"""
Command-line walkthrough
========================

The same pipeline from problem files. Each call below is equivalent to
running ``freeinterp <args>`` in a shell.
"""

import json
import os
import tempfile

from freeinterp.cli import main

work = tempfile.mkdtemp()
problem = os.path.join(work, "two_nodes.json")
with open(problem, "w") as fh:
    json.dump(
        {
            "alpha": 0.5,
            "nodes": [[0.5, 0.0], [-0.5, 0.0]],
            "targets": {"mode": "linf", "values": [[1.0, 0.0], [0.0, 0.0]]},
            "grid": {"xi_grid": 8},
        },
        fh,
    )

out = os.path.join(work, "check.json")
print("check exit code:", main(["check", problem, "--out", out]))
print(json.load(open(out))["condition"]["delta"])

out = os.path.join(work, "interp.json")
trace = os.path.join(work, "trace.csv")
main(["interpolate", problem, "--mode", "multiplier", "--out", out, "--trace-csv", trace])
print(json.load(open(out))["interpolation"]["y"])
print(open(trace).read().splitlines()[:3])

out = os.path.join(work, "bound.json")
main(["bound", problem, "--out", out, "--e-hat", os.path.join(work, "ehat.json")])
print("sup_bound:", json.load(open(out))["bound"]["sup_bound"])

cfg = os.path.join(work, "sweep.json")
with open(cfg, "w") as fh:
    json.dump({"seed": 1, "instances": 5, "alphas": [0.5]}, fh)
rows = os.path.join(work, "rows.csv")
main(["sweep", "--config", cfg, "--out", rows])
print(open(rows).read())
