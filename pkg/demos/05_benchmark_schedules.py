"""Benchmark the incremental engine against from-scratch re-solving.

Writes a planted-community graph and a growing-size schedule to a temp
directory, runs the bench command over three algorithms, and renders the
per-step objective curves to an SVG.
"""

import csv
import tempfile
from pathlib import Path

from msel.cli import main
from msel.dataio import write_msg1
from msel.synth import planted_community_graph

work = Path(tempfile.mkdtemp(prefix="msel_demo_"))

g = planted_community_graph(400, 1500, seed=11, community=25)
write_msg1(g, work / "planted.msg1")

(work / "grow.sched").write_text(
    "init p=3 s=0.2\n" + "p += 2\n" * 8,
    encoding="utf-8",
)

rc = main([
    "bench",
    "--graph", str(work / "planted.msg1"),
    "--schedule", str(work / "grow.sched"),
    "--algos", "dcsel,msgsel,average",
    "--repeat", "3",
    "--out", str(work / "bench.csv"),
])
assert rc == 0

with open(work / "bench.csv", newline="", encoding="utf-8") as fh:
    rows = list(csv.DictReader(fh))

print(f"{'algo':<8} {'total wall (ms)':>16} {'final alpha':>12}")
for algo in ("dcsel", "msgsel", "average"):
    algo_rows = [r for r in rows if r["algo"] == algo]
    total_ms = sum(int(r["wall_ns_min"]) for r in algo_rows) / 1e6
    print(f"{algo:<8} {total_ms:>16.2f} {float(algo_rows[-1]['alpha']):>12.4f}")

rc = main(["plot", "--in", str(work / "bench.csv"), "--out", str(work / "bench.svg")])
assert rc == 0
print()
print(f"wrote {work / 'bench.csv'}")
print(f"wrote {work / 'bench.svg'}")
