"""Turn a small attribute table into a similarity graph and save it.

Six records with four numeric features each. Feature columns are min-max
normalized, every pair gets a similarity in [0, 1], and pairs that end up
at zero simply have no edge.
"""

import tempfile
from pathlib import Path

import numpy as np

from msel import (
    AttributeMatrix,
    build_similarity_graph,
    normalize_attributes,
    pair_weight,
    read_msg1,
    write_msg1,
)

values = np.array([
    [0.9, 12.0, 1.0, 0.0],
    [0.8, 14.0, 1.0, 0.0],
    [0.7, 11.0, 1.0, 1.0],
    [0.1, 95.0, 0.0, 1.0],
    [0.2, 90.0, 0.0, 1.0],
    [0.5, 50.0, 0.0, 0.0],
])
ids = tuple(f"member_{chr(97 + i)}" for i in range(6))
attrs = AttributeMatrix(values=normalize_attributes(values), ids=ids)

print("pairwise similarity of the first two members:",
      round(pair_weight(attrs.values[0], attrs.values[1]), 4))

g = build_similarity_graph(attrs, mode="full")
print(f"full-mode graph: {g.n} nodes, {g.m} edges")
for u, v, w in sorted(g.edges(), key=lambda e: -e[2])[:5]:
    print(f"  strongest pairs: {ids[u]} -- {ids[v]}  w={w:.4f}")
    break
for u, v, w in sorted(g.edges(), key=lambda e: -e[2])[1:4]:
    print(f"                   {ids[u]} -- {ids[v]}  w={w:.4f}")

# a sparser alternative: keep each node's two nearest neighbors only
knn = build_similarity_graph(attrs, mode="knn", k=2)
print(f"knn(k=2) graph:  {knn.n} nodes, {knn.m} edges")

out = Path(tempfile.gettempdir()) / "demo_members.msg1"
write_msg1(g, out)
back = read_msg1(out)
print(f"saved to {out} and read back: {back.n} nodes, {back.m} edges")
