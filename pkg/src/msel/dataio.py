"""Dataset ingestion, the MSG1 graph file format, and bridge lists.

Citation datasets arrive as two text files: a content file with one node per
line (`id f1 ... fd label`, whitespace separated) and a cites file with one
`cited citing` pair per line. MSG1 is this package's graph interchange file:

    MSG1
    N M
    u v w        (M times, 0 <= u < v < N, w in (0,1])

with `#` comment lines allowed, UTF-8, LF endings. Weights are written with
at least six significant digits so reading a written file reproduces every
weight bit for bit. Node labels are not carried by MSG1.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

import numpy as np

from .errors import DataError, MselError, ParseError
from .graph import SimGraph
from .similarity import AttributeMatrix, build_similarity_graph, normalize_attributes


@dataclass(frozen=True)
class RawDataset:
    """Parsed citation dataset: ids, feature rows, labels, raw citation pairs.

    ``dropped_citations`` counts cite lines whose endpoints were unknown ids;
    they are excluded from ``cite_edges``.
    """

    ids: tuple[str, ...]
    features: np.ndarray
    labels: tuple[str, ...]
    cite_edges: tuple[tuple[str, str], ...]
    dropped_citations: int = 0

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def dim(self) -> int:
        return self.features.shape[1]

    def node_records(self) -> Iterator[tuple[str, np.ndarray, str]]:
        for i, ext in enumerate(self.ids):
            yield ext, self.features[i], self.labels[i]


def load_content_cites(content_path: str | Path, cites_path: str | Path) -> RawDataset:
    """Parse a content/cites file pair into a RawDataset.

    Node ids must be unique; every content line must carry the same number of
    feature columns. Citation lines naming an unknown id are dropped and
    counted rather than treated as errors.
    """
    content_path = Path(content_path)
    cites_path = Path(cites_path)

    ids: list[str] = []
    rows: list[np.ndarray] = []
    labels: list[str] = []
    seen: set[str] = set()
    dim = -1
    with _opened(content_path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            parts = raw.split()
            if not parts:
                continue
            if len(parts) < 3:
                raise ParseError(
                    f"content line needs `id features... label`, got {len(parts)} fields",
                    path=str(content_path), line=lineno,
                )
            ext, label = parts[0], parts[-1]
            if ext in seen:
                raise DataError(f"duplicate node id {ext!r} in {content_path}")
            seen.add(ext)
            try:
                vec = np.array(parts[1:-1], dtype=np.float64)
            except ValueError as e:
                raise ParseError(
                    f"bad feature value: {e}", path=str(content_path), line=lineno
                ) from e
            if dim < 0:
                dim = vec.size
            elif vec.size != dim:
                raise ParseError(
                    f"expected {dim} features, found {vec.size}",
                    path=str(content_path), line=lineno,
                )
            ids.append(ext)
            rows.append(vec)
            labels.append(label)

    edges: list[tuple[str, str]] = []
    dropped = 0
    with _opened(cites_path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            parts = raw.split()
            if not parts:
                continue
            if len(parts) != 2:
                raise ParseError(
                    f"cites line needs `cited citing`, got {len(parts)} fields",
                    path=str(cites_path), line=lineno,
                )
            cited, citing = parts
            if cited in seen and citing in seen:
                edges.append((cited, citing))
            else:
                dropped += 1

    features = np.vstack(rows) if rows else np.zeros((0, 0))
    return RawDataset(tuple(ids), features, tuple(labels), tuple(edges), dropped)


def to_sim_graph(ds: RawDataset, mode: str = "edges", k: int | None = None) -> SimGraph:
    """Build a similarity graph from a dataset.

    External ids densify to 0..n-1 in content-file order. Citation pairs are
    symmetrized and deduplicated, and self-citations are dropped; they supply
    the structure only for mode="edges". Features are min-max normalized per
    column before weighting, which leaves 0/1 columns' weights unchanged and
    brings unbounded columns into range.
    """
    index = {ext: i for i, ext in enumerate(ds.ids)}
    structural: set[tuple[int, int]] = set()
    for cited, citing in ds.cite_edges:
        u, v = index[cited], index[citing]
        if u == v:
            continue
        structural.add((min(u, v), max(u, v)))
    attrs = AttributeMatrix(
        values=normalize_attributes(ds.features),
        ids=tuple(range(ds.n)),
        labels=ds.labels,
    )
    return build_similarity_graph(attrs, mode=mode, edges=sorted(structural), k=k)


def dataset_stats(ds: RawDataset) -> tuple[int, int, int]:
    """(node count, undirected deduplicated edge count, feature count)."""
    index = {ext: i for i, ext in enumerate(ds.ids)}
    structural = {
        (min(index[a], index[b]), max(index[a], index[b]))
        for a, b in ds.cite_edges
        if index[a] != index[b]
    }
    return ds.n, len(structural), ds.dim


def _opened(path: Path):
    try:
        return open(path, "r", encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot open: {e}", path=str(path)) from None


def _fmt_weight(w: float) -> str:
    """Shortest decimal that round-trips ``w``, padded to >= 6 significant digits."""
    r = repr(float(w))
    if "e" in r:
        mant, _, exp = r.partition("e")
        digits = len(mant.replace("-", "").replace(".", "").lstrip("0"))
        if digits < 6:
            if "." not in mant:
                mant += "."
            mant += "0" * (6 - digits)
        return f"{mant}e{exp}"
    digits = len(r.replace("-", "").replace(".", "").lstrip("0"))
    if digits < 6:
        if "." not in r:
            r += "."
        r += "0" * (6 - digits)
    return r


def write_msg1(g: SimGraph, path: str | Path) -> None:
    """Write a graph in MSG1 form; edges emitted in (u, v) ascending order."""
    path = Path(path)
    lines = ["MSG1", f"{g.n} {g.m}"]
    for u, v, w in g.edges():
        lines.append(f"{u} {v} {_fmt_weight(w)}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_msg1(path: str | Path) -> SimGraph:
    """Parse an MSG1 file, enforcing the header, counts, ordering, and range."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot open: {e}", path=str(path)) from None

    n = m = -1
    edges: list[tuple[int, int, float]] = []
    stage = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if stage == 0:
            if line != "MSG1":
                raise ParseError(f"bad magic {line!r}", path=str(path), line=lineno)
            stage = 1
            continue
        if stage == 1:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError("header needs `N M`", path=str(path), line=lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError as e:
                raise ParseError(f"bad header: {e}", path=str(path), line=lineno) from e
            if n < 0 or m < 0:
                raise ParseError("negative counts", path=str(path), line=lineno)
            stage = 2
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("edge line needs `u v w`", path=str(path), line=lineno)
        try:
            u, v, w = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError as e:
            raise ParseError(f"bad edge: {e}", path=str(path), line=lineno) from e
        if len(edges) >= m:
            raise ParseError(f"more than {m} edge lines", path=str(path), line=lineno)
        if not (0 <= u < v < n):
            raise ParseError(
                f"edge ({u}, {v}) violates 0 <= u < v < {n}", path=str(path), line=lineno
            )
        if not (0.0 < w <= 1.0):
            raise ParseError(f"weight {w!r} outside (0, 1]", path=str(path), line=lineno)
        edges.append((u, v, w))

    if stage == 0:
        raise ParseError("empty file, expected MSG1 magic", path=str(path))
    if stage == 1:
        raise ParseError("missing `N M` header", path=str(path))
    if len(edges) != m:
        raise ParseError(f"header promised {m} edges, found {len(edges)}", path=str(path))
    try:
        return SimGraph(n, edges)
    except MselError as e:
        # duplicate edges are the one structural fault not caught above
        raise ParseError(str(e), path=str(path)) from e


def parse_bridges(path: str | Path) -> list[tuple[int, int, float]]:
    """Read a bridge list: `u v w` per line, u in the base graph's id space and
    v in the incoming graph's local id space. `#` comments and blanks allowed."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot open: {e}", path=str(path)) from None
    out: list[tuple[int, int, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("bridge line needs `u v w`", path=str(path), line=lineno)
        try:
            u, v, w = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError as e:
            raise ParseError(f"bad bridge: {e}", path=str(path), line=lineno) from e
        if u < 0 or v < 0:
            raise ParseError("negative node id", path=str(path), line=lineno)
        if not (0.0 < w <= 1.0):
            raise ParseError(f"weight {w!r} outside (0, 1]", path=str(path), line=lineno)
        out.append((u, v, w))
    return out
