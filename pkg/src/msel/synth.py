"""Synthetic similarity-graph generators for tests and benchmarks."""

from __future__ import annotations

import random

from .errors import ParameterError
from .graph import SimGraph


def random_graph(n: int, m: int, seed: int, w_lo: float = 0.05, w_hi: float = 1.0) -> SimGraph:
    """Uniform random simple graph with ``m`` distinct edges, weights in (w_lo, w_hi].

    Edge endpoints are sampled uniformly; duplicates are rejected until ``m``
    distinct pairs exist, so ``m`` must fit under n*(n-1)/2.
    """
    if n < 0 or m < 0:
        raise ParameterError("n and m must be nonnegative")
    if m > n * (n - 1) // 2:
        raise ParameterError(f"m={m} exceeds the {n * (n - 1) // 2} possible pairs")
    if not (0.0 <= w_lo < w_hi <= 1.0):
        raise ParameterError("need 0 <= w_lo < w_hi <= 1")
    rng = random.Random(seed)
    seen: set[int] = set()
    edges: list[tuple[int, int, float]] = []
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        if u > v:
            u, v = v, u
        key = u * n + v
        if key in seen:
            continue
        seen.add(key)
        w = rng.uniform(w_lo, w_hi)
        if w <= w_lo:
            w = w_hi
        edges.append((u, v, w))
    return SimGraph(n, edges)


def planted_community_graph(
    n: int,
    m: int,
    seed: int,
    community: int = 150,
    w_in: tuple[float, float] = (0.7, 1.0),
    w_out: tuple[float, float] = (0.05, 0.3),
) -> SimGraph:
    """Sparse background graph with one dense high-weight community planted in it.

    Nodes 0..community-1 form a clique with weights drawn from ``w_in``; the
    remaining edge budget is spent on uniform background pairs with weights
    from ``w_out``. The community clique counts against ``m``.
    """
    if community > n:
        raise ParameterError(f"community={community} larger than n={n}")
    clique_m = community * (community - 1) // 2
    if clique_m > m:
        raise ParameterError(f"community clique needs {clique_m} edges, only m={m} allowed")
    rng = random.Random(seed)
    edges: list[tuple[int, int, float]] = []
    seen: set[int] = set()
    for u in range(community):
        for v in range(u + 1, community):
            seen.add(u * n + v)
            edges.append((u, v, rng.uniform(*w_in)))
    limit = n * (n - 1) // 2
    if m > limit:
        raise ParameterError(f"m={m} exceeds the {limit} possible pairs")
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        if u > v:
            u, v = v, u
        key = u * n + v
        if key in seen:
            continue
        seen.add(key)
        edges.append((u, v, rng.uniform(*w_out)))
    return SimGraph(n, edges)
