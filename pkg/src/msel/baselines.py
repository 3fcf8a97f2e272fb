"""Comparison selectors: reference-ball peeling and three simple removal rules.

The simple rules (random, degree, average) peel the whole node set by their
metric with no shortcuts, tracking the best state that satisfied both
constraints along the way, exactly like the main peel records its best state.
They exist to be fair strawmen in benchmarks, not to be fast.
"""

from __future__ import annotations

import heapq
import random

from .graph import ConstraintPair, SimGraph, Solution
from .peel import modified_sgsel


def sgsel(g: SimGraph, c: ConstraintPair) -> Solution:
    """Best peel over every reference node's distance-2 ball, plus one
    unrestricted peel.

    For each node v, the candidate pool is v plus everything reachable over
    at most two similarity edges; the pool is peeled by minimum incident
    weight and the best feasible state kept. A ball can never span groups
    whose members sit more than two hops apart, so one whole-graph pool runs
    first; a strictly better ball result then beats it, ties staying with
    the earlier pool. Infeasible everywhere yields the empty solution.
    """
    best, _ = modified_sgsel(g, c)
    for v in range(g.n):
        ball = {v}
        for t, _ in g.neighbors(v):
            ball.add(t)
        for t in list(ball):
            for t2, _ in g.neighbors(t):
                ball.add(t2)
        sol, _ = modified_sgsel(g, c, within=ball)
        if sol.alpha > best.alpha:
            best = sol
    return best


def random_peel(g: SimGraph, c: ConstraintPair, seed: int) -> Solution:
    """Peel in a seeded uniform-random order, keeping the best feasible state."""
    rng = random.Random(seed)
    order = list(range(g.n))
    rng.shuffle(order)
    rank = [0] * g.n
    for pos, u in enumerate(order):
        rank[u] = pos
    return _metric_peel(g, c, lambda u, deg, iw: rank[u], static_keys=True)


def degree_peel(g: SimGraph, c: ConstraintPair) -> Solution:
    """Peel by minimum surviving neighbor count, ties by id."""
    return _metric_peel(g, c, lambda u, deg, iw: deg)


def average_peel(g: SimGraph, c: ConstraintPair) -> Solution:
    """Peel by minimum incident weight per surviving neighbor, ties by id.

    A node with no surviving neighbors scores 0, so strays go first.
    """
    return _metric_peel(g, c, lambda u, deg, iw: iw / deg if deg else 0.0)


def _metric_peel(g, c, key_fn, static_keys: bool = False) -> Solution:
    """Remove argmin key_fn(u, deg, incident) nodes one by one from the whole
    graph, recording the best state satisfying both constraints.

    The initial untouched state is a candidate too. Keys are recomputed for a
    node whenever one of its neighbors is removed, unless ``static_keys``.
    """
    n = g.n
    if n == 0:
        return Solution.empty()
    adj = g._adj
    alive = bytearray(b"\x01") * n
    incident = [0.0] * n
    deg = [0] * n
    scnt = [0] * n
    total = 0.0
    for u in range(n):
        iw = 0.0
        cnt = 0
        sup = 0
        for t, w in adj[u]:
            iw += w
            cnt += 1
            if w > c.s:
                sup += 1
        incident[u] = iw
        deg[u] = cnt
        scnt[u] = sup
        total += iw
    total /= 2.0

    key = [key_fn(u, deg[u], incident[u]) for u in range(n)]
    heap = [(key[u], u) for u in range(n)]
    heapq.heapify(heap)

    unsupported = sum(1 for u in range(n) if scnt[u] == 0)
    size = n
    alpha = total / size
    best_alpha = -1.0
    best_members: frozenset[int] | None = None
    best_weight = 0.0
    if size > c.p and unsupported == 0:
        best_alpha, best_weight = alpha, total
        best_members = frozenset(range(n))
    removed: list[int] = []

    while heap:
        k, v = heapq.heappop(heap)
        if not alive[v] or k != key[v]:
            continue
        alive[v] = 0
        removed.append(v)
        total -= incident[v]
        size -= 1
        if scnt[v] == 0:
            unsupported -= 1
        for t, w in adj[v]:
            if not alive[t]:
                continue
            incident[t] -= w
            deg[t] -= 1
            if w > c.s:
                scnt[t] -= 1
                if scnt[t] == 0:
                    unsupported += 1
            if not static_keys:
                key[t] = key_fn(t, deg[t], incident[t])
                heapq.heappush(heap, (key[t], t))
        if size == 0:
            break
        alpha = total / size
        if size > c.p and unsupported == 0 and alpha > best_alpha:
            best_alpha, best_weight = alpha, total
            best_members = None  # reconstructed from the removal count below
            best_at = len(removed)

    if best_alpha < 0.0:
        return Solution.empty()
    if best_members is None:
        gone = set(removed[:best_at])
        best_members = frozenset(u for u in range(n) if u not in gone)
    return Solution(best_members, best_weight, best_alpha)
