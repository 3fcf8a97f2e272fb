"""Slow, obviously-correct recomputations used to cross-check the package."""

import math

from msel import SimGraph


def naive_total_weight(F, g):
    members = sorted(F)
    acc = 0.0
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            acc += g.weight(u, v)
    return acc


def naive_alpha(F, g):
    if not F:
        return 0.0
    return naive_total_weight(F, g) / len(F)


def naive_incident(u, F, g):
    return sum(g.weight(u, v) for v in F if v != u)


def naive_feasible(F, g, c):
    if len(set(F)) <= c.p:
        return False
    return all(any(g.weight(u, v) > c.s for v in F if v != u) for u in F)


def assert_close(a, b, rel=1e-9, abs_tol=1e-12):
    assert math.isclose(a, b, rel_tol=rel, abs_tol=abs_tol), f"{a!r} != {b!r}"


def gnp_graph(rng, n, prob=0.5, w_lo=0.05, w_hi=1.0):
    """Erdos-Renyi style graph with uniform weights, driven by a seeded rng."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < prob:
                edges.append((u, v, rng.uniform(w_lo, w_hi)))
    return SimGraph(n, edges)
