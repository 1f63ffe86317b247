"""Seeded random instance generators.

All randomness comes from numpy's PCG64 seeded with the given seed; draw
order is part of the determinism contract (same subcommand + flags + seed
produce byte-identical files within this implementation):

* random strict graph: one uniform draw per (t, u, v) slot in (t ascending,
  u ascending, v ascending) order; the edge is present iff draw < p.
* random non-strict graph: per step, one permutation of the vertices, then
  a uniform choice of part-1 distinct cut positions; the components are the
  resulting consecutive slices, in slice order.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError
from .graphs import NonStrictTemporalGraph, StrictTemporalGraph


def random_strict_graph(n: int, L: int, p: float, seed: int) -> StrictTemporalGraph:
    """G(n, p) edges drawn independently per layer."""
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge probability {p} outside [0, 1]")
    if n < 0 or L < 0:
        raise InputError("n and L must be non-negative")
    rng = np.random.Generator(np.random.PCG64(seed))
    layers = []
    for _ in range(L):
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    edges.append((u, v))
        layers.append(edges)
    return StrictTemporalGraph(n, L, layers)


def random_ns_graph(n: int, L: int, gamma: int, seed: int) -> NonStrictTemporalGraph:
    """Per step, a partition of V into exactly min(gamma, n) non-empty parts
    via seeded shuffling + cut selection."""
    if gamma < 1:
        raise InputError("gamma must be at least 1")
    if n < 1 or L < 0:
        raise InputError("need n >= 1 and L >= 0")
    parts = min(gamma, n)
    rng = np.random.Generator(np.random.PCG64(seed))
    steps = []
    for _ in range(L):
        perm = [int(v) for v in rng.permutation(n)]
        if parts > 1:
            cuts = sorted(int(c) + 1 for c in rng.choice(n - 1, size=parts - 1, replace=False))
        else:
            cuts = []
        bounds = [0] + cuts + [n]
        steps.append([perm[a:b] for a, b in zip(bounds, bounds[1:])])
    return NonStrictTemporalGraph(n, L, steps)
