"""Covering-problem reductions as instance generators, plus tiny exact
solvers for the source problems.

Both constructions are equivalences: the source instance is a yes-instance
iff the generated set-target exploration instance is. Vertex id layout is
fixed for reproducible output files:

* hitting set -> strict:   s = 0, ground element i -> vertex i + 1;
  lifetime k, every layer the complete graph on all n + 1 vertices;
  target family = the input sets (shifted by one).
* set cover -> non-strict: s = 0, x_j = j for j in 1..m, then one vertex
  y(i, j) per membership a_i in S_j in (j ascending, i ascending) order;
  lifetime 2k. Odd steps: one component {s, x_1..x_m}, every y vertex a
  singleton. Even steps: per j one component {x_j} + its y vertices, and
  {s} a singleton. Target family = X_i = {y(i, j) : a_i in S_j}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Tuple

from .errors import CapacityError, InputError
from .graphs import NonStrictTemporalGraph, StrictTemporalGraph

_BF_MAX_ELEMENTS = 20
_BF_MAX_SETS = 12


def _norm_sets(n: int, sets: Iterable[Iterable[int]]) -> Tuple[FrozenSet[int], ...]:
    out = tuple(frozenset(s) for s in sets)
    for s in out:
        if any(not 0 <= v < n for v in s):
            raise InputError("set references an element outside [0, n)")
    return out


@dataclass(frozen=True)
class HittingSetInstance:
    """Ground set 0..n-1, sets to hit, budget k."""

    n: int
    sets: Tuple[FrozenSet[int], ...]
    k: int

    def __init__(self, n, sets, k):
        if n < 0 or k < 0:
            raise InputError("n and k must be non-negative")
        norm = _norm_sets(n, sets)
        if any(not s for s in norm):
            raise InputError("hitting-set instances require non-empty sets")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "sets", norm)
        object.__setattr__(self, "k", k)


@dataclass(frozen=True)
class SetCoverInstance:
    """Ground set 0..n-1, covering sets, budget k.

    Every element must occur in some set (the construction needs a y-vertex
    per element).
    """

    n: int
    sets: Tuple[FrozenSet[int], ...]
    k: int

    def __init__(self, n, sets, k):
        if n < 0 or k < 0:
            raise InputError("n and k must be non-negative")
        norm = _norm_sets(n, sets)
        covered = frozenset().union(*norm) if norm else frozenset()
        if covered != frozenset(range(n)):
            missing = sorted(set(range(n)) - covered)
            raise InputError(f"elements {missing} are not covered by any set")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "sets", norm)
        object.__setattr__(self, "k", k)


def hitting_set_to_set_texp(hs: HittingSetInstance):
    """Strict set-target instance: complete layers, lifetime = budget.

    Returns (graph, start vertex, target family).
    """
    nv = hs.n + 1
    layer = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
    g = StrictTemporalGraph(nv, hs.k, [layer] * hs.k)
    family = tuple(frozenset(v + 1 for v in s) for s in hs.sets)
    return g, 0, family


def set_cover_to_set_ns_texp(sc: SetCoverInstance):
    """Non-strict set-target instance with lifetime 2k (see module doc).

    Returns (graph, start vertex, target family).
    """
    m = len(sc.sets)
    y_id: Dict[Tuple[int, int], int] = {}
    nxt = 1 + m
    for j in range(1, m + 1):
        for i in sorted(sc.sets[j - 1]):
            y_id[(i, j)] = nxt
            nxt += 1
    nv = nxt
    x_block = frozenset({0} | set(range(1, m + 1)))
    y_sorted = sorted(y_id.values())
    odd = [x_block] + [frozenset({y}) for y in y_sorted]
    even = [
        frozenset({j} | {y_id[(i, j)] for i in sc.sets[j - 1]})
        for j in range(1, m + 1)
    ] + [frozenset({0})]
    steps = [odd if t % 2 == 1 else even for t in range(1, 2 * sc.k + 1)]
    g = NonStrictTemporalGraph(nv, 2 * sc.k, steps)
    family = tuple(
        frozenset(y_id[(i, j)] for j in range(1, m + 1) if i in sc.sets[j - 1])
        for i in range(sc.n)
    )
    return g, 0, family


def _check_bf_size(n: int, m: int) -> None:
    if n > _BF_MAX_ELEMENTS or m > _BF_MAX_SETS:
        raise CapacityError(
            f"brute force capped at {_BF_MAX_ELEMENTS} elements / {_BF_MAX_SETS} sets"
        )


def solve_hitting_set_bf(hs: HittingSetInstance) -> bool:
    """Exact answer by enumerating element subsets of size <= k."""
    _check_bf_size(hs.n, len(hs.sets))
    if not hs.sets:
        return True
    for size in range(0, min(hs.k, hs.n) + 1):
        for combo in combinations(range(hs.n), size):
            chosen = set(combo)
            if all(s & chosen for s in hs.sets):
                return True
    return False


def solve_set_cover_bf(sc: SetCoverInstance) -> bool:
    """Exact answer by enumerating set subfamilies of size <= k."""
    _check_bf_size(sc.n, len(sc.sets))
    universe = set(range(sc.n))
    if not universe:
        return True
    m = len(sc.sets)
    for size in range(0, min(sc.k, m) + 1):
        for combo in combinations(range(m), size):
            if set().union(*(sc.sets[j] for j in combo)) >= universe:
                return True
    return False
