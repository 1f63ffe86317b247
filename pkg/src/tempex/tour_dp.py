"""Subset dynamic program for tours through a fixed target set.

``F(S, v)`` is the minimum arrival time of a walk that starts at the start
vertex at time 1, visits every target in ``S`` and ends at ``v in S``:

* ``F({v}, v)`` is the arrival of a shortest walk from the start to v, and
* ``F(S, v) = min over u in S-{v} of  F(S-{v}, u) + sp(u, v, F(S-{v}, u))``.

The table is filled by ascending subset size. Right after all values of one
size class are final, the earliest-arrival rows ``sp(u, ., F(S, u))`` for
that class are queried (deduplicated by (u, arrival) -- the same query
recurs across subsets) and evicted once the next size class completes.

Because the provider abstracts the arrival bookkeeping, the identical
recursion solves both the strict and the non-strict problem; a walk
arriving at time t composes with one starting at time t in either model.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import CapacityError, InputError
from .graphs import INFINITY, Arrival, NonStrictWalk, StrictWalk
from .reachability import STRICT, WalkMetricProvider

MAX_TARGETS = 64  # subsets are machine-word bit patterns


@dataclass(frozen=True)
class TourResult:
    """Outcome of one tour solve: decision, arrival, optional certificate.

    On YES the walk validates, visits everything the target requires, and
    its arrival equals ``arrival``; ``visit_order`` lists the targets in
    first-visit order when the solver ran a traceback.
    """

    answer: bool
    arrival: Arrival
    walk: Optional[object] = None
    visit_order: Optional[Tuple[int, ...]] = None

    @classmethod
    def no(cls) -> "TourResult":
        return cls(False, INFINITY)


@dataclass
class DpTableFixed:
    """F/P tables over subsets of the ordered target list.

    ``F[mask][i]`` is the arrival for subset ``mask`` ending at target
    ``targets[i]``; ``P[mask][i]`` the predecessor target index (argmin of
    the recursion, ties broken toward the smallest vertex id), -1 if none.
    """

    targets: Tuple[int, ...]
    F: List[List[Arrival]]
    P: List[List[int]]

    def value(self, subset: Sequence[int], v: int) -> Arrival:
        mask = 0
        for x in subset:
            mask |= 1 << self.targets.index(x)
        return self.F[mask][self.targets.index(v)]


def _masks_by_size(k: int) -> List[List[int]]:
    out: List[List[int]] = [[] for _ in range(k + 1)]
    for mask in range(1, 1 << k):
        out[mask.bit_count()].append(mask)
    return out


def build_fixed_table(provider: WalkMetricProvider, s: int, targets: Sequence[int]) -> DpTableFixed:
    """Fill F(S, v) for all non-empty S over the (sorted) target list."""
    xs = tuple(sorted(set(targets)))
    k = len(xs)
    F = [[INFINITY] * k for _ in range(1 << k)]
    P = [[-1] * k for _ in range(1 << k)]
    base = provider.labels(s, 1)
    for i, v in enumerate(xs):
        F[1 << i][i] = base.arrival[v]
    by_size = _masks_by_size(k)
    for size in range(1, k):
        rows: Dict[Tuple[int, Arrival], List[Arrival]] = {}
        for mask in by_size[size]:
            fm = F[mask]
            for ui in range(k):
                if mask & (1 << ui) and fm[ui] < INFINITY:
                    key = (ui, fm[ui])
                    if key not in rows:
                        lab = provider.labels(xs[ui], fm[ui])
                        rows[key] = [lab.arrival[x] for x in xs]
        for mask in by_size[size]:
            fm = F[mask]
            members = [i for i in range(k) if mask & (1 << i)]
            absent = [i for i in range(k) if not mask & (1 << i)]
            for ui in members:
                t = fm[ui]
                if t == INFINITY:
                    continue
                row = rows[(ui, t)]
                for vi in absent:
                    val = row[vi]
                    if val == INFINITY:
                        continue
                    nm = mask | (1 << vi)
                    fn = F[nm]
                    if val < fn[vi]:
                        fn[vi] = val
                        P[nm][vi] = ui
                    elif val == fn[vi] and ui < P[nm][vi]:
                        P[nm][vi] = ui
        # rows for this size class are evicted here
    return DpTableFixed(xs, F, P)


def chain_walks(mode: str, walks: Sequence):
    """Concatenate shortest walks whose endpoints/arrivals chain."""
    if mode == STRICT:
        trav = []
        for w in walks:
            trav.extend(w.traversals)
        return StrictWalk(walks[0].start_vertex, walks[0].start_time, trav)
    refs = list(walks[0].component_refs)
    for w in walks[1:]:
        if w.component_refs[0] != refs[-1]:
            raise AssertionError("non-strict sub-walks do not chain")
        refs.extend(w.component_refs[1:])
    return NonStrictWalk(walks[0].start_vertex, refs)


def walk_from_visit_order(provider: WalkMetricProvider, s: int, order: Sequence[int]):
    """Concatenate shortest walks s -> order[0] -> order[1] -> ... from time 1."""
    walks = []
    cur, t = s, 1
    for v in order:
        w = provider.shortest_walk(cur, v, t)
        walks.append(w)
        cur, t = v, w.arrival
    if not walks:
        return provider.trivial_walk(s)
    return chain_walks(provider.mode, walks)


def solve_k_fixed(provider: WalkMetricProvider, s: int, targets) -> TourResult:
    """Foremost tour from (s, 1) through every vertex of ``targets``.

    YES iff ``F* = min_v F(X, v)`` is finite; the certificate walk is built
    by tracing the predecessor pointers and concatenating the recomputed
    shortest walks between consecutive targets.
    """
    n = provider.n
    if not 0 <= s < n:
        raise InputError(f"start vertex {s} out of range")
    xs = tuple(sorted(set(targets)))
    if any(not 0 <= v < n for v in xs):
        raise InputError("target outside [0, n)")
    if len(xs) > MAX_TARGETS:
        raise CapacityError(f"|X| = {len(xs)} exceeds the {MAX_TARGETS}-target encoding bound")
    if not xs:
        # degenerate tour: arrival = start time = 1 by convention
        return TourResult(True, 1, provider.trivial_walk(s), ())
    if provider.lifetime == 0 and provider.mode != STRICT:
        return TourResult.no()  # an L=0 non-strict graph admits no walk
    table = build_fixed_table(provider, s, xs)
    k = len(xs)
    full = (1 << k) - 1
    best, u1 = INFINITY, -1
    for i in range(k):
        if table.F[full][i] < best:
            best, u1 = table.F[full][i], i
    if best == INFINITY:
        return TourResult.no()
    rev = [u1]
    mask = full
    for _ in range(k - 1):
        prev = rev[-1]
        rev.append(table.P[mask][prev])
        mask ^= 1 << prev
    order = tuple(xs[i] for i in reversed(rev))  # first-visit order u_k..u_1
    walk = walk_from_visit_order(provider, s, order)
    if walk.arrival != best:
        raise AssertionError("traceback arrival disagrees with F*")
    return TourResult(True, best, walk, order)


def solve_texp(provider: WalkMetricProvider, s: int) -> TourResult:
    """Full exploration = the fixed-target solve with X = V.

    Exponential in n; this is the exact reference solver for small orders.
    """
    return solve_k_fixed(provider, s, range(provider.n))
