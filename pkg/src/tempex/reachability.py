"""Earliest-arrival computation for both walk models.

A query from ``(u, t)`` yields per-vertex earliest arrival times plus
predecessor records sufficient to rebuild one optimal walk. Arrival
bookkeeping follows the two conventions: a strict walk whose last edge is
traversed at step tau arrives at ``tau + 1``; a non-strict walk arriving in
a component at step tau arrives at ``tau``. Durations ``sp(u, v, t) =
arrival[v] - t`` read off either way.

Providers wrap a graph behind one interface so the subset DPs run unchanged
in both models.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import InputError, UnreachableError
from .graphs import (
    INFINITY,
    Arrival,
    NonStrictTemporalGraph,
    NonStrictWalk,
    StrictTemporalGraph,
    StrictWalk,
)

STRICT = "strict"
NONSTRICT = "nonstrict"


@dataclass(frozen=True)
class ReachLabels:
    """Result of one earliest-arrival query.

    ``arrival[v]`` is the earliest arrival time at v (INFINITY if
    unreachable); ``pred[v]`` is ``(traversal step, prior vertex)`` in strict
    mode and the prior vertex in non-strict mode, ``None`` at the source.
    """

    mode: str
    graph: object
    source: int
    start_time: int
    arrival: Tuple[Arrival, ...]
    pred: Tuple[Optional[object], ...]

    def sp(self, v: int) -> Arrival:
        """Duration of a shortest walk source -> v starting at start_time."""
        a = self.arrival[v]
        return a - self.start_time if a < INFINITY else INFINITY


def _check_vertex(n: int, u: int) -> None:
    if not 0 <= u < n:
        raise InputError(f"vertex {u} out of range [0, {n})")


def _strict_layer_arrays(g: StrictTemporalGraph):
    """Per layer, source/target id arrays with both edge orientations."""
    out = []
    for layer in g.layers:
        if layer:
            us, vs = zip(*sorted(layer))
            src = np.fromiter(us + vs, dtype=np.int64)
            tgt = np.fromiter(vs + us, dtype=np.int64)
        else:
            src = tgt = np.empty(0, dtype=np.int64)
        out.append((src, tgt))
    return out


def _strict_scan(n, L, layer_arrays, u, t):
    arrival = np.full(n, np.inf)
    arrival[u] = t
    pred_v = np.full(n, n, dtype=np.int64)  # n = "no predecessor" sentinel
    pred_t = np.zeros(n, dtype=np.int64)
    reached = 1
    for tau in range(t, L + 1):
        src, tgt = layer_arrays[tau - 1]
        if src.size == 0:
            continue
        # snapshot semantics: a vertex first reached during step tau gets
        # arrival tau+1 and cannot serve as a source within the same step
        ok = arrival[src] <= tau
        if not ok.any():
            continue
        sources = src[ok]
        targets = tgt[ok]
        fresh = arrival[targets] > tau
        if not fresh.any():
            continue
        new_t = targets[fresh]
        new_s = sources[fresh]
        arrival[new_t] = tau + 1
        np.minimum.at(pred_v, new_t, new_s)  # tie-break: lowest prior vertex
        pred_t[new_t] = tau
        reached += np.unique(new_t).size
        if reached >= n:
            break
    return arrival, pred_v, pred_t


def strict_earliest_arrival(g: StrictTemporalGraph, u: int, t: int) -> ReachLabels:
    """Earliest strict arrival at every vertex for a walk from u starting at t.

    ``t`` may be ``L + 1`` (a start position with no layers left), in which
    case only the source is reachable.
    """
    return StrictMetrics(g).labels(u, t)


def ns_earliest_arrival(g: NonStrictTemporalGraph, u: int, t: int) -> ReachLabels:
    """Earliest non-strict arrival at every vertex from (u, t).

    Forward sweep: the whole step-t component of u is reached at t; each
    later step absorbs every component that already contains a reached
    vertex.
    """
    _check_vertex(g.n, u)
    if not 1 <= t <= g.L:
        raise InputError(f"start time {t} outside [1, {g.L}]")
    n = g.n
    arrival = [INFINITY] * n
    pred: list = [None] * n
    comp0 = g.component_of(u, t)
    for w in comp0:
        arrival[w] = t
        pred[w] = None if w == u else u
    reached = len(comp0)
    tc = t
    while reached < n and tc < g.L:
        tc += 1
        for comp in g.steps[tc - 1]:
            anchor = None  # lowest-id already-reached member, if any
            for w in sorted(comp):
                if arrival[w] < INFINITY:
                    anchor = w
                    break
            if anchor is None:
                continue
            for w in comp:
                if arrival[w] == INFINITY:
                    arrival[w] = tc
                    pred[w] = anchor
                    reached += 1
    return ReachLabels(NONSTRICT, g, u, t, tuple(arrival), tuple(pred))


def reconstruct_walk(labels: ReachLabels, v: int):
    """Rebuild one optimal walk from the query source to v.

    The walk validates, starts at (source, start_time), ends at v, and its
    arrival equals ``labels.arrival[v]``. Raises UnreachableError on an
    INFINITY arrival.
    """
    _check_vertex(len(labels.arrival), v)
    if labels.arrival[v] == INFINITY:
        raise UnreachableError(
            f"vertex {v} unreachable from ({labels.source}, {labels.start_time})"
        )
    if labels.mode == STRICT:
        edges = []
        w = v
        while labels.pred[w] is not None:
            tau, pw = labels.pred[w]
            edges.append((tau, (pw, w)))
            w = pw
        edges.reverse()
        return StrictWalk(labels.source, labels.start_time, edges)

    g: NonStrictTemporalGraph = labels.graph
    t = labels.start_time
    chain = [v]
    while labels.arrival[chain[-1]] > t:
        chain.append(labels.pred[chain[-1]])
    chain.reverse()  # chain[0] lies in the source's step-t component
    refs = [(t, g.component_index(labels.source, t))]
    cur = chain[0]
    idx = 1
    for tau in range(t + 1, labels.arrival[v] + 1):
        if idx < len(chain) and labels.arrival[chain[idx]] == tau:
            cur = chain[idx]
            idx += 1
        refs.append((tau, g.component_index(cur, tau)))
    return NonStrictWalk(labels.source, refs)


class WalkMetricProvider(abc.ABC):
    """Earliest-arrival capability over one immutable graph.

    Read-only after construction; concurrent queries allocate their own
    label storage.
    """

    mode: str

    def __init__(self, graph):
        self.graph = graph

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def lifetime(self) -> int:
        return self.graph.L

    @abc.abstractmethod
    def labels(self, u: int, t: int) -> ReachLabels:
        """ReachLabels for a walk from u starting at time t."""

    def shortest_walk(self, u: int, v: int, t: int):
        """One optimal walk u -> v starting at t (UnreachableError if none)."""
        return reconstruct_walk(self.labels(u, t), v)

    @abc.abstractmethod
    def trivial_walk(self, s: int):
        """The stay-at-s walk with start time 1 and arrival 1."""


class StrictMetrics(WalkMetricProvider):
    """Strict-model provider; one forward scan over layers per query."""

    mode = STRICT

    def __init__(self, graph: StrictTemporalGraph):
        super().__init__(graph)
        self._layers = _strict_layer_arrays(graph)

    def labels(self, u: int, t: int) -> ReachLabels:
        g = self.graph
        _check_vertex(g.n, u)
        if not 1 <= t <= g.L + 1:
            raise InputError(f"start time {t} outside [1, {g.L + 1}]")
        arr, pred_v, pred_t = _strict_scan(g.n, g.L, self._layers, u, t)
        arrival = tuple(int(a) if a < np.inf else INFINITY for a in arr)
        pred = tuple(
            None if pred_v[w] == g.n else (int(pred_t[w]), int(pred_v[w]))
            for w in range(g.n)
        )
        return ReachLabels(STRICT, g, u, t, arrival, pred)

    def trivial_walk(self, s: int) -> StrictWalk:
        return StrictWalk(s, 1, ())


class NonStrictMetrics(WalkMetricProvider):
    """Non-strict-model provider (component partitions per step)."""

    mode = NONSTRICT

    def labels(self, u: int, t: int) -> ReachLabels:
        return ns_earliest_arrival(self.graph, u, t)

    def trivial_walk(self, s: int) -> Optional[NonStrictWalk]:
        if self.graph.L == 0:
            return None  # degenerate L=0 graph admits no walk at all
        return NonStrictWalk(s, [(1, self.graph.component_index(s, 1))])
