"""Core immutable data types: temporal graphs, walks, and target specs.

Conventions used throughout the package:

* vertices are 0-based ids ``0..n-1``;
* timesteps are 1-based ``1..L`` (``layers[t-1]`` / ``steps[t-1]`` hold step t);
* unreachability is the saturating sentinel :data:`INFINITY` (``math.inf``),
  ordered above every finite arrival;
* a strict walk that traverses its last edge at step t arrives at ``t + 1``;
  a non-strict walk that last occupies a component at step t arrives at ``t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Sequence, Tuple, Union

from .errors import InputError

#: Arrival value for "no walk exists". Comparisons and additions saturate.
INFINITY = math.inf

Edge = Tuple[int, int]
Arrival = Union[int, float]


def _as_edge(e) -> Edge:
    u, v = e
    if u == v:
        raise InputError(f"self-loop on vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class StrictTemporalGraph:
    """A lifetime-L sequence of simple undirected edge sets over n vertices.

    ``layers[t-1]`` is the edge set active at timestep t, each edge stored as
    an ordered pair ``(u, v)`` with ``u < v``.
    """

    n: int
    L: int
    layers: Tuple[FrozenSet[Edge], ...]

    def __init__(self, n: int, L: int, layers: Sequence[Iterable]):
        if n < 0 or L < 0:
            raise InputError("n and L must be non-negative")
        norm = []
        for raw in layers:
            seen = set()
            for e in raw:
                e = _as_edge(e)
                if not (0 <= e[0] < n and 0 <= e[1] < n):
                    raise InputError(f"edge {e} out of vertex range [0, {n})")
                if e in seen:
                    raise InputError(f"duplicate edge {e} within a layer")
                seen.add(e)
            norm.append(frozenset(seen))
        if len(norm) != L:
            raise InputError(f"expected {L} layers, got {len(norm)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "layers", tuple(norm))

    def edges_at(self, t: int) -> FrozenSet[Edge]:
        """Edge set of timestep t (1-based)."""
        if not 1 <= t <= self.L:
            raise InputError(f"timestep {t} outside [1, {self.L}]")
        return self.layers[t - 1]

    def time_edges(self):
        """Iterate (t, u, v) over all time edges in (t, u, v) order."""
        for t in range(1, self.L + 1):
            for u, v in sorted(self.layers[t - 1]):
                yield t, u, v


@dataclass(frozen=True)
class NonStrictTemporalGraph:
    """Per-step partitions of the vertex set into connected components.

    ``steps[t-1]`` lists the components of timestep t in a fixed order; a
    component is referenced by ``(t, index)`` and identical vertex sets in
    different steps are distinct components.
    """

    n: int
    L: int
    steps: Tuple[Tuple[FrozenSet[int], ...], ...]

    def __init__(self, n: int, L: int, steps: Sequence[Sequence[Iterable[int]]]):
        if n < 0 or L < 0:
            raise InputError("n and L must be non-negative")
        norm_steps = []
        for t0, parts in enumerate(steps):
            norm = tuple(frozenset(p) for p in parts)
            if any(not p for p in norm):
                raise InputError(f"empty component in step {t0 + 1}")
            total = 0
            seen = set()
            for p in norm:
                total += len(p)
                seen |= p
            if total != n or seen != set(range(n)):
                raise InputError(f"step {t0 + 1} is not a partition of 0..{n - 1}")
            norm_steps.append(norm)
        if len(norm_steps) != L:
            raise InputError(f"expected {L} steps, got {len(norm_steps)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "steps", tuple(norm_steps))
        # component index per (step, vertex); graphs are immutable so cache once
        comp_of = []
        for parts in norm_steps:
            row = [0] * n
            for j, p in enumerate(parts):
                for v in p:
                    row[v] = j
            comp_of.append(tuple(row))
        object.__setattr__(self, "_comp_of", tuple(comp_of))

    @property
    def gamma(self) -> int:
        """Maximum number of components in any single step (0 if L = 0)."""
        return max((len(p) for p in self.steps), default=0)

    def components_at(self, t: int) -> Tuple[FrozenSet[int], ...]:
        if not 1 <= t <= self.L:
            raise InputError(f"timestep {t} outside [1, {self.L}]")
        return self.steps[t - 1]

    def component_index(self, v: int, t: int) -> int:
        """Index j with v in the j-th component of step t."""
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range")
        if not 1 <= t <= self.L:
            raise InputError(f"timestep {t} outside [1, {self.L}]")
        return self._comp_of[t - 1][v]

    def component_of(self, v: int, t: int) -> FrozenSet[int]:
        return self.steps[t - 1][self.component_index(v, t)]


@dataclass(frozen=True)
class StrictWalk:
    """A strict temporal walk: start vertex/time plus (timestep, edge) pairs.

    The vertex chain is implied: each traversed edge contains the current
    vertex and moves to its other endpoint. An empty traversal sequence is a
    legal waiting walk with ``arrival == start_time``.
    """

    start_vertex: int
    start_time: int
    traversals: Tuple[Tuple[int, Edge], ...]
    arrival: Arrival

    def __init__(self, start_vertex, start_time, traversals=(), arrival=None):
        trav = tuple((t, _as_edge(e)) for t, e in traversals)
        if arrival is None:
            arrival = trav[-1][0] + 1 if trav else start_time
        object.__setattr__(self, "start_vertex", start_vertex)
        object.__setattr__(self, "start_time", start_time)
        object.__setattr__(self, "traversals", trav)
        object.__setattr__(self, "arrival", arrival)

    def vertex_sequence(self):
        """Vertex chain v_1, ..., v_l, or None if an edge does not chain."""
        seq = [self.start_vertex]
        cur = self.start_vertex
        for _, (u, v) in self.traversals:
            if cur == u:
                cur = v
            elif cur == v:
                cur = u
            else:
                return None
            seq.append(cur)
        return seq

    @property
    def end_vertex(self) -> int:
        seq = self.vertex_sequence()
        if seq is None:
            raise InputError("walk edges do not chain")
        return seq[-1]

    @property
    def duration(self) -> int:
        return self.arrival - self.start_time


@dataclass(frozen=True)
class NonStrictWalk:
    """A non-strict temporal walk: one component reference per consecutive step."""

    start_vertex: int
    component_refs: Tuple[Tuple[int, int], ...]  # (timestep, component index)
    arrival: Arrival

    def __init__(self, start_vertex, component_refs, arrival=None):
        refs = tuple((int(t), int(j)) for t, j in component_refs)
        if arrival is None:
            arrival = refs[-1][0] if refs else None
        if arrival is None:
            raise InputError("a non-strict walk must occupy at least one component")
        object.__setattr__(self, "start_vertex", start_vertex)
        object.__setattr__(self, "component_refs", refs)
        object.__setattr__(self, "arrival", arrival)

    @property
    def start_time(self) -> int:
        return self.component_refs[0][0]

    @property
    def duration(self) -> int:
        return self.arrival - self.start_time


ALL = "ALL"
FIXED = "FIXED"
COUNT = "COUNT"
SETS = "SETS"


@dataclass(frozen=True)
class TargetSpec:
    """What a tour must visit: everything, a fixed set, any k vertices, or
    at least one vertex from each set of a family."""

    variant: str
    fixed: FrozenSet[int] = frozenset()
    count: int = 0
    sets: Tuple[FrozenSet[int], ...] = ()

    @classmethod
    def all(cls) -> "TargetSpec":
        return cls(ALL)

    @classmethod
    def fixed_set(cls, xs: Iterable[int]) -> "TargetSpec":
        return cls(FIXED, fixed=frozenset(xs))

    @classmethod
    def count_k(cls, k: int) -> "TargetSpec":
        return cls(COUNT, count=int(k))

    @classmethod
    def set_family(cls, family: Iterable[Iterable[int]]) -> "TargetSpec":
        return cls(SETS, sets=tuple(frozenset(x) for x in family))

    def check(self, n: int) -> None:
        """Validate referenced ids against a graph of order n."""
        if self.variant == FIXED:
            if any(not 0 <= v < n for v in self.fixed):
                raise InputError("target set references a vertex outside [0, n)")
        elif self.variant == COUNT:
            if not 0 <= self.count <= n:
                raise InputError(f"target count {self.count} outside [0, {n}]")
        elif self.variant == SETS:
            for xs in self.sets:
                if not xs:
                    raise InputError("empty set in target family")
                if any(not 0 <= v < n for v in xs):
                    raise InputError("target family references a vertex outside [0, n)")
        elif self.variant != ALL:
            raise InputError(f"unknown target variant {self.variant!r}")

    def satisfied_by(self, visited: Iterable[int], n: int) -> bool:
        vis = set(visited)
        if self.variant == ALL:
            return len(vis) == n
        if self.variant == FIXED:
            return self.fixed <= vis
        if self.variant == COUNT:
            return len(vis) >= self.count
        return all(vis & xs for xs in self.sets)


def validate_strict_walk(g: StrictTemporalGraph, w: StrictWalk) -> bool:
    """True iff w is a valid strict temporal walk in g.

    Checks vertex ids, edge membership per layer, strictly increasing
    traversal times with ``start_time <= t_1``, endpoint chaining, and the
    arrival bookkeeping (last traversal time + 1, or start_time if waiting).
    """
    if not 0 <= w.start_vertex < g.n:
        return False
    if not w.traversals:
        # waiting walk; start times up to L+1 arise from walks that arrive
        # after the last layer
        return 1 <= w.start_time <= g.L + 1 and w.arrival == w.start_time
    times = [t for t, _ in w.traversals]
    if not 1 <= w.start_time <= times[0]:
        return False
    if any(t2 <= t1 for t1, t2 in zip(times, times[1:])):
        return False
    if times[-1] > g.L:
        return False
    cur = w.start_vertex
    for t, (u, v) in w.traversals:
        if not (0 <= u < g.n and 0 <= v < g.n):
            return False
        if (u, v) not in g.layers[t - 1]:
            return False
        if cur == u:
            cur = v
        elif cur == v:
            cur = u
        else:
            return False
    return w.arrival == times[-1] + 1


def validate_ns_walk(g: NonStrictTemporalGraph, w: NonStrictWalk) -> bool:
    """True iff w is a valid non-strict temporal walk in g.

    Component references must be in range, cover consecutive timesteps,
    pairwise intersect along the walk, and start in a component containing
    the start vertex; arrival must equal the last occupied timestep.
    """
    refs = w.component_refs
    if not refs:
        return False
    if not 0 <= w.start_vertex < g.n:
        return False
    for t, j in refs:
        if not 1 <= t <= g.L:
            return False
        if not 0 <= j < len(g.steps[t - 1]):
            return False
    if any(t2 != t1 + 1 for (t1, _), (t2, _) in zip(refs, refs[1:])):
        return False
    comps = [g.steps[t - 1][j] for t, j in refs]
    if w.start_vertex not in comps[0]:
        return False
    if any(not (c1 & c2) for c1, c2 in zip(comps, comps[1:])):
        return False
    return w.arrival == refs[-1][0]


def visited_vertices(g, w) -> FrozenSet[int]:
    """Vertex set visited by a validated walk (start vertex included)."""
    if isinstance(w, StrictWalk):
        if not validate_strict_walk(g, w):
            raise InputError("walk does not validate in this graph")
        return frozenset(w.vertex_sequence())
    if isinstance(w, NonStrictWalk):
        if not validate_ns_walk(g, w):
            raise InputError("walk does not validate in this graph")
        out = set()
        for t, j in w.component_refs:
            out |= g.steps[t - 1][j]
        return frozenset(out)
    raise InputError(f"not a walk: {w!r}")
