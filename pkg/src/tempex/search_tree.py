"""Lifetime-parameterized search-tree solver for non-strict exploration.

The recursion grows a set Q of components from pairwise-distinct timesteps
that a candidate walk should visit. If an exploring walk exists, some
unused component must contain at least a 1/(L - |T(Q)|) fraction of the
still-unvisited vertices, so only those components are branched on; after
filtering to unused layers at most ``(L - |T(Q)|)^2`` candidates remain
(asserted at runtime on every call). Leaves check feasibility: does a walk
from (s, 1) visit all of Q in timestep order?

The fixed-target adaptation replaces "all n vertices covered" by "all of X
covered" and counts only unvisited X-vertices in the branching threshold.

Thresholds compare exactly over the integers (gain * slots >= need); no
floating point enters the branching predicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .errors import InputError
from .graphs import NonStrictTemporalGraph, NonStrictWalk, validate_ns_walk
from .tour_dp import TourResult

Ref = Tuple[int, int]  # (timestep, component index)


@dataclass(frozen=True)
class ComponentSelection:
    """Components from pairwise-distinct timesteps, sorted by timestep,
    with cached vertex union D(Q) and used-timestep set T(Q)."""

    refs: Tuple[Ref, ...]
    covered: FrozenSet[int]
    times: FrozenSet[int]

    @classmethod
    def empty(cls) -> "ComponentSelection":
        return cls((), frozenset(), frozenset())

    def extended(self, g: NonStrictTemporalGraph, ref: Ref) -> "ComponentSelection":
        t, j = ref
        if t in self.times:
            raise InputError(f"timestep {t} already used in this selection")
        refs = tuple(sorted(self.refs + (ref,)))
        return ComponentSelection(
            refs, self.covered | g.steps[t - 1][j], self.times | {t}
        )


def comp_reachable(g: NonStrictTemporalGraph, from_ref: Ref, to_ref: Ref) -> bool:
    """Can a walk occupy ``from_ref`` at its timestep and ``to_ref`` at its?

    Frontier sweep: step by step, mark every component intersecting the
    vertices reached so far.
    """
    t1, j1 = from_ref
    t2, j2 = to_ref
    if not (1 <= t1 <= g.L and 0 <= j1 < len(g.steps[t1 - 1])):
        raise InputError(f"bad component ref {from_ref}")
    if not (1 <= t2 <= g.L and 0 <= j2 < len(g.steps[t2 - 1])):
        raise InputError(f"bad component ref {to_ref}")
    if t1 > t2:
        raise InputError("component refs out of timestep order")
    if t1 == t2:
        return j1 == j2
    reached = set(g.steps[t1 - 1][j1])
    for t in range(t1 + 1, t2 + 1):
        marked = [c for c in g.steps[t - 1] if c & reached]
        if t == t2:
            return bool(g.steps[t - 1][j2] & reached)
        for c in marked:
            reached |= c
    raise AssertionError("unreachable")


def _segment(g: NonStrictTemporalGraph, from_ref: Ref, to_ref: Ref) -> Optional[List[Ref]]:
    """Component sequence from from_ref to to_ref (inclusive), or None.

    Same sweep as comp_reachable but with predecessor recording; ties pick
    the smallest predecessor component index.
    """
    t1, j1 = from_ref
    t2, j2 = to_ref
    if t1 == t2:
        return [from_ref] if j1 == j2 else None
    reached = set(g.steps[t1 - 1][j1])
    marked_prev = [j1]
    pred = {}
    for t in range(t1 + 1, t2 + 1):
        marked = []
        for j, comp in enumerate(g.steps[t - 1]):
            if comp & reached:
                marked.append(j)
                pred[(t, j)] = next(
                    jp for jp in marked_prev if g.steps[t - 2][jp] & comp
                )
        for j in marked:
            reached |= g.steps[t - 1][j]
        marked_prev = marked
    if (t2, j2) not in pred:
        return None
    out = [(t2, j2)]
    while out[-1][0] > t1:
        t, j = out[-1]
        out.append((t - 1, pred[(t, j)]))
    out.reverse()
    return out


def w_feasible(g: NonStrictTemporalGraph, s: int, q: ComponentSelection) -> bool:
    """Does some walk from (s, 1) visit every component of Q?

    Chains the reachability sweep from s's step-1 component through Q in
    timestep order. Empty Q is trivially feasible.
    """
    if not 0 <= s < g.n:
        raise InputError(f"start vertex {s} out of range")
    if not q.refs:
        return True
    cur = (1, g.component_index(s, 1))
    for ref in q.refs:
        if not comp_reachable(g, cur, ref):
            return False
        cur = ref
    return True


def _certificate(g: NonStrictTemporalGraph, s: int, refs: Sequence[Ref]) -> NonStrictWalk:
    cur = (1, g.component_index(s, 1))
    out = [cur]
    for ref in refs:
        seg = _segment(g, cur, ref)
        if seg is None:
            raise AssertionError("accepting selection lost its walk")
        out.extend(seg[1:])
        cur = ref
    walk = NonStrictWalk(s, out)
    if not validate_ns_walk(g, walk):
        raise AssertionError("search-tree certificate failed validation")
    return walk


def _search(g, s, q, weight, need_full):
    """Core recursion; ``weight(comp, covered)`` counts useful new vertices
    and ``need_full(covered)`` is the base-case completion test."""
    L = g.L
    if len(q.refs) == L or need_full(q.covered):
        if need_full(q.covered) and w_feasible(g, s, q):
            return q.refs
        return None
    slots = L - len(q.times)
    need = weight(frozenset(range(g.n)), q.covered)  # still-missing useful vertices
    cand = []
    for t in range(1, L + 1):
        if t in q.times:
            continue  # build C' on unused layers only
        for j, comp in enumerate(g.steps[t - 1]):
            gain = weight(comp, q.covered)
            if gain * slots >= need:
                cand.append((t, -gain, j))
    bound = slots * slots
    if len(cand) > bound:
        raise AssertionError(
            f"branching bound violated: {len(cand)} candidates > {bound}"
        )
    cand.sort()
    for t, _, j in cand:
        hit = _search(g, s, q.extended(g, (t, j)), weight, need_full)
        if hit is not None:
            return hit
    return None


def _result(g, s, refs) -> TourResult:
    if refs is None:
        return TourResult.no()
    if not refs:
        if g.L == 0:
            return TourResult(True, 1, None)  # no walk exists in an L=0 graph
        walk = NonStrictWalk(s, [(1, g.component_index(s, 1))])
        return TourResult(True, 1, walk)
    walk = _certificate(g, s, refs)
    return TourResult(True, walk.arrival, walk)


def solve_ns_texp(g: NonStrictTemporalGraph, s: int) -> TourResult:
    """Decide non-strict exploration from s, lifetime-parameterized."""
    if not 0 <= s < g.n:
        raise InputError(f"start vertex {s} out of range")

    def weight(comp, covered):
        return len(comp - covered)

    def need_full(covered):
        return len(covered) == g.n

    refs = _search(g, s, ComponentSelection.empty(), weight, need_full)
    return _result(g, s, refs)


def solve_ns_k_fixed_search(g: NonStrictTemporalGraph, s: int, targets) -> TourResult:
    """Search-tree adaptation for visiting a fixed vertex set X."""
    if not 0 <= s < g.n:
        raise InputError(f"start vertex {s} out of range")
    xs = frozenset(targets)
    if any(not 0 <= v < g.n for v in xs):
        raise InputError("target outside [0, n)")

    def weight(comp, covered):
        return len((comp - covered) & xs)

    def need_full(covered):
        return len(covered & xs) == len(xs)

    refs = _search(g, s, ComponentSelection.empty(), weight, need_full)
    return _result(g, s, refs)
