"""Exhaustive ground-truth solvers at desk scale.

These enumerate walks directly from the walk definitions and are the
reference every solver is differentially tested against. Strict: depth-first
over time edges with pruning on arrival >= best found so far. Non-strict:
breadth-first over (step, component, visited-set) states with visited-set
deduplication.

Budgets are hard caps; enumeration aborts cleanly (BudgetExceededError)
when the state cap is hit. Caps cannot be raised above the documented
ceilings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, InputError
from .graphs import (
    INFINITY,
    NonStrictTemporalGraph,
    NonStrictWalk,
    StrictTemporalGraph,
    StrictWalk,
    TargetSpec,
)
from .tour_dp import TourResult

# absolute ceilings; budgets beyond these are refused
_MAX_STRICT_VERTICES = 12
_MAX_NS_VERTICES = 32
_MAX_LIFETIME = 12
_MAX_STATES = 10**7


@dataclass(frozen=True)
class OracleBudget:
    """Hard caps for one oracle call."""

    max_vertices: int = 7
    max_lifetime: int = 6
    max_states: int = 10**6

    def __post_init__(self):
        if self.max_lifetime > _MAX_LIFETIME or self.max_states > _MAX_STATES:
            raise InputError("budget above the documented ceiling")


STRICT_DEFAULT_BUDGET = OracleBudget(7, 6, 10**6)
NS_DEFAULT_BUDGET = OracleBudget(32, 12, 10**6)


def _check(g, s, target, budget, ceiling_vertices):
    if not 0 <= s < g.n:
        raise InputError(f"start vertex {s} out of range")
    target.check(g.n)
    if budget.max_vertices > ceiling_vertices:
        raise InputError("budget above the documented ceiling")
    if g.n > budget.max_vertices:
        raise BudgetExceededError(f"n = {g.n} over the budget's {budget.max_vertices}")
    if g.L > budget.max_lifetime:
        raise BudgetExceededError(f"L = {g.L} over the budget's {budget.max_lifetime}")


def bf_strict(
    g: StrictTemporalGraph,
    s: int,
    target: TargetSpec,
    budget: OracleBudget = STRICT_DEFAULT_BUDGET,
) -> TourResult:
    """Exact minimum arrival over all strict walks from (s, 1), or NO."""
    _check(g, s, target, budget, _MAX_STRICT_VERTICES)
    n = g.n
    if target.satisfied_by({s}, n):
        return TourResult(True, 1, StrictWalk(s, 1, ()))
    adj = [
        {v: sorted(w for e in layer for w in e if v in e and w != v) for v in range(n)}
        for layer in g.layers
    ]
    best_arrival = INFINITY
    best_walk = None
    states = 0
    trav = []

    def dfs(v, earliest, visited):
        nonlocal best_arrival, best_walk, states
        for tau in range(earliest, g.L + 1):
            if tau + 1 >= best_arrival:
                return
            for w in adj[tau - 1][v]:
                states += 1
                if states > budget.max_states:
                    raise BudgetExceededError("strict enumeration hit the state cap")
                trav.append((tau, (v, w)))
                if w not in visited and target.satisfied_by(visited | {w}, n):
                    best_arrival = tau + 1
                    best_walk = StrictWalk(s, 1, list(trav))
                else:
                    dfs(w, tau + 1, visited | {w})
                trav.pop()

    dfs(s, 1, {s})
    if best_walk is None:
        return TourResult.no()
    return TourResult(True, best_arrival, best_walk)


def bf_ns(
    g: NonStrictTemporalGraph,
    s: int,
    target: TargetSpec,
    budget: OracleBudget = NS_DEFAULT_BUDGET,
) -> TourResult:
    """Exact minimum arrival over all non-strict walks from (s, 1), or NO."""
    _check(g, s, target, budget, _MAX_NS_VERTICES)
    n = g.n
    if g.L == 0:
        # no walk exists at all; only targets satisfied by visiting nothing
        if target.satisfied_by(set(), n):
            return TourResult(True, 1, None)
        return TourResult.no()
    j0 = g.component_index(s, 1)
    start = (j0, frozenset(g.steps[0][j0]))
    level = {start: None}
    parents = {(1, start): None}
    states = 1
    for t in range(1, g.L + 1):
        for j, vis in level:
            if target.satisfied_by(vis, n):
                refs = []
                key = (t, (j, vis))
                while key is not None:
                    tt, (jj, _) = key
                    refs.append((tt, jj))
                    key = parents[key]
                refs.reverse()
                return TourResult(True, t, NonStrictWalk(s, refs))
        if t == g.L:
            break
        nxt = {}
        for j, vis in level:
            comp = g.steps[t - 1][j]
            for j2, comp2 in enumerate(g.steps[t]):
                if comp & comp2:
                    key = (j2, vis | comp2)
                    if key not in nxt:
                        states += 1
                        if states > budget.max_states:
                            raise BudgetExceededError(
                                "non-strict enumeration hit the state cap"
                            )
                        nxt[key] = None
                        parents[(t + 1, key)] = (t, (j, vis))
        level = nxt
    return TourResult.no()


def bf_set_texp(g, s, family, budget: OracleBudget = STRICT_DEFAULT_BUDGET) -> bool:
    """Decision form of bf_strict with a set-family target."""
    return bf_strict(g, s, TargetSpec.set_family(family), budget).answer


def bf_set_ns_texp(g, s, family, budget: OracleBudget = NS_DEFAULT_BUDGET) -> bool:
    """Decision form of bf_ns with a set-family target."""
    return bf_ns(g, s, TargetSpec.set_family(family), budget).answer
