"""Polynomial decision procedure for non-strict graphs with at most two
components per step.

Between two consecutive two-component steps exactly one of three things
happens: every cross-intersection is non-empty (FREE: both next components
are reachable from either side), exactly one is empty (RESTRICTED: one
component shrinks to a strict subset, the other grows, and the growing side
cannot be left), or the partitions are equal as set families (IDENTICAL,
merged away in preprocessing).

The solver cascades through the structural yes-cases -- a single-component
step, a restricted transition after a free one, the start vertex inside a
shrinking component, or more than 1 + log2(n) free transitions -- and
otherwise enumerates the O(n) walks through the free suffix, testing the
target predicate on each visit set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .errors import CapacityError, InputError
from .graphs import (
    INFINITY,
    NonStrictTemporalGraph,
    NonStrictWalk,
    TargetSpec,
    validate_ns_walk,
)
from .tour_dp import TourResult

FREE = "FREE"
RESTRICTED = "RESTRICTED"
IDENTICAL = "IDENTICAL"


@dataclass(frozen=True)
class TransitionClass:
    """Classification of one two-component transition.

    For RESTRICTED, ``shrinking``/``growing`` are the step-i components that
    get replaced by a strict subset / superset in step i+1.
    """

    kind: str
    shrinking: Optional[FrozenSet[int]] = None
    growing: Optional[FrozenSet[int]] = None


def classify_transition(step_i: Sequence, step_j: Sequence) -> TransitionClass:
    """Classify the transition between two 2-component partitions.

    Exactly one of FREE / RESTRICTED / IDENTICAL holds for every pair of
    two-component partitions of the same vertex set.
    """
    if len(step_i) != 2 or len(step_j) != 2:
        raise InputError("transitions are defined between 2-component partitions")
    a_i, b_i = (frozenset(c) for c in step_i)
    a_j, b_j = (frozenset(c) for c in step_j)
    if a_i | b_i != a_j | b_j:
        raise InputError("partitions cover different vertex sets")
    if {a_i, b_i} == {a_j, b_j}:
        return TransitionClass(IDENTICAL)
    empties = [
        (x, y) for x in (a_i, b_i) for y in (a_j, b_j) if not (x & y)
    ]
    if not empties:
        return TransitionClass(FREE)
    # partitions differ, so exactly one cross-intersection is empty;
    # X v Y = {} forces Y inside the other step-i component, which shrinks
    (x, y) = empties[0]
    other = b_i if x == a_i else a_i
    return TransitionClass(RESTRICTED, shrinking=other, growing=x)


def _merge_identical(g: NonStrictTemporalGraph):
    """Collapse runs of set-family-equal consecutive steps.

    Returns (partitions, spans): partitions[r] is the run's component pair
    and spans[r] = (first, last) original timestep of run r.
    """
    partitions: List[Tuple[FrozenSet[int], ...]] = []
    spans: List[Tuple[int, int]] = []
    for t in range(1, g.L + 1):
        parts = g.steps[t - 1]
        if partitions and set(partitions[-1]) == set(parts):
            spans[-1] = (spans[-1][0], t)
        else:
            partitions.append(parts)
            spans.append((t, t))
    return partitions, spans


def _expand_and_trim(g, s, reduced_sets, spans, target):
    """Expand a per-run component choice to original steps and cut the walk
    at the earliest step whose accumulated visit set satisfies the target."""
    refs = []
    visited = set()
    cut = None
    for r, cset in enumerate(reduced_sets):
        a, b = spans[r]
        for t in range(a, b + 1):
            refs.append((t, g.steps[t - 1].index(cset)))
            visited |= cset
            if target.satisfied_by(visited, g.n):
                cut = len(refs)
                break
        if cut is not None:
            break
    if cut is None:
        return None
    walk = NonStrictWalk(s, refs[:cut])
    if not validate_ns_walk(g, walk):
        raise AssertionError("two-component certificate failed validation")
    return TourResult(True, walk.arrival, walk)


def solve_gamma2(g: NonStrictTemporalGraph, s: int, target: TargetSpec) -> TourResult:
    """Decide any target variant on a graph with gamma <= 2.

    YES answers carry a certificate walk; the arrival reported is that of
    the certificate (this is a decision procedure, not a foremost solver).
    """
    if not 0 <= s < g.n:
        raise InputError(f"start vertex {s} out of range")
    target.check(g.n)
    if g.gamma > 2:
        raise CapacityError(
            "more than two components per step; use the lifetime-parameterized "
            "search-tree solver"
        )
    if g.L == 0:
        if target.satisfied_by(set(), g.n):
            return TourResult(True, 1, None)
        return TourResult.no()

    # (a) a single-component step explores everything after waiting at s
    for t in range(1, g.L + 1):
        if len(g.steps[t - 1]) == 1:
            sets = [g.component_of(s, tt) for tt in range(1, t)] + [g.steps[t - 1][0]]
            spans_one = [(tt, tt) for tt in range(1, t + 1)]
            res = _expand_and_trim(g, s, sets, spans_one, target)
            assert res is not None
            return res

    # (b) merge identical consecutive partitions
    partitions, spans = _merge_identical(g)
    R = len(partitions)
    trans = [
        classify_transition(partitions[r], partitions[r + 1]) for r in range(R - 1)
    ]

    def stay_sets(upto: int):
        # s's component at reduced steps 0..upto; valid since consecutive
        # occupied components share s itself
        return [next(c for c in partitions[r] if s in c) for r in range(upto + 1)]

    # (c) a restricted transition right after a free one explores everything
    for r in range(1, R - 1):
        if trans[r].kind == RESTRICTED and trans[r - 1].kind == FREE:
            grown = next(c for c in partitions[r + 1] if trans[r].growing <= c)
            sets = stay_sets(r - 1) + [trans[r].shrinking, grown]
            res = _expand_and_trim(g, s, sets, spans, target)
            assert res is not None
            return res

    # transitions now form a restricted prefix followed by a free suffix
    first_free = next(
        (r for r, tr in enumerate(trans) if tr.kind == FREE), len(trans)
    )

    # (d) s inside a shrinking component of the restricted prefix
    for r in range(first_free):
        if s in trans[r].shrinking:
            grown = next(c for c in partitions[r + 1] if trans[r].growing <= c)
            sets = stay_sets(r) + [grown]
            res = _expand_and_trim(g, s, sets, spans, target)
            assert res is not None
            return res

    # s is confined to its (growing) component throughout the prefix; the
    # walk is forced up to the first step of the free suffix
    forced = stay_sets(first_free)
    free_count = (R - 1) - first_free

    # (e) enough free transitions: halving the unvisited set explores all
    if free_count >= 1 and (1 << (free_count - 1)) > g.n:
        visited = set().union(*forced)
        sets = list(forced)
        for r in range(first_free + 1, R):
            choices = partitions[r]
            gains = [len(c - visited) for c in choices]
            pick = choices[0] if gains[0] >= gains[1] else choices[1]
            sets.append(pick)
            visited |= pick
            if len(visited) == g.n:
                break
        if len(visited) != g.n:
            raise AssertionError("greedy halving walk failed to explore")
        res = _expand_and_trim(g, s, sets, spans, target)
        assert res is not None
        return res

    # (f) enumerate all component choices through the short free suffix
    for bits in product((0, 1), repeat=free_count):
        sets = list(forced)
        for off, b in enumerate(bits):
            sets.append(partitions[first_free + 1 + off][b])
        visited = set().union(*sets)
        if target.satisfied_by(visited, g.n):
            res = _expand_and_trim(g, s, sets, spans, target)
            assert res is not None
            return res
    return TourResult.no()
