"""Colour-coding solvers for tours through k arbitrary vertices.

A random k-colouring turns "visit k distinct vertices" into "visit one
vertex of every colour", which the colourful table

    H(D, v) = earliest arrival of a walk from the start that has visited a
              vertex of every colour in D and ends at v (with c(v) in D)

solves exactly like the fixed-target DP. The Monte Carlo driver repeats
random colourings often enough that an optimal tour's vertex set is
injectively coloured with probability at least 1 - epsilon; the
deterministic driver replaces the random colourings by a family of
colourings certified to hit every k-subset injectively.

Randomness: PCG64. Iteration i of a Monte Carlo run draws its colouring
from ``PCG64(SeedSequence(seed, spawn_key=(i,)))``, assigning colours to
vertices 0..n-1 in order, so iterations are independent and a parallel
merge by (arrival, iteration index) equals the sequential result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import numpy as np

from .errors import BudgetExceededError, CapacityError, InputError
from .graphs import INFINITY, Arrival
from .reachability import STRICT, WalkMetricProvider
from .tour_dp import MAX_TARGETS, TourResult, _masks_by_size, walk_from_visit_order

VERIFIED_RANDOM = "VERIFIED_RANDOM"
EXTERNAL = "EXTERNAL"

_FAMILY_MAX_N = 20
_FAMILY_MAX_K = 5
_FAMILY_MAX_TRIES = 10**6


@dataclass(frozen=True)
class Colouring:
    """Assignment of a colour in 1..k to every vertex 0..n-1."""

    colours: Tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InputError("colour count must be at least 1")
        if any(not 1 <= c <= self.k for c in self.colours):
            raise InputError("colour outside [1, k]")

    @property
    def n(self) -> int:
        return len(self.colours)

    def uses_all_colours(self) -> bool:
        return len(set(self.colours)) == self.k

    def injective_on(self, vertices) -> bool:
        seen = set()
        for v in vertices:
            c = self.colours[v]
            if c in seen:
                return False
            seen.add(c)
        return True


@dataclass
class DpTableColourful:
    """H/P tables over colour subsets; rows indexed by vertex id."""

    colouring: Colouring
    H: List[List[Arrival]]
    P: List[List[int]]


@dataclass(frozen=True)
class HashFamily:
    """A list of colourings plus its k-perfectness certification status."""

    functions: Tuple[Colouring, ...]
    provenance: str
    certified_for: Optional[Tuple[int, int]] = None  # (n, k) or None

    def is_certified_for(self, n: int, k: int) -> bool:
        return self.certified_for == (n, k)


@dataclass(frozen=True)
class McConfig:
    """Monte Carlo driver parameters.

    ``iterations`` defaults to ceil(e^k * ln(ceil(1/epsilon))) computed at
    solve time (it depends on k); an explicit value overrides that.
    """

    epsilon: float
    seed: int = 0
    iterations: Optional[int] = None

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise InputError("epsilon must lie in (0, 1)")
        if self.iterations is not None and self.iterations < 1:
            raise InputError("iterations must be at least 1")

    def iterations_for(self, k: int) -> int:
        if self.iterations is not None:
            return self.iterations
        r = math.ceil(1.0 / self.epsilon)
        return max(1, math.ceil(math.e**k * math.log(r)))


def build_colourful_table(
    provider: WalkMetricProvider, s: int, colouring: Colouring
) -> DpTableColourful:
    """Fill H(D, v) for all non-empty colour subsets D."""
    n = provider.n
    k = colouring.k
    c = colouring.colours
    classes: List[List[int]] = [[] for _ in range(k)]
    for v in range(n):
        classes[c[v] - 1].append(v)
    H = [[INFINITY] * n for _ in range(1 << k)]
    P = [[-1] * n for _ in range(1 << k)]
    base = provider.labels(s, 1)
    for v in range(n):
        H[1 << (c[v] - 1)][v] = base.arrival[v]
    by_size = _masks_by_size(k)
    for size in range(1, k):
        rows: Dict[Tuple[int, Arrival], Tuple[Arrival, ...]] = {}
        for mask in by_size[size]:
            hm = H[mask]
            for u in range(n):
                t = hm[u]
                if t < INFINITY and (u, t) not in rows:
                    rows[(u, t)] = provider.labels(u, t).arrival
        for mask in by_size[size]:
            hm = H[mask]
            absent = [col for col in range(k) if not mask & (1 << col)]
            for u in range(n):
                t = hm[u]
                if t == INFINITY:
                    continue
                row = rows[(u, t)]
                for col in absent:
                    nm = mask | (1 << col)
                    hn = H[nm]
                    pn = P[nm]
                    for v in classes[col]:
                        val = row[v]
                        if val < hn[v]:
                            hn[v] = val
                            pn[v] = u
                        elif val == hn[v] and val < INFINITY and u < pn[v]:
                            pn[v] = u
    return DpTableColourful(colouring, H, P)


def colourful_dp(provider: WalkMetricProvider, s: int, colouring: Colouring) -> TourResult:
    """Earliest-arrival walk from (s, 1) visiting every colour once.

    Callers mirroring the Monte Carlo loop should skip colourings that miss
    a colour on V; run on such a colouring the table is all-INFINITY and the
    answer is NO anyway.
    """
    n = provider.n
    if colouring.n != n:
        raise InputError("colouring does not cover the vertex set")
    if not 0 <= s < n:
        raise InputError(f"start vertex {s} out of range")
    if provider.lifetime == 0 and provider.mode != STRICT:
        return TourResult.no()
    k = colouring.k
    c = colouring.colours
    table = build_colourful_table(provider, s, colouring)
    H, P = table.H, table.P
    full = (1 << k) - 1
    best, u1 = INFINITY, -1
    for v in range(n):
        if H[full][v] < best:
            best, u1 = H[full][v], v
    if best == INFINITY:
        return TourResult.no()
    rev = [u1]
    mask = full
    for _ in range(k - 1):
        prev = rev[-1]
        rev.append(P[mask][prev])
        mask ^= 1 << (c[prev] - 1)
    order = tuple(reversed(rev))  # k distinctly coloured, hence distinct vertices
    walk = walk_from_visit_order(provider, s, order)
    if walk.arrival != best:
        raise AssertionError("traceback arrival disagrees with H*")
    return TourResult(True, best, walk, order)


def _iteration_rng(seed: int, iteration: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(iteration,))))


def random_colouring(n: int, k: int, rng: np.random.Generator) -> Colouring:
    """Uniform colour per vertex, assigned in vertex order 0..n-1."""
    return Colouring(tuple(int(x) for x in rng.integers(1, k + 1, size=n)), k)


def _check_k(provider: WalkMetricProvider, s: int, k: int) -> Optional[TourResult]:
    if not 0 <= s < provider.n:
        raise InputError(f"start vertex {s} out of range")
    if k < 0:
        raise InputError("k must be non-negative")
    if k > MAX_TARGETS:
        raise CapacityError(f"k = {k} exceeds the {MAX_TARGETS}-colour encoding bound")
    if k == 0:
        return TourResult(True, 1, provider.trivial_walk(s), ())
    if k > provider.n:
        return TourResult.no()
    return None


def solve_k_arbitrary_mc(provider: WalkMetricProvider, s: int, k: int, cfg: McConfig) -> TourResult:
    """Monte Carlo driver: random colourings, keep the best colourful walk.

    Sound unconditionally (any YES carries a real walk on >= k distinct
    vertices); complete with probability >= 1 - epsilon. Colourings that
    miss a colour are skipped but still consume an iteration.
    """
    shortcut = _check_k(provider, s, k)
    if shortcut is not None:
        return shortcut
    best: Optional[TourResult] = None
    for it in range(cfg.iterations_for(k)):
        colouring = random_colouring(provider.n, k, _iteration_rng(cfg.seed, it))
        if not colouring.uses_all_colours():
            continue
        res = colourful_dp(provider, s, colouring)
        if res.answer and (best is None or res.arrival < best.arrival):
            best = res
    return best if best is not None else TourResult.no()


def build_verified_family(n: int, k: int, seed: int = 0) -> HashFamily:
    """Sample random colourings until every k-subset of [n] is injectively
    coloured by some kept member; certify by construction.

    A sampled colouring is kept iff it newly covers an uncovered k-subset.
    Desk-scale only: n <= 20, k <= 5.
    """
    if n < 0 or k < 1:
        raise InputError("need n >= 0 and k >= 1")
    if n > _FAMILY_MAX_N or k > _FAMILY_MAX_K:
        raise CapacityError(
            f"verified family limited to n <= {_FAMILY_MAX_N}, k <= {_FAMILY_MAX_K}"
        )
    uncovered = set(combinations(range(n), k))
    rng = np.random.Generator(np.random.PCG64(seed))
    kept: List[Colouring] = []
    tries = 0
    while uncovered:
        if tries >= _FAMILY_MAX_TRIES:
            raise BudgetExceededError(
                f"family sampling exhausted {_FAMILY_MAX_TRIES} tries with "
                f"{len(uncovered)} of {math.comb(n, k)} subsets uncovered"
            )
        tries += 1
        colouring = random_colouring(n, k, rng)
        newly = [sub for sub in uncovered if colouring.injective_on(sub)]
        if newly:
            kept.append(colouring)
            uncovered.difference_update(newly)
    return HashFamily(tuple(kept), VERIFIED_RANDOM, certified_for=(n, k))


def verify_k_perfect(functions, n: int, k: int) -> bool:
    """Exhaustive check: every k-subset of [n] injective under some member."""
    funcs = list(functions)
    return all(
        any(f.injective_on(sub) for f in funcs) for sub in combinations(range(n), k)
    )


def certify_family(family: HashFamily, n: int, k: int) -> HashFamily:
    """Run the exhaustive check on an external family and stamp it."""
    if not verify_k_perfect(family.functions, n, k):
        raise InputError(f"family is not {k}-perfect over [{n}]")
    return HashFamily(family.functions, family.provenance, certified_for=(n, k))


def solve_k_arbitrary_det(provider: WalkMetricProvider, s: int, k: int, family: HashFamily) -> TourResult:
    """Derandomized driver: run the colourful DP over every family member.

    Exact whenever the family is certified k-perfect for (n, k); refuses
    uncertified families.
    """
    shortcut = _check_k(provider, s, k)
    if shortcut is not None:
        return shortcut
    if not family.is_certified_for(provider.n, k):
        raise InputError(
            f"hash family is not certified k-perfect for (n={provider.n}, k={k})"
        )
    best: Optional[TourResult] = None
    for colouring in family.functions:
        if not colouring.uses_all_colours():
            continue
        res = colourful_dp(provider, s, colouring)
        if res.answer and (best is None or res.arrival < best.arrival):
            best = res
    return best if best is not None else TourResult.no()
