"""Shared test utilities: independent walk enumerators and instance samplers.

The enumerators here are deliberately naive recursions straight off the walk
definitions; they are the oracles the reachability labels are checked
against and stay independent of everything under src/.
"""

from __future__ import annotations

import random

from tempex import INFINITY, NonStrictTemporalGraph, StrictTemporalGraph
from tempex.generators import random_ns_graph, random_strict_graph


def enum_strict_arrivals(g: StrictTemporalGraph, u: int, t: int):
    """Earliest arrival per vertex by enumerating every strict walk from (u, t)."""
    best = [INFINITY] * g.n
    if t <= g.L + 1:
        best[u] = t

    def rec(v, earliest):
        for tau in range(earliest, g.L + 1):
            for (a, b) in g.layers[tau - 1]:
                if v not in (a, b):
                    continue
                w = b if v == a else a
                if tau + 1 < best[w]:
                    best[w] = tau + 1
                rec(w, tau + 1)

    rec(u, t)
    return best


def enum_ns_arrivals(g: NonStrictTemporalGraph, u: int, t: int):
    """Earliest arrival per vertex by walking the (step, component) state
    graph exhaustively; a walk can stop the moment it occupies a component,
    so arrival[v] is the first step of any reachable state containing v."""
    best = [INFINITY] * g.n
    seen = set()

    def rec(j, step):
        if (step, j) in seen:
            return
        seen.add((step, j))
        comp = g.steps[step - 1][j]
        for v in comp:
            if step < best[v]:
                best[v] = step
        if step == g.L:
            return
        for j2, nxt in enumerate(g.steps[step]):
            if comp & nxt:
                rec(j2, step + 1)

    rec(g.component_index(u, t), t)
    return best


def enum_strict_tour(g: StrictTemporalGraph, s: int, predicate):
    """Minimum arrival of a strict walk from (s, 1) whose visit set satisfies
    ``predicate``; INFINITY if none. Pure recursion, no pruning."""
    best = [INFINITY]
    if predicate({s}):
        return 1

    def rec(v, earliest, visited):
        for tau in range(earliest, g.L + 1):
            for (a, b) in g.layers[tau - 1]:
                if v not in (a, b):
                    continue
                w = b if v == a else a
                nv = visited | {w}
                if w not in visited and predicate(nv):
                    if tau + 1 < best[0]:
                        best[0] = tau + 1
                else:
                    rec(w, tau + 1, nv)

    rec(s, 1, {s})
    return best[0]


def enum_ns_tour(g: NonStrictTemporalGraph, s: int, predicate):
    """Minimum arrival of a non-strict walk from (s, 1) with a satisfying
    visit set; INFINITY if none."""
    if g.L == 0:
        return 1 if predicate(set()) else INFINITY
    best = [INFINITY]

    def rec(comp, step, visited):
        if predicate(visited):
            if step < best[0]:
                best[0] = step
            return
        if step == g.L:
            return
        for nxt in g.steps[step]:
            if comp & nxt:
                rec(nxt, step + 1, visited | nxt)

    start = g.component_of(s, 1)
    rec(start, 1, set(start))
    return best[0]


def sample_strict(rnd: random.Random, seed: int, n_max=6, L_max=5):
    n = rnd.randint(1, n_max)
    L = rnd.randint(1, L_max)
    p = rnd.uniform(0.1, 0.6)
    return random_strict_graph(n, L, p, seed)


def sample_ns(rnd: random.Random, seed: int, n_max=7, L_max=5, gamma_max=3):
    n = rnd.randint(1, n_max)
    L = rnd.randint(1, L_max)
    gamma = rnd.randint(1, gamma_max)
    return random_ns_graph(n, L, gamma, seed)


def sample_gamma2(rnd: random.Random, seed: int, n_max=8, L_max=8):
    """gamma <= 2 instances with occasional single-component steps, so the
    wait-then-sweep case gets exercised too."""
    n = rnd.randint(1, n_max)
    L = rnd.randint(1, L_max)
    sub = random.Random(seed)
    steps = []
    for _ in range(L):
        perm = list(range(n))
        sub.shuffle(perm)
        if n == 1 or sub.random() < 0.15:
            steps.append([perm])
        else:
            cut = sub.randint(1, n - 1)
            steps.append([perm[:cut], perm[cut:]])
    return NonStrictTemporalGraph(n, L, steps)


def random_target(rnd: random.Random, n: int):
    """One of the four target variants, valid for order n."""
    from tempex import TargetSpec

    kind = rnd.choice(["ALL", "FIXED", "COUNT", "SETS"])
    if kind == "ALL":
        return TargetSpec.all()
    if kind == "FIXED":
        return TargetSpec.fixed_set(rnd.sample(range(n), rnd.randint(0, n)))
    if kind == "COUNT":
        return TargetSpec.count_k(rnd.randint(0, n))
    fam = [rnd.sample(range(n), rnd.randint(1, n)) for _ in range(rnd.randint(0, 3))]
    return TargetSpec.set_family(fam)
