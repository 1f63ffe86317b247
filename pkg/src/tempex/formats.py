"""Text formats for graphs, targets, and covering-problem sources.

All files are UTF-8 with LF line endings; a line whose first non-blank
character is ``#`` is a comment. Canonical serializations sort vertices
within components/edges and list time edges by (t, u, v); parsing a
canonical file and serializing it again reproduces it byte for byte.

Formats:

* strict graph      -- ``STRICT <n> <L>`` then one ``<t> <u> <v>`` per time edge
* non-strict graph  -- ``NONSTRICT <n> <L>`` then per step ``T <t>: v .. | v ..``
* targets           -- ``X <v...>`` | ``K <k>`` | repeated ``SET <v...>`` lines
* hitting set       -- ``HS <n> <m> <k>`` then m ``SET <v...>`` lines
* set cover         -- ``SC <n> <m> <k>`` then m ``SET <v...>`` lines
"""

from __future__ import annotations

from typing import List, Tuple

from .errors import InputError
from .graphs import NonStrictTemporalGraph, StrictTemporalGraph, TargetSpec
from .reductions import HittingSetInstance, SetCoverInstance


def _content_lines(text: str) -> List[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _ints(tokens, what):
    try:
        return [int(tok) for tok in tokens]
    except ValueError as exc:
        raise InputError(f"bad integer in {what}: {exc}") from None


def parse_strict(text: str) -> StrictTemporalGraph:
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty strict graph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "STRICT":
        raise InputError(f"bad strict header: {lines[0]!r}")
    n, L = _ints(head[1:], "strict header")
    layers: List[set] = [set() for _ in range(L)]
    seen = set()
    for line in lines[1:]:
        t, u, v = _ints(line.split(), f"time edge {line!r}")
        if not 1 <= t <= L:
            raise InputError(f"timestep {t} outside [1, {L}]")
        if not 0 <= u < v < n:
            raise InputError(f"time edge {line!r} violates 0 <= u < v < n")
        if (t, u, v) in seen:
            raise InputError(f"duplicate time edge {(t, u, v)}")
        seen.add((t, u, v))
        layers[t - 1].add((u, v))
    return StrictTemporalGraph(n, L, layers)


def serialize_strict(g: StrictTemporalGraph) -> str:
    lines = [f"STRICT {g.n} {g.L}"]
    lines += [f"{t} {u} {v}" for t, u, v in g.time_edges()]
    return "\n".join(lines) + "\n"


def parse_nonstrict(text: str) -> NonStrictTemporalGraph:
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty non-strict graph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "NONSTRICT":
        raise InputError(f"bad non-strict header: {lines[0]!r}")
    n, L = _ints(head[1:], "non-strict header")
    if len(lines) - 1 != L:
        raise InputError(f"expected {L} step lines, got {len(lines) - 1}")
    steps = []
    for i, line in enumerate(lines[1:], start=1):
        if not line.startswith("T "):
            raise InputError(f"bad step line: {line!r}")
        try:
            label, rest = line[2:].split(":", 1)
        except ValueError:
            raise InputError(f"bad step line: {line!r}") from None
        (t,) = _ints([label.strip()], "step label")
        if t != i:
            raise InputError(f"step lines out of order: saw t={t}, expected {i}")
        parts = [chunk.split() for chunk in rest.split("|")]
        steps.append([_ints(p, f"step {t}") for p in parts])
    return NonStrictTemporalGraph(n, L, steps)


def serialize_nonstrict(g: NonStrictTemporalGraph) -> str:
    lines = [f"NONSTRICT {g.n} {g.L}"]
    for t in range(1, g.L + 1):
        comps = " | ".join(
            " ".join(str(v) for v in sorted(c)) for c in g.steps[t - 1]
        )
        lines.append(f"T {t}: {comps}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str):
    """Dispatch on the STRICT/NONSTRICT header."""
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty graph file")
    if lines[0].startswith("STRICT"):
        return parse_strict(text)
    if lines[0].startswith("NONSTRICT"):
        return parse_nonstrict(text)
    raise InputError(f"unrecognized graph header: {lines[0]!r}")


def parse_targets(text: str) -> TargetSpec:
    """Parse a targets file; a file with no directives is the empty family."""
    lines = _content_lines(text)
    xs = [l for l in lines if l.split()[0] == "X"]
    ks = [l for l in lines if l.split()[0] == "K"]
    sets = [l for l in lines if l.split()[0] == "SET"]
    if len(xs) + len(ks) + len(sets) != len(lines):
        bad = next(l for l in lines if l.split()[0] not in ("X", "K", "SET"))
        raise InputError(f"bad targets line: {bad!r}")
    kinds = sum(1 for group in (xs, ks, sets) if group)
    if kinds > 1:
        raise InputError("targets file mixes X/K/SET directives")
    if xs:
        if len(xs) > 1:
            raise InputError("multiple X lines in targets file")
        return TargetSpec.fixed_set(_ints(xs[0].split()[1:], "X line"))
    if ks:
        if len(ks) > 1:
            raise InputError("multiple K lines in targets file")
        (k,) = _ints(ks[0].split()[1:], "K line")
        return TargetSpec.count_k(k)
    return TargetSpec.set_family(_ints(l.split()[1:], "SET line") for l in sets)


def serialize_targets(spec: TargetSpec) -> str:
    if spec.variant == "FIXED":
        return "X " + " ".join(str(v) for v in sorted(spec.fixed)) + "\n"
    if spec.variant == "COUNT":
        return f"K {spec.count}\n"
    if spec.variant == "SETS":
        lines = [
            "SET " + " ".join(str(v) for v in sorted(xs)) for xs in spec.sets
        ]
        return "\n".join(lines) + ("\n" if lines else "")
    raise InputError(f"target variant {spec.variant} has no file form")


def _parse_cover_source(text: str, tag: str) -> Tuple[int, List[frozenset], int]:
    lines = _content_lines(text)
    if not lines:
        raise InputError(f"empty {tag} file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != tag:
        raise InputError(f"bad {tag} header: {lines[0]!r}")
    n, m, k = _ints(head[1:], f"{tag} header")
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"expected {m} SET lines, got {len(body)}")
    sets = []
    for line in body:
        toks = line.split()
        if toks[0] != "SET":
            raise InputError(f"bad set line: {line!r}")
        sets.append(frozenset(_ints(toks[1:], "SET line")))
    return n, sets, k


def parse_hitting_set(text: str) -> HittingSetInstance:
    n, sets, k = _parse_cover_source(text, "HS")
    return HittingSetInstance(n, sets, k)


def parse_set_cover(text: str) -> SetCoverInstance:
    n, sets, k = _parse_cover_source(text, "SC")
    return SetCoverInstance(n, sets, k)


def _serialize_cover_source(tag: str, n: int, sets, k: int) -> str:
    lines = [f"{tag} {n} {len(sets)} {k}"]
    lines += ["SET " + " ".join(str(v) for v in sorted(s)) for s in sets]
    return "\n".join(lines) + "\n"


def serialize_hitting_set(hs: HittingSetInstance) -> str:
    return _serialize_cover_source("HS", hs.n, hs.sets, hs.k)


def serialize_set_cover(sc: SetCoverInstance) -> str:
    return _serialize_cover_source("SC", sc.n, sc.sets, sc.k)
