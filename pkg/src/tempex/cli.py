"""Command-line surface: solve, gen, bench.

``solve`` prints ``YES <arrival>`` or ``NO`` on the first line, followed by
the certificate unless ``--quiet``: strict walks as ``START <v> <t0>`` plus
one ``EDGE <t> <u> <v>`` per traversal, non-strict walks as one
``STEP <t> COMP <sorted vertices>`` per occupied component. Exit codes:
0 decided (either answer), 2 input error, 3 capacity/budget error.

The environment variable TEMPEX_BUDGET lowers (never raises) the oracle
state cap.
"""

from __future__ import annotations

import argparse
import os
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import formats
from .colour_coding import McConfig, build_verified_family, solve_k_arbitrary_det, solve_k_arbitrary_mc
from .errors import CapacityError, InputError
from .graphs import (
    INFINITY,
    NonStrictTemporalGraph,
    NonStrictWalk,
    StrictTemporalGraph,
    StrictWalk,
    TargetSpec,
)
from .generators import random_ns_graph, random_strict_graph
from .oracles import NS_DEFAULT_BUDGET, STRICT_DEFAULT_BUDGET, OracleBudget, bf_ns, bf_strict
from .reachability import NonStrictMetrics, StrictMetrics
from .reductions import hitting_set_to_set_texp, set_cover_to_set_ns_texp
from .search_tree import solve_ns_k_fixed_search, solve_ns_texp
from .tour_dp import TourResult, solve_k_fixed
from .two_component import solve_gamma2


@dataclass
class RunReport:
    """One solve, as recorded by the bench runner."""

    instance: str
    algorithm: str
    answer: bool
    arrival: object
    millis: float
    seed: int
    certificate_path: Optional[str] = None


_DEFAULT_ALGO = {
    ("texp", "strict"): "dp",
    ("texp", "nonstrict"): "searchtree",
    ("kfixed", "strict"): "dp",
    ("kfixed", "nonstrict"): "dp",
    ("karb", "strict"): "cc",
    ("karb", "nonstrict"): "cc",
    ("set", "strict"): "oracle",
    ("set", "nonstrict"): "oracle",
}

_VALID_ALGO = {
    "dp": {("texp", "strict"), ("texp", "nonstrict"), ("kfixed", "strict"), ("kfixed", "nonstrict")},
    "cc": {("karb", "strict"), ("karb", "nonstrict")},
    "gamma2": {(p, "nonstrict") for p in ("texp", "kfixed", "karb", "set")},
    "searchtree": {("texp", "nonstrict"), ("kfixed", "nonstrict")},
    "oracle": {(p, m) for p in ("texp", "kfixed", "karb", "set") for m in ("strict", "nonstrict")},
}


def _oracle_budget(mode: str) -> OracleBudget:
    base = STRICT_DEFAULT_BUDGET if mode == "strict" else NS_DEFAULT_BUDGET
    raw = os.environ.get("TEMPEX_BUDGET")
    if raw is None:
        return base
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"TEMPEX_BUDGET={raw!r} is not an integer") from None
    if cap <= 0:
        raise InputError("TEMPEX_BUDGET must be positive")
    # downward only
    return OracleBudget(base.max_vertices, base.max_lifetime, min(base.max_states, cap))


def _load_graph(path: str, mode: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    g = formats.parse_graph(text)
    if mode == "strict" and not isinstance(g, StrictTemporalGraph):
        raise InputError(f"{path} is not a strict graph file")
    if mode == "nonstrict" and not isinstance(g, NonStrictTemporalGraph):
        raise InputError(f"{path} is not a non-strict graph file")
    return g


def _load_targets(path: Optional[str], problem: str, k: Optional[int]) -> TargetSpec:
    if problem == "texp":
        return TargetSpec.all()
    if problem == "karb":
        if k is None:
            raise InputError("--k is required for karb")
        return TargetSpec.count_k(k)
    if path is None:
        raise InputError(f"--targets is required for {problem}")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            spec = formats.parse_targets(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    if problem == "kfixed" and spec.variant != "FIXED":
        raise InputError("kfixed needs a targets file with an X line")
    if problem == "set" and spec.variant != "SETS":
        raise InputError("set needs a targets file with SET lines")
    return spec


def _dispatch(args, g, target: TargetSpec) -> TourResult:
    problem, mode, algo = args.problem, args.mode, args.algo
    s = args.start
    if algo == "dp":
        prov = StrictMetrics(g) if mode == "strict" else NonStrictMetrics(g)
        xs = range(g.n) if problem == "texp" else target.fixed
        return solve_k_fixed(prov, s, xs)
    if algo == "cc":
        prov = StrictMetrics(g) if mode == "strict" else NonStrictMetrics(g)
        if args.det:
            family = build_verified_family(g.n, target.count, seed=args.seed)
            return solve_k_arbitrary_det(prov, s, target.count, family)
        return solve_k_arbitrary_mc(prov, s, target.count, McConfig(args.epsilon, args.seed))
    if algo == "gamma2":
        return solve_gamma2(g, s, target)
    if algo == "searchtree":
        if problem == "texp":
            return solve_ns_texp(g, s)
        return solve_ns_k_fixed_search(g, s, target.fixed)
    if algo == "oracle":
        budget = _oracle_budget(mode)
        if mode == "strict":
            return bf_strict(g, s, target, budget)
        return bf_ns(g, s, target, budget)
    raise InputError(f"unknown algorithm {algo!r}")


def _certificate_lines(g, walk):
    if isinstance(walk, StrictWalk):
        lines = [f"START {walk.start_vertex} {walk.start_time}"]
        lines += [f"EDGE {t} {u} {v}" for t, (u, v) in walk.traversals]
        return lines
    lines = []
    for t, j in walk.component_refs:
        comp = " ".join(str(v) for v in sorted(g.steps[t - 1][j]))
        lines.append(f"STEP {t} COMP {comp}")
    return lines


def _cmd_solve(args) -> int:
    cell = (args.problem, args.mode)
    algo = args.algo or _DEFAULT_ALGO[cell]
    if cell not in _VALID_ALGO[algo]:
        raise InputError(f"--algo {algo} does not apply to problem={args.problem} mode={args.mode}")
    args.algo = algo
    g = _load_graph(args.input, args.mode)
    target = _load_targets(args.targets, args.problem, args.k)
    target.check(g.n)
    result = _dispatch(args, g, target)
    if result.answer:
        print(f"YES {result.arrival}")
        if not args.quiet and result.walk is not None:
            for line in _certificate_lines(g, result.walk):
                print(line)
    else:
        print("NO")
    return 0


def _write_out(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _cmd_gen(args) -> int:
    if args.gen_cmd == "random-strict":
        g = random_strict_graph(args.n, args.L, args.p, args.seed)
        _write_out(formats.serialize_strict(g), args.output)
        return 0
    if args.gen_cmd == "random-ns":
        g = random_ns_graph(args.n, args.L, args.gamma, args.seed)
        _write_out(formats.serialize_nonstrict(g), args.output)
        return 0
    with open(args.source, "r", encoding="utf-8") as fh:
        text = fh.read()
    if args.gen_cmd == "from-hitting-set":
        hs = formats.parse_hitting_set(text)
        g, _, family = hitting_set_to_set_texp(hs)
        graph_text = formats.serialize_strict(g)
    else:
        sc = formats.parse_set_cover(text)
        g, _, family = set_cover_to_set_ns_texp(sc)
        graph_text = formats.serialize_nonstrict(g)
    targets_text = formats.serialize_targets(TargetSpec.set_family(family))
    if args.targets_out is None and args.output is None:
        sys.stdout.write(graph_text)
        sys.stdout.write("# targets\n")
        sys.stdout.write(targets_text)
    else:
        _write_out(graph_text, args.output)
        _write_out(targets_text, args.targets_out)
    return 0


def _parse_suite_line(line: str, base_dir: str):
    toks = line.split()
    if len(toks) < 5:
        raise InputError(f"bad suite line: {line!r}")
    instance, problem, mode, algo, reps = toks[:5]
    try:
        reps = int(reps)
    except ValueError:
        raise InputError(f"bad repetition count in suite line: {line!r}") from None
    opts = {}
    for tok in toks[5:]:
        if "=" not in tok:
            raise InputError(f"bad suite option {tok!r}")
        key, val = tok.split("=", 1)
        opts[key] = val
    if not os.path.isabs(instance):
        instance = os.path.join(base_dir, instance)
    return instance, problem, mode, algo, reps, opts


def _cmd_bench(args) -> int:
    try:
        with open(args.suite, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read suite: {exc}") from None
    base_dir = os.path.dirname(os.path.abspath(args.suite))
    rows = []
    for line in raw.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        instance, problem, mode, algo, reps, opts = _parse_suite_line(line, base_dir)
        ns = argparse.Namespace(
            problem=problem,
            mode=mode,
            algo=algo,
            start=int(opts.get("start", 0)),
            k=int(opts["k"]) if "k" in opts else None,
            epsilon=float(opts.get("epsilon", 0.1)),
            det=opts.get("det", "0") == "1",
            seed=int(opts.get("seed", 0)),
        )
        cell = (problem, mode)
        if cell not in _VALID_ALGO.get(algo, set()):
            raise InputError(f"--algo {algo} does not apply to {cell}")
        g = _load_graph(instance, mode)
        tpath = opts.get("targets")
        if tpath is not None and not os.path.isabs(tpath):
            tpath = os.path.join(base_dir, tpath)
        target = _load_targets(tpath, problem, ns.k)
        target.check(g.n)
        times = []
        result = None
        for _ in range(max(1, reps)):
            t0 = time.perf_counter()
            result = _dispatch(ns, g, target)
            times.append((time.perf_counter() - t0) * 1000.0)
        rows.append(
            RunReport(
                instance=os.path.basename(instance),
                algorithm=algo,
                answer=result.answer,
                arrival=result.arrival,
                millis=statistics.median(times),
                seed=ns.seed,
            )
        )
    out = ["instance,algorithm,answer,arrival,millis,seed"]
    for r in rows:
        answer = "YES" if r.answer else "NO"
        arrival = "inf" if r.arrival == INFINITY else str(r.arrival)
        out.append(f"{r.instance},{r.algorithm},{answer},{arrival},{r.millis:.3f},{r.seed}")
    _write_out("\n".join(out) + "\n", args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tempex", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("solve", help="decide one instance")
    sp.add_argument("--problem", required=True, choices=["texp", "kfixed", "karb", "set"])
    sp.add_argument("--mode", required=True, choices=["strict", "nonstrict"])
    sp.add_argument("--input", required=True)
    sp.add_argument("--start", required=True, type=int)
    sp.add_argument("--targets")
    sp.add_argument("--k", type=int)
    sp.add_argument("--epsilon", type=float, default=0.1)
    sp.add_argument("--det", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--algo", choices=["dp", "cc", "gamma2", "searchtree", "oracle"])
    sp.add_argument("--quiet", action="store_true")
    sp.set_defaults(func=_cmd_solve)

    gp = sub.add_parser("gen", help="generate instances")
    gsub = gp.add_subparsers(dest="gen_cmd", required=True)
    rs = gsub.add_parser("random-strict")
    rs.add_argument("--n", required=True, type=int)
    rs.add_argument("--L", required=True, type=int)
    rs.add_argument("--p", required=True, type=float)
    rs.add_argument("--seed", required=True, type=int)
    rs.add_argument("-o", "--output")
    rn = gsub.add_parser("random-ns")
    rn.add_argument("--n", required=True, type=int)
    rn.add_argument("--L", required=True, type=int)
    rn.add_argument("--gamma", required=True, type=int)
    rn.add_argument("--seed", required=True, type=int)
    rn.add_argument("-o", "--output")
    for name in ("from-hitting-set", "from-set-cover"):
        fp = gsub.add_parser(name)
        fp.add_argument("source")
        fp.add_argument("-o", "--output")
        fp.add_argument("--targets-out")
    gp.set_defaults(func=_cmd_gen)

    bp = sub.add_parser("bench", help="run a timing suite, emit CSV")
    bp.add_argument("--suite", required=True)
    bp.add_argument("-o", "--output")
    bp.set_defaults(func=_cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
