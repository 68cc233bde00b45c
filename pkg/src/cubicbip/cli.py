"""Command-line interface.

Graphs travel as graph6 lines; reports are JSON (``"schema": 1``) except for
``gen`` (graph6) and ``stats`` (CSV).  Diagnostics go to stderr only.  Exit
codes: 0 ok, 1 bad input, 2 instance out of scope, 3 internal failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import CubicGraph, bipartition_of, classify, decycling_bounds, girth, read_graph6_lines, to_graph6
from .decycle import meets_threshold, solve
from .errors import CubicBipError, InputError, OutOfScope
from .gen import GenSpec, random_cubic
from .indset import DEFAULT_NODE_BUDGET, greedy_mis, is_independent, max_is
from .residuum import complement, free_sets

log = logging.getLogger("cubicbip")

SCHEMA = 1


class UsageError(InputError):
    pass


def _read_graphs(path: str) -> list[CubicGraph]:
    if path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        try:
            with open(path, encoding="ascii") as fh:
                lines = fh.read().splitlines()
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
    graphs = read_graph6_lines(lines)
    if not graphs:
        raise UsageError(f"no graph6 lines in {path}")
    return graphs


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=False) + "\n")


def _parse_set(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"--set expects comma-separated integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# subcommands; each returns the data for one graph


def cmd_solve(G: CubicGraph, args) -> dict:
    result = solve(G, args.k, node_budget=args.node_budget, seed=args.seed)
    return result.to_json()


def _format_solve(report: dict) -> str:
    keys = ("n", "alpha", "k", "route", "iterations", "verified")
    # json.dumps keeps booleans lowercase; strings are printed bare
    lines = [f"{k}: {v if isinstance(v, str) else json.dumps(v)}" for k, v in ((k, report[k]) for k in keys)]
    lines.append("set: " + ",".join(map(str, report["set"])))
    lines.append("coloring_sizes: " + ",".join(map(str, report["coloring_sizes"])))
    return "\n".join(lines)


def cmd_color(G: CubicGraph, args) -> dict:
    result = solve(G, args.k, node_budget=args.node_budget, seed=args.seed)
    col = result.coloring
    return {
        "schema": SCHEMA,
        "n": G.n,
        "k": args.k,
        "type": [args.k, -(-(G.n - args.k) // 2), (G.n - args.k) // 2],
        "sizes": list(col.sizes),
        "coloring": list(col.assignment),
        "proper": col.is_proper(G),
        "type_matches": sorted(col.sizes) == sorted((args.k, -(-(G.n - args.k) // 2), (G.n - args.k) // 2)),
    }


def cmd_alpha(G: CubicGraph, args) -> dict:
    if args.greedy:
        witness, exact = greedy_mis(G, args.seed), False
    else:
        witness, exact = max_is(G, args.node_budget), True
    return {
        "schema": SCHEMA,
        "n": G.n,
        "alpha": len(witness),
        "exact": exact,
        "set": sorted(witness),
        "meets_threshold": meets_threshold(G.n, len(witness)),
    }


def cmd_verify(G: CubicGraph, args) -> dict:
    members = _parse_set(args.set)
    bad = [v for v in members if not 0 <= v < G.n]
    if bad:
        raise UsageError(f"vertex {bad[0]} out of range for n={G.n}")
    S = frozenset(members)
    independent = is_independent(G, S)
    split = bipartition_of(G, complement(G, S))
    report = {
        "schema": SCHEMA,
        "n": G.n,
        "size": len(S),
        "independent": independent,
        "complement_bipartite": not hasattr(split, "vertices"),
        "odd_cycle": list(split.vertices) if hasattr(split, "vertices") else None,
        "meets_threshold": meets_threshold(G.n, len(S)),
    }
    if args.free_sets:
        report["free_sets"] = free_sets(G, S).to_json() if independent else None
    return report


def cmd_bounds(G: CubicGraph, args) -> dict:
    speck, liu_zhao = decycling_bounds(G)
    return {
        "schema": SCHEMA,
        "n": G.n,
        "class": classify(G).value,
        "girth": girth(G),
        "speck": str(speck),
        "liu_zhao": str(liu_zhao),
        "speck_floor": speck.numerator // speck.denominator,
        "liu_zhao_floor": liu_zhao.numerator // liu_zhao.denominator,
    }


# ---------------------------------------------------------------------------
# stats


@dataclass
class TrialResult:
    trial: int
    seed: int
    alpha: int
    qualifies: bool
    k_min: int = 0
    k_max: int = -1
    solved: int = 0
    failures: Counter = field(default_factory=Counter)
    iterations: Counter = field(default_factory=Counter)
    cases: Counter = field(default_factory=Counter)


def run_trial(n: int, seed: int, trial: int) -> TrialResult:
    G = random_cubic(GenSpec(n, seed))
    alpha = len(max_is(G))
    res = TrialResult(trial, seed, alpha, meets_threshold(n, alpha))
    if not res.qualifies:
        return res
    res.k_min, res.k_max = (n - alpha) // 2, alpha
    for k in range(res.k_min, res.k_max + 1):
        try:
            out = solve(G, k)
        except CubicBipError as exc:
            res.failures[type(exc).__name__] += 1
            log.warning("trial %d (seed %d) k=%d failed: %s", trial, seed, k, exc)
            continue
        res.solved += 1
        res.iterations[out.trace.count] += 1
        res.cases.update(out.trace.cases_taken())
    return res


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def stats_csv(n: int, trials: int, seed: int, jobs: int = 1, per_trial: bool = False) -> str:
    GenSpec(n, seed)  # validates n
    if trials < 1:
        raise UsageError("--trials must be positive")
    seeds = [seed + i for i in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_trial, [n] * trials, seeds, range(trials)))
    else:
        results = [run_trial(n, s, i) for i, s in enumerate(seeds)]

    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    if per_trial:
        out.writerow(["trial", "seed", "n", "alpha", "qualifies", "k_min", "k_max", "solved", "failed", "iterations"])
        for r in results:
            its = sum(c * m for c, m in r.iterations.items())
            out.writerow([r.trial, r.seed, n, r.alpha, int(r.qualifies), r.k_min, r.k_max,
                          r.solved, sum(r.failures.values()), its])
        return buf.getvalue()

    qual = [r for r in results if r.qualifies]
    pairs = sum(r.k_max - r.k_min + 1 for r in qual)
    solved = sum(r.solved for r in qual)
    failures: Counter = Counter()
    iterations: Counter = Counter()
    cases: Counter = Counter()
    for r in qual:
        failures.update(r.failures)
        iterations.update(r.iterations)
        cases.update(r.cases)
    out.writerow(["section", "key", "value"])
    out.writerow(["summary", "n", n])
    out.writerow(["summary", "trials", trials])
    out.writerow(["summary", "seed", seed])
    out.writerow(["summary", "qualifying", len(qual)])
    out.writerow(["summary", "qualifying_fraction", _fmt(len(qual) / trials)])
    out.writerow(["summary", "pairs", pairs])
    out.writerow(["summary", "solved", solved])
    out.writerow(["summary", "success_rate", _fmt(solved / pairs) if pairs else ""])
    for name in sorted(failures):
        out.writerow(["failures", name, failures[name]])
    for count in sorted(iterations):
        out.writerow(["iterations", count, iterations[count]])
    for case in sorted(cases):
        out.writerow(["cases", case, cases[case]])
    return buf.getvalue()


def cmd_stats(args) -> int:
    sys.stdout.write(stats_csv(args.n, args.trials, args.seed, args.jobs, args.per_trial))
    return 0


def cmd_gen(args) -> int:
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    for i in range(args.count):
        sys.stdout.write(to_graph6(random_cubic(GenSpec(args.n, args.seed + i))) + "\n")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cubicbip",
        description="Bipartize tripartite cubic graphs by deleting an independent set.",
    )
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("--in", dest="infile", required=True, help="graph6 file, or - for stdin")
        sp.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("solve", help="independent set of size k with bipartite complement")
    graph_input(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--json", action="store_true", help="print the full JSON report")

    sp = sub.add_parser("color", help="semi-equitable 3-colouring with one class of size k")
    graph_input(sp)
    sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("alpha", help="independence number and a witness")
    graph_input(sp)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="branch and bound (default)")
    mode.add_argument("--greedy", action="store_true", help="min-degree greedy")

    sp = sub.add_parser("gen", help="random connected tripartite cubic graphs as graph6")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--count", type=int, default=1)

    sp = sub.add_parser("verify", help="check a vertex set")
    graph_input(sp)
    sp.add_argument("--set", required=True, help='comma-separated vertices, e.g. "0,3,5"')
    sp.add_argument("--free-sets", action="store_true", help="also report free and pseudo-free vertices")

    sp = sub.add_parser("stats", help="corpus experiment, CSV output")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--per-trial", action="store_true", help="one row per trial instead of the summary")

    sp = sub.add_parser("bounds", help="girth and decycling-number bounds")
    graph_input(sp)
    return p


PER_GRAPH = {
    "solve": cmd_solve,
    "color": cmd_color,
    "alpha": cmd_alpha,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "stats":
            return cmd_stats(args)
        status = 0
        for G in _read_graphs(args.infile):
            try:
                report = PER_GRAPH[args.command](G, args)
            except (InputError, OutOfScope) as exc:
                print(f"cubicbip: {type(exc).__name__}: {exc}", file=sys.stderr)
                status = status or exc.exit_code
                continue
            if args.command == "solve" and not args.json:
                sys.stdout.write(_format_solve(report) + "\n")
            else:
                _emit(report)
        return status
    except CubicBipError as exc:
        print(f"cubicbip: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"cubicbip: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"cubicbip: internal check failed: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())
