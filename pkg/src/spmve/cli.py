"""Command-line front end: the solve, gen, verify and bench subcommands.

Results are printed as single-line JSON with sorted keys so identical runs
produce identical bytes (the ``wall_ms`` field is the one exception — it
reports real elapsed time).  Exit codes: 0 solved/passed, 1 verification
failed, 2 usage or precondition problem, 3 unparseable input.
"""

import argparse
import csv
import json
import sys
import time
from dataclasses import replace
from pathlib import Path

from . import approx, exact, generators, kernel, poly
from .errors import DeadlineExceeded, InputError, ParseError, PreconditionError
from .fileformat import emit_instance, parse_instance
from .graph import (INF, cluster_vertex_deletion_set, diameter,
                    evaluate_solution, min_st_cut_size, st_distance)
from .sptree import build_sp_tree

ALGORITHMS = ("auto", "bruteforce", "searchtree", "spdp", "cvd", "diam2",
              "complete", "greedy", "paramapprox")
VARIANTS = ("decision", "mincost", "maxlength")
# Only these run on the kernel; the closed forms and the cluster solver have
# preconditions (unit lengths, bounded diameter, completeness) that length
# contraction can break.
KERNELIZED = ("auto", "bruteforce", "searchtree")
BENCH_COLUMNS = ("file", "algorithm", "answer", "wall_ms", "nodes",
                 "n", "m", "kernel_n", "kernel_m", "k", "ell")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _json_distance(value):
    if value is None:
        return None
    return "inf" if value == INF else value


def _sp_setup(graph, s, t):
    tree = build_sp_tree(graph, s, t)
    if tree is None:
        raise PreconditionError(
            "the terminal pair admits no series-parallel decomposition")
    lengths = {pair: graph.lengths[i] for i, pair in enumerate(graph.edges)}
    return tree, lengths


def _plain_solver(alg: str, graph):
    """A decision callable (instance, *, stats, deadline) -> Solution | None
    for the algorithms that do not run on a kernel."""
    if alg == "bruteforce":
        return exact.brute_force
    if alg == "searchtree":
        return exact.search_tree
    if alg == "cvd":
        decomposition = cluster_vertex_deletion_set(graph)

        def run(inst, *, stats=None, deadline=None):
            return exact.cvd_fpt(inst, decomposition, stats=stats,
                                 deadline=deadline)
        return run
    if alg == "diam2":
        return lambda inst, *, stats=None, deadline=None: \
            poly.solve_diameter2(inst)
    if alg == "complete":
        return lambda inst, *, stats=None, deadline=None: \
            poly.solve_complete_unit(inst)
    raise AssertionError(alg)


def _min_witness(instance, solver, stats, deadline):
    """Decision by sweeping the budget upward, so a yes answer always carries
    a minimum-cardinality witness.  That keeps the reported solution size
    independent of kernelization (branch orders differ between a graph and
    its kernel, so a first-found witness would not be stable)."""
    for budget in range(instance.k + 1):
        found = solver(replace(instance, k=budget), stats=stats,
                       deadline=deadline)
        if found is not None:
            return found
    return None


def _solve_decision(instance, alg, kernelize_on, stats, deadline):
    """Returns (algorithm label, Solution | None)."""
    g, s, t = instance.graph, instance.s, instance.t
    if alg == "auto":
        if instance.trivially_yes:
            return "trivial", evaluate_solution(g, s, t, ())
        if instance.unit_length and 2 * g.m == g.n * (g.n - 1):
            return "complete", poly.solve_complete_unit(instance)
        if (instance.unit_length and instance.ell not in (2, 3, 4)
                and diameter(g) <= 2):
            return "diam2", poly.solve_diameter2(instance)
        if build_sp_tree(g, s, t) is not None:
            alg = "spdp"
        else:
            alg = "searchtree"
    if alg in ("bruteforce", "searchtree"):
        trace = kernel.kernelize(instance) if kernelize_on else None
        inner = trace.kernel if trace else instance
        if alg == "bruteforce":
            found = exact.brute_force(inner, stats=stats, deadline=deadline)
        else:
            found = _min_witness(inner, exact.search_tree, stats, deadline)
        if found is not None and trace:
            found = kernel.lift_solution(trace, found)
        return alg, found
    if alg == "spdp":
        tree, lengths = _sp_setup(g, s, t)
        cost, sol = poly.sp_min_cost(tree, lengths, instance.ell)
        if cost <= instance.k:
            return alg, evaluate_solution(g, s, t, sol.deleted_edges)
        return alg, None
    return alg, _plain_solver(alg, g)(instance, stats=stats,
                                      deadline=deadline)


def _solve_mincost(instance, alg, kernelize_on, stats, deadline):
    """Returns (label, Solution, extra JSON fields)."""
    g, s, t = instance.graph, instance.s, instance.t
    ell = instance.ell
    if alg == "greedy":
        sol, rounds = approx.greedy_ell_approx(g, s, t, ell)
        return alg, sol, {"opt_lower_bound": rounds}
    if alg == "auto":
        alg = "spdp" if build_sp_tree(g, s, t) is not None else "searchtree"
    if alg == "spdp":
        tree, lengths = _sp_setup(g, s, t)
        _, sol = poly.sp_min_cost(tree, lengths, ell)
        return alg, evaluate_solution(g, s, t, sol.deleted_edges), {}
    if alg in ("bruteforce", "searchtree") and kernelize_on:
        trace = kernel.kernelize(instance)
        kg = trace.kernel
        solver = exact.brute_force if alg == "bruteforce" else exact.search_tree
        sol = exact.min_cost(kg.graph, kg.s, kg.t, ell, solver=solver,
                             stats=stats, deadline=deadline)
        return alg, kernel.lift_solution(trace, sol), {}
    sol = exact.min_cost(g, s, t, ell, solver=_plain_solver(alg, g),
                         stats=stats, deadline=deadline)
    return alg, sol, {}


def _solve_maxlength(instance, alg, kernelize_on, stats, deadline, c):
    """Returns (label, optimum value, Solution, extra JSON fields)."""
    g, s, t = instance.graph, instance.s, instance.t
    k = instance.k
    if alg == "paramapprox":
        sol, cert = approx.param_approx_max_length(instance, c, stats=stats,
                                                   deadline=deadline)
        extras = {"certificate": cert.kind, "certificate_factor": cert.factor}
        return alg, sol.achieved_distance, sol, extras
    if alg == "auto":
        alg = "spdp" if build_sp_tree(g, s, t) is not None else "searchtree"
    if alg == "spdp":
        tree, lengths = _sp_setup(g, s, t)
        value, sol = poly.sp_max_length(tree, lengths, k)
        return alg, value, evaluate_solution(g, s, t, sol.deleted_edges), {}
    if alg in ("bruteforce", "searchtree") and kernelize_on:
        trace = kernel.kernelize(instance)
        kg = trace.kernel
        solver = exact.brute_force if alg == "bruteforce" else exact.search_tree
        value, sol = exact.max_length(kg.graph, kg.s, kg.t, k, solver=solver,
                                      stats=stats, deadline=deadline)
        if value < INF and alg == "searchtree":
            # shrink to a minimum witness for the same kernelize-independence
            # reason as in the decision path
            sol = exact.min_cost(kg.graph, kg.s, kg.t, value, solver=solver,
                                 stats=stats, deadline=deadline)
        return alg, value, kernel.lift_solution(trace, sol), {}
    solver = _plain_solver(alg, g)
    value, sol = exact.max_length(g, s, t, k, solver=solver, stats=stats,
                                  deadline=deadline)
    if value < INF and alg == "searchtree":
        sol = exact.min_cost(g, s, t, value, solver=solver, stats=stats,
                             deadline=deadline)
    return alg, value, sol, {}


def _cmd_solve(args) -> int:
    base = parse_instance(_read_text(args.instance))
    variant = args.variant
    if variant in ("decision", "mincost"):
        if args.ell is None:
            raise InputError(f"--variant {variant} requires --ell")
        if args.ell < 1:
            raise InputError("--ell must be at least 1")
    if variant == "mincost" and args.k is not None:
        raise InputError("--variant mincost determines k; drop --k")
    if variant == "maxlength":
        if args.k is None:
            raise InputError("--variant maxlength requires --k")
        if args.ell is not None:
            raise InputError("--variant maxlength determines the distance; "
                             "drop --ell")
    if args.k is not None and args.k < 0:
        raise InputError("--k must be non-negative")
    if args.alg == "greedy" and variant != "mincost":
        raise InputError("--alg greedy only supports --variant mincost")
    if args.alg == "paramapprox" and variant != "maxlength":
        raise InputError("--alg paramapprox only supports --variant maxlength")

    instance = replace(base, k=args.k or 0, ell=args.ell)
    kernelize_on = args.kernelize == "on"
    stats = exact.SolveStats()
    deadline = (time.monotonic() + args.timeout_ms / 1000.0
                if args.timeout_ms else None)
    label = args.alg
    extras = {}
    started = time.perf_counter()
    try:
        if variant == "decision":
            label, sol = _solve_decision(instance, args.alg, kernelize_on,
                                         stats, deadline)
            answer = "yes" if sol is not None else "no"
        elif variant == "mincost":
            label, sol, extras = _solve_mincost(instance, args.alg,
                                                kernelize_on, stats, deadline)
            answer = sol.cardinality
        else:
            label, value, sol, extras = _solve_maxlength(
                instance, args.alg, kernelize_on, stats, deadline, args.c)
            answer = _json_distance(value)
    except DeadlineExceeded:
        answer, sol, extras = "unknown", None, {}
    wall_ms = round((time.perf_counter() - started) * 1000.0, 3)

    payload = {
        "schema": 1,
        "variant": variant,
        "algorithm": label,
        "k": instance.k if variant != "mincost" else None,
        "ell": instance.ell,
        "answer": answer,
        "solution_edges": (sorted([u + 1, v + 1] for u, v in sol.deleted_edges)
                           if sol is not None else None),
        "distance_after": _json_distance(sol.achieved_distance
                                         if sol is not None else None),
        "nodes_explored": stats.nodes,
        "wall_ms": wall_ms,
    }
    payload.update(extras)
    print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_gen(args) -> int:
    instance = generators.gen_random(
        args.family, seed=args.seed, n=args.n, m=args.m, p=args.p,
        x=args.x, f=args.f, max_length=args.max_length)
    text = emit_instance(instance)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    instance = parse_instance(_read_text(args.instance))
    g = instance.graph
    try:
        payload = json.loads(_read_text(args.solution))
    except json.JSONDecodeError as exc:
        raise ParseError("BadJson", exc.lineno, exc.msg) from None
    if not isinstance(payload, dict):
        raise ParseError("BadJson", 1, "expected a JSON object")

    edges = payload.get("solution_edges")
    if edges is None:
        print("fail MissingSolution: result carries no edge set")
        return 1
    k = args.k if args.k is not None else payload.get("k")
    ell = args.ell if args.ell is not None else payload.get("ell")
    if ell is None:
        ell = payload.get("distance_after")
    if ell == "inf":
        ell = INF
    if not (isinstance(ell, int) or ell == INF):
        raise InputError("no target length available: pass --ell")
    if k is not None and not isinstance(k, int):
        raise InputError("budget k must be an integer")

    pairs = []
    for item in edges:
        if not (isinstance(item, (list, tuple)) and len(item) == 2
                and all(isinstance(c, int) for c in item)):
            print(f"fail MalformedSolution: bad edge entry {item!r}")
            return 1
        u, v = item
        if not (1 <= u <= g.n and 1 <= v <= g.n and u != v
                and g.has_edge(u - 1, v - 1)):
            print(f"fail EdgeNotInGraph: ({u},{v})")
            return 1
        pairs.append((u - 1, v - 1))
    sol = evaluate_solution(g, instance.s, instance.t, pairs)
    if k is not None and sol.cardinality > k:
        print(f"fail BudgetExceeded: {sol.cardinality} deletions, k={k}")
        return 1
    dist = _json_distance(sol.achieved_distance)
    if sol.achieved_distance < ell:
        print(f"fail DistanceTooSmall: distance {dist} below target "
              f"{_json_distance(ell)}")
        return 1
    print(f"pass: {sol.cardinality} deletions, distance {dist} reaches "
          f"target {_json_distance(ell)}")
    return 0


def _cmd_bench(args) -> int:
    directory = Path(args.corpus)
    if not directory.is_dir():
        raise InputError(f"not a directory: {args.corpus}")
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    for alg in algs:
        if alg not in ALGORITHMS or alg in ("greedy", "paramapprox"):
            raise InputError(f"bench cannot run algorithm {alg!r}")

    rows = []
    for path in sorted(p for p in directory.iterdir() if p.is_file()):
        try:
            base = parse_instance(path.read_text(encoding="utf-8"))
        except (OSError, ParseError, InputError) as exc:
            print(f"warning: skipping {path.name}: {exc}", file=sys.stderr)
            continue
        g = base.graph
        dist = st_distance(g, base.s, base.t)
        ell = args.ell if args.ell is not None else \
            (dist + 2 if dist < INF else 1)
        cut = min_st_cut_size(g, base.s, base.t)
        k = args.k if args.k is not None else max(0, cut - 1)
        instance = replace(base, k=k, ell=ell)
        trace = kernel.kernelize(instance)
        for alg in algs:
            stats = exact.SolveStats()
            deadline = (time.monotonic() + args.timeout_ms / 1000.0
                        if args.timeout_ms else None)
            started = time.perf_counter()
            try:
                _, sol = _solve_decision(instance, alg,
                                         args.kernelize == "on",
                                         stats, deadline)
                answer = "yes" if sol is not None else "no"
            except DeadlineExceeded:
                answer = "unknown"
            except (InputError, PreconditionError) as exc:
                print(f"warning: {alg} on {path.name}: {exc}",
                      file=sys.stderr)
                answer = "error"
            wall_ms = round((time.perf_counter() - started) * 1000.0, 3)
            rows.append({
                "file": path.name, "algorithm": alg, "answer": answer,
                "wall_ms": wall_ms, "nodes": stats.nodes,
                "n": g.n, "m": g.m,
                "kernel_n": trace.kernel.graph.n,
                "kernel_m": trace.kernel.graph.m,
                "k": k, "ell": ell,
            })

    widths = {c: max([len(c)] + [len(str(r[c])) for r in rows])
              for c in BENCH_COLUMNS}
    print("  ".join(c.ljust(widths[c]) for c in BENCH_COLUMNS).rstrip())
    for row in rows:
        print("  ".join(str(row[c]).ljust(widths[c])
                        for c in BENCH_COLUMNS).rstrip())
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS)
            writer.writeheader()
            writer.writerows(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spmve",
        description="Delete few edges to make two vertices far apart.")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one instance file")
    solve.add_argument("instance", help="instance file, or - for stdin")
    solve.add_argument("--alg", choices=ALGORITHMS, default="auto")
    solve.add_argument("--variant", choices=VARIANTS, default="decision")
    solve.add_argument("--k", type=int, default=None,
                       help="deletion budget (decision, maxlength)")
    solve.add_argument("--ell", type=int, default=None,
                       help="target distance (decision, mincost)")
    solve.add_argument("--kernelize", choices=("on", "off"), default="on")
    solve.add_argument("--seed", type=int, default=None,
                       help="accepted for interface stability; no solver "
                            "draws randomness")
    solve.add_argument("--timeout-ms", type=int, default=None)
    solve.add_argument("--c", type=float, default=1.0,
                       help="tradeoff constant for --alg paramapprox")
    solve.set_defaults(func=_cmd_solve)

    gen = sub.add_parser("gen", help="emit a seeded random instance")
    gen.add_argument("--family", choices=generators.FAMILIES, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--n", type=int, default=None)
    gen.add_argument("--m", type=int, default=None)
    gen.add_argument("--p", type=float, default=0.3)
    gen.add_argument("--x", type=int, default=None)
    gen.add_argument("--f", type=int, default=None)
    gen.add_argument("--max-length", type=int, default=1)
    gen.add_argument("--out", "-o", default="-")
    gen.set_defaults(func=_cmd_gen)

    verify = sub.add_parser("verify", help="check a solution JSON file")
    verify.add_argument("instance")
    verify.add_argument("solution", help="JSON produced by solve")
    verify.add_argument("--k", type=int, default=None)
    verify.add_argument("--ell", type=int, default=None)
    verify.set_defaults(func=_cmd_verify)

    bench = sub.add_parser("bench", help="run algorithms over a corpus dir")
    bench.add_argument("corpus")
    bench.add_argument("--algs", default="auto",
                       help="comma-separated algorithm list")
    bench.add_argument("--k", type=int, default=None)
    bench.add_argument("--ell", type=int, default=None)
    bench.add_argument("--kernelize", choices=("on", "off"), default="on")
    bench.add_argument("--timeout-ms", type=int, default=None)
    bench.add_argument("--csv", default=None, help="also write CSV here")
    bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except (InputError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
