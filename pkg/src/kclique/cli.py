"""Command-line entry point: ``kclique <subcommand> ...``.

Exit codes: 0 success, 2 usage error, 3 I/O error, 4 invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .cliques import brute_force_cliques
from .detector import count as count_cliques
from .detector import detect, find_witness
from .graph import (CliqueList, Graph, GraphFormatError, gen_kpartite_random, gen_planted,
                    gen_random, load_edge_list, pad_to_clique_count, save_edge_list)
from .hardness import DecisionStats, choose_s, decide_exact_kclique, gen_exact_instance
from .lister import ALGOS, ListingBudget, run_algorithm
from .planner import (as_rational, detection_table, f_i_bound, f_i_recurrence, f_index,
                      listing_exponents, reduction_exponent, reduction_valid)

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_INVALID = 0, 2, 3, 4


class UsageError(Exception):
    pass


def run_report(sub: str, inputs: dict, started: float, result: dict,
               phases: Optional[dict] = None) -> dict:
    return {"subcommand": sub, "inputs": inputs, "wall_time": round(time.perf_counter() - started, 6),
            "phases": phases or {}, "result": result}


def _emit(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read_graph(path: str) -> Graph:
    if path == "-":
        return load_edge_list(sys.stdin)
    with open(path) as fh:
        return load_edge_list(fh)


def _inputs(args) -> dict:
    skip = {"func", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _csv(rows: List[dict], fields: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def cmd_gen(args) -> int:
    started = time.perf_counter()
    if args.kind == "random":
        _need(args, "n", "p")
        g = gen_random(args.n, args.p, args.seed)
    elif args.kind == "planted":
        _need(args, "n", "p", "k")
        g = gen_planted(args.n, args.p, args.k, args.seed)
    else:
        _need(args, "parts", "per_part", "p")
        g = gen_kpartite_random(args.parts, args.per_part, args.p, args.seed)
    buf = io.StringIO()
    save_edge_list(g, buf)
    _emit(buf.getvalue(), args.output)
    if args.json:
        rep = run_report("gen", _inputs(args), started, {"n": g.n, "m": g.m, "output": args.output})
        sys.stderr.write(json.dumps(rep) + "\n")
    return EXIT_OK


def _need(args, *names) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing required flag(s): " + ", ".join("--" + m.replace("_", "-") for m in missing))


# ---------------------------------------------------------------------------
# detect / count / list
# ---------------------------------------------------------------------------

def _ell_list(g: Graph, ell: int) -> CliqueList:
    return brute_force_cliques(g, ell)


def _check_kl(k: int, ell: int) -> None:
    if k < 1 or ell < 1 or ell > k:
        raise ValueError(f"need 1 <= ell <= k, got k={k}, ell={ell}")


def cmd_detect(args) -> int:
    started = time.perf_counter()
    _check_kl(args.k, args.ell)
    g = _read_graph(args.input)
    L = _ell_list(g, args.ell)
    out = detect(g, args.k, L, omega=as_rational(args.omega))
    witness = out.witness
    if out.found and args.witness:
        witness = find_witness(g, args.k, L, omega=as_rational(args.omega))
    labelled = None if witness is None else sorted(g.label(v) for v in witness)
    if args.json:
        print(json.dumps(run_report("detect", _inputs(args), started,
                                    {"found": out.found, "witness": labelled})))
    else:
        print("yes" if out.found else "no")
        if labelled is not None:
            print(" ".join(map(str, labelled)))
    return EXIT_OK


def cmd_count(args) -> int:
    started = time.perf_counter()
    _check_kl(args.k, args.ell)
    g = _read_graph(args.input)
    stats: Dict[str, int] = {}
    c = count_cliques(g, args.k, _ell_list(g, args.ell), omega=as_rational(args.omega), stats=stats)
    if args.json:
        print(json.dumps(run_report("count", _inputs(args), started, {"count": c}, stats)))
    else:
        print(c)
    return EXIT_OK


def cmd_list(args) -> int:
    started = time.perf_counter()
    _check_kl(args.k, args.ell)
    _check_algo(args.algo)
    g = _read_graph(args.input)
    budget = ListingBudget.capped(args.t) if args.t is not None else None
    if args.k == args.ell:
        cl = _ell_list(g, args.k)
        if args.t is not None:
            cl = CliqueList(args.k, cl.items[:args.t])
        phases: dict = {}
        plan = None
    else:
        rep = run_algorithm(args.algo, g, args.k, args.ell, _ell_list(g, args.ell), budget,
                            seed=args.seed, omega=as_rational(args.omega))
        cl, phases, plan = rep.cliques, rep.phases, rep.plan
    if args.stats:
        rows = [{"phase": k, "value": v} for k, v in sorted(phases.items())]
        _emit(_csv(rows, ["phase", "value"]), args.stats)
    if args.json:
        result = {"count": len(cl), "cliques": json.loads(cl.to_json(g)),
                  "plan": None if plan is None else _plain(plan.as_dict())}
        text = json.dumps(run_report("list", _inputs(args), started, result, phases)) + "\n"
    else:
        text = cl.to_lines(g)
    _emit(text, args.output)
    return EXIT_OK


def _check_algo(name: str) -> None:
    if name in ALGOS and name != "tuple":
        return
    if name.startswith("tuple:") and name[6:].isdigit():
        return
    raise UsageError(f"unknown --algo {name!r}; choose from auto, dense-sparse, kl, four-three, "
                     "six-a, six-b, tuple:S")


def _plain(d: dict) -> dict:
    return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in d.items()}


# ---------------------------------------------------------------------------
# exponents
# ---------------------------------------------------------------------------

def cmd_exponents(args) -> int:
    omega = as_rational(args.omega)
    if args.f_curve:
        _need(args, "C")
        C = as_rational(args.C)
        rows = []
        for i in range(args.imax + 1):
            try:
                rec = str(f_i_recurrence(C, i, omega))
            except ValueError:
                rec = ""
            rows.append({"C": str(C), "i": i, "f_i": str(f_i_bound(C, i, omega)),
                         "recurrence": rec, "index_for_C": f_index(C)})
        text = _csv(rows, ["C", "i", "f_i", "recurrence", "index_for_C"])
    elif args.listing:
        _need(args, "k", "ell")
        ex = listing_exponents(args.k, args.ell, omega)
        d = _plain(ex.as_dict())
        text = _csv([d], list(d))
    elif args.reduction:
        _need(args, "k", "ell")
        rows = []
        for s in range(1, args.k):
            if reduction_valid(args.k, args.ell, s):
                a, b, thr = reduction_exponent(args.k, args.ell, s, omega)
                rows.append({"s": s, "delta_exponent": str(a), "t_exponent": str(b),
                             "t_threshold": str(thr)})
        text = _csv(rows, ["s", "delta_exponent", "t_exponent", "t_threshold"])
    else:
        table = detection_table(args.kmax, args.ellmax, omega)
        fields = ["k"] + [f"ell={e}" for e in range(1, args.ellmax + 1)]
        rows = []
        for k in range(3, args.kmax + 1):
            row = {"k": k}
            for e in range(1, args.ellmax + 1):
                v = table.get((k, e))
                row[f"ell={e}"] = "" if v is None else str(v)
            rows.append(row)
        text = _csv(rows, fields)
    _emit(text, args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------

BENCH_FIELDS = ["n", "p", "extra", "k", "ell", "op", "algo", "seconds", "result", "phases"]


def cmd_bench(args) -> int:
    started = time.perf_counter()
    _check_kl(args.k, args.ell)
    for a in args.algo:
        _check_algo(a)
    rows = []
    for n in args.n:
        base = gen_random(n, args.p, args.seed)
        for extra in args.extra:
            g = pad_to_clique_count(base, args.k, extra)
            L = _ell_list(g, args.ell)
            for op in args.ops:
                algos = args.algo if op == "list" else ["-"]
                for algo in algos:
                    t0 = time.perf_counter()
                    phases: dict = {}
                    if op == "detect":
                        res = int(detect(g, args.k, L).found)
                    elif op == "count":
                        res = count_cliques(g, args.k, L, stats=phases)
                    else:
                        rep = run_algorithm(algo, g, args.k, args.ell, L, seed=args.seed)
                        res, phases = len(rep.cliques), rep.phases
                    rows.append({"n": n, "p": args.p, "extra": extra, "k": args.k, "ell": args.ell,
                                 "op": op, "algo": algo, "seconds": round(time.perf_counter() - t0, 6),
                                 "result": res, "phases": json.dumps(phases, sort_keys=True)})
    if args.json:
        text = json.dumps(run_report("bench", _inputs(args), started, {"rows": rows})) + "\n"
    else:
        text = _csv(rows, BENCH_FIELDS)
    _emit(text, args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# hardness
# ---------------------------------------------------------------------------

def cmd_hardness(args) -> int:
    started = time.perf_counter()
    wg = gen_exact_instance(args.n, args.k, args.seed, plant=args.plant, weight_range=args.weight_range)
    emit = None
    if args.emit_subgraphs:
        os.makedirs(args.emit_subgraphs, exist_ok=True)
        counter = [0]

        def emit(cid: int, H: Graph) -> None:
            counter[0] += 1
            path = os.path.join(args.emit_subgraphs, f"h_{counter[0]:05d}_c{cid}.el")
            with open(path, "w") as fh:
                save_edge_list(H, fh)

    stats = DecisionStats()
    gamma = as_rational(args.gamma)
    s = args.s or choose_s(args.n, args.k, args.ell, float(gamma))
    found = decide_exact_kclique(wg, args.k, args.ell, float(gamma), args.seed, s=s,
                                 repeats=args.repeats, stats=stats, emit=emit)
    result = {"found": found, "planted": list(wg.planted) if wg.planted else None,
              "witness": list(stats.found) if stats.found else None, "p": wg.p, "s": stats.s}
    phases = {"combinations": stats.combinations, "skipped": stats.skipped, "padded": stats.padded,
              "pad_unreachable": stats.pad_unreachable, "listed": stats.listed,
              "repeats": stats.repeats}
    if args.json:
        print(json.dumps(run_report("hardness", _inputs(args), started, result, phases)))
    else:
        print("yes" if found else "no")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, seed: bool = False) -> None:
    p.add_argument("--json", action="store_true", help="emit a JSON run report")
    p.add_argument("--threads", type=int, default=1, help="accepted for compatibility; runs are single-threaded")
    if seed:
        p.add_argument("--seed", type=int, required=True, help="64-bit seed (required)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kclique", description="k-clique detection, counting and listing")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph as an edge list")
    g.add_argument("kind", choices=["random", "planted", "kpartite"])
    g.add_argument("--n", type=int)
    g.add_argument("--p", type=float)
    g.add_argument("--k", type=int)
    g.add_argument("--parts", type=int)
    g.add_argument("--per-part", type=int)
    g.add_argument("-o", "--output", default=None)
    _common(g, seed=True)
    g.set_defaults(func=cmd_gen)

    for name, fn in (("detect", cmd_detect), ("count", cmd_count)):
        p = sub.add_parser(name, help=f"{name} k-cliques from the ell-clique list")
        p.add_argument("--input", required=True, help="edge-list file or -")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--ell", type=int, default=1)
        p.add_argument("--omega", default="2", help="matrix-multiplication exponent for planning")
        if name == "detect":
            p.add_argument("--witness", action="store_true", help="report a clique via the group-dropping search")
        _common(p)
        p.set_defaults(func=fn)

    lp = sub.add_parser("list", help="list k-cliques")
    lp.add_argument("--input", required=True)
    lp.add_argument("--k", type=int, required=True)
    lp.add_argument("--ell", type=int, default=1)
    lp.add_argument("--t", type=int, default=None, help="list at most t cliques")
    lp.add_argument("--algo", default="auto")
    lp.add_argument("--omega", default="2")
    lp.add_argument("--stats", default=None, help="write phase tallies as CSV to this path (- for stdout)")
    lp.add_argument("-o", "--output", default=None)
    _common(lp, seed=True)
    lp.set_defaults(func=cmd_list)

    ep = sub.add_parser("exponents", help="exponent tables as CSV")
    ep.add_argument("--omega", default="2")
    ep.add_argument("--kmax", type=int, default=12)
    ep.add_argument("--ellmax", type=int, default=5)
    mode = ep.add_mutually_exclusive_group()
    mode.add_argument("--listing", action="store_true")
    mode.add_argument("--f-curve", action="store_true")
    mode.add_argument("--reduction", action="store_true")
    ep.add_argument("--k", type=int)
    ep.add_argument("--ell", type=int)
    ep.add_argument("--C", default=None)
    ep.add_argument("--imax", type=int, default=4)
    ep.add_argument("-o", "--output", default=None)
    ep.set_defaults(func=cmd_exponents)

    bp = sub.add_parser("bench", help="time detect/count/list over a seeded grid")
    bp.add_argument("--n", type=int, nargs="+", required=True)
    bp.add_argument("--p", type=float, default=0.5)
    bp.add_argument("--k", type=int, default=4)
    bp.add_argument("--ell", type=int, default=1)
    bp.add_argument("--extra", type=int, nargs="+", default=[0],
                    help="k-cliques added by a disjoint complete k-partite block")
    bp.add_argument("--ops", nargs="+", default=["detect", "count", "list"],
                    choices=["detect", "count", "list"])
    bp.add_argument("--algo", nargs="+", default=["auto"])
    bp.add_argument("-o", "--output", default=None)
    _common(bp, seed=True)
    bp.set_defaults(func=cmd_bench)

    hp = sub.add_parser("hardness", help="run the exact-weight k-clique decider on a generated instance")
    hp.add_argument("--n", type=int, required=True)
    hp.add_argument("--k", type=int, required=True)
    hp.add_argument("--ell", type=int, default=1)
    hp.add_argument("--gamma", default="1")
    hp.add_argument("--s", type=int, default=None)
    hp.add_argument("--plant", action="store_true")
    hp.add_argument("--repeats", type=int, default=None)
    hp.add_argument("--weight-range", type=int, default=None)
    hp.add_argument("--emit-subgraphs", default=None, metavar="DIR")
    _common(hp, seed=True)
    hp.set_defaults(func=cmd_hardness)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"kclique: usage error: {exc}\n")
        return EXIT_USAGE
    except (OSError, UnicodeDecodeError) as exc:
        sys.stderr.write(f"kclique: I/O error: {exc}\n")
        return EXIT_IO
    except (GraphFormatError, ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"kclique: invalid input: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
