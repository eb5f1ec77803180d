"""Command-line front end.

Exit codes: 0 success, 1 verification violations, 2 usage or validation
errors, 3 resource caps (enumeration cap, truncated search).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import engine as E
from . import formats as F
from . import problems as P
from . import reductions as R
from . import verify as V
from .errors import CapExceededError, PlsLabError

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

R6_ORACLE_MATCHING = 8


class UsageError(Exception):
    pass


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON") from exc


def _parse_value(text: str):
    if text in ("true", "false"):
        return text == "true"
    try:
        return int(text)
    except ValueError:
        return text


def _stage_options(items) -> dict:
    out: dict = {}
    for item in items or []:
        key, eq, value = item.partition("=")
        rid, dot, name = key.partition(".")
        if not eq or not dot:
            raise UsageError(f"--set expects rid.name=value, got {item!r}")
        out.setdefault(rid, {})[name] = _parse_value(value)
    return out


# -- commands ----------------------------------------------------------------


def cmd_generate(args) -> int:
    kind = P.ProblemKind.parse(args.kind, args.k)
    inst = V.random_instance(kind, args.n, (args.weight_min, args.weight_max), args.seed)
    _emit(F.dumps(F.instance_to_json(kind, inst)), args.out)
    return EXIT_OK


def cmd_reduce(args) -> int:
    kind, inst = F.instance_from_json(_read_json(args.input))
    path = [p.strip() for p in args.path.split(",") if p.strip()]
    target, cert = R.chain_reduce(kind, inst, path, _stage_options(args.set))
    _emit(F.dumps(F.instance_to_json(cert.kind_to, target)), args.out)
    if args.cert_out:
        _emit(F.dumps(F.cert_to_json(cert)), args.cert_out)
    return EXIT_OK


def cmd_solve(args) -> int:
    kind, inst = F.instance_from_json(_read_json(args.input))
    problems = P.validate_instance(kind, inst)
    if problems:
        raise UsageError("invalid instance: " + "; ".join(problems))
    if args.start == "file":
        if not args.start_file:
            raise UsageError("--start file needs --start-file")
        start = F.solution_from_json(_read_json(args.start_file), kind, P.size_of(kind, inst))
    else:
        start = E.initial_solution(kind, inst)
    trace = E.run_local_search(kind, inst, start, E.PivotRule(args.pivot), args.max_iters)
    if args.trace_out:
        _emit(F.dumps(E.trace_to_json(kind, inst, trace)), args.trace_out)
    sys.stdout.write(f"cost: {F.rat_str(P.cost(kind, inst, trace.final))}\n")
    sys.stdout.write(f"iterations: {trace.iterations}\n")
    sys.stdout.write("solution: " + "".join(str(x) if kind.arity <= 10 else f"{x}," for x in P.labels(trace.final)) + "\n")
    if trace.truncated:
        sys.stderr.write(f"search truncated after {args.max_iters} iterations\n")
        return EXIT_CAP
    return EXIT_OK


def cmd_map_back(args) -> int:
    cert = F.cert_from_json(_read_json(args.cert))
    sol = F.solution_from_json(_read_json(args.solution), cert.kind_to, P.size_of(cert.kind_to, cert.target))
    if not P.is_feasible(cert.kind_to, cert.target, sol):
        raise UsageError("solution is infeasible for the certificate's target")
    src = R.map_solution(cert, sol)
    _emit(F.dumps(F.solution_to_json(cert.kind_from, src)), args.out)
    return EXIT_OK


def cmd_transition_graph(args) -> int:
    kind, inst = F.instance_from_json(_read_json(args.input))
    tg = E.build_transition_graph(kind, inst, args.cap)
    text = tg.to_dot() if args.format == "dot" else F.dumps(tg.to_json())
    _emit(text, args.out)
    return EXIT_OK


def _run_preservation(rids, n, trials, seed, corrupted):
    out = []
    for rid in rids:
        opts = {"matching_size": R6_ORACLE_MATCHING} if rid == "r6" else {}
        size = n if rid != "r6" else 3
        for t in range(trials):
            kind, src = V.corpus_source(rid, _fit_size(rid, size), seed + t)
            rep = V.check_preservation(rid, src, kind=kind, corrupted=corrupted, **opts)
            doc = rep.to_json()
            doc["suite"] = "preservation"
            if rid == "r6":
                doc["mode"] = f"oracle (matching size {R6_ORACLE_MATCHING})"
            out.append(doc)
    return out


def _fit_size(rid: str, n: int) -> int:
    kind = R.source_kind(rid)
    if (kind.is_odd or rid in ("r9", "r10")) and n % 2 == 0:
        return n - 1
    return n


def _run_tightness(rids, n, trials, seed):
    out = []
    for rid in rids:
        if rid in ("r1", "r2", "r6"):
            continue
        for t in range(trials):
            kind, src = V.corpus_source(rid, _fit_size(rid, n), seed + t)
            doc = V.check_tightness(rid, src, kind=kind).to_json()
            doc["suite"] = "tightness"
            out.append(doc)
    return out


def _run_identities(rids, n, trials, seed):
    out = []
    for rid in rids:
        if rid not in V.IDENTITY_CHECKS:
            continue
        for t in range(trials):
            kind = V.IDENTITY_CHECKS[rid][0]
            inst, fn = V.identity_source(rid, _fit_size(rid, n) if kind.is_odd else n, seed + t)
            bad = fn(inst)
            out.append({"suite": "identities", "reduction": rid,
                        "digest": F.digest(F.instance_to_json(kind, inst)), "ok": not bad,
                        "violations": len(bad)})
    return out


def _run_distinct(n, trials, seed):
    out = []
    for t in range(trials):
        g = V.random_instance(P.MAX_CUT_DEG5, n, (1, 10), seed + t)
        h, _ = R.r1_distinct(g)
        ok, witness = V.check_distinct_costs(h)
        out.append({"suite": "distinct", "reduction": "r1",
                    "digest": F.digest(F.instance_to_json(P.MAX_CUT_DEG5, g)), "ok": ok,
                    "violations": 0 if ok else 1})
    return out


def _run_types(n, trials, seed):
    out = []
    for t in range(trials):
        g = V.random_degree4_graph(n, seed + t)
        typed, bad = V.check_vertex_types(g)
        out.append({"suite": "types", "reduction": "-", "digest": F.digest(F.instance_to_json(P.MAX_CUT, g)),
                    "ok": not bad, "typed_vertices": typed, "violations": len(bad)})
    return out


def cmd_verify(args) -> int:
    rids = [args.reduction] if args.reduction else R.RIDS
    for rid in rids:
        if rid not in R.ACCEPTS:
            raise UsageError(f"unknown reduction id {rid!r}")
    suites = V.SUITES if args.suite == "all" else (args.suite,)
    results = []
    for suite in suites:
        if suite == "preservation":
            results += _run_preservation(rids, args.n, args.trials, args.seed, args.corrupt)
        elif suite == "tightness":
            results += _run_tightness(rids, args.n, args.trials, args.seed)
        elif suite == "identities":
            results += _run_identities(rids, args.n, args.trials, args.seed)
        elif suite == "distinct":
            results += _run_distinct(args.n, args.trials, args.seed)
        elif suite == "types":
            results += _run_types(min(args.n, 8), args.trials, args.seed)
    results.sort(key=lambda r: (r["suite"], r["reduction"], r["digest"]))
    failed = [r for r in results if not r["ok"]]
    report = {"suite": args.suite, "n": args.n, "trials": args.trials, "seed": args.seed,
              "checked": len(results), "failed": len(failed), "results": results}
    if args.report_out:
        _emit(F.dumps(report), args.report_out)
    sys.stdout.write(f"checked {len(results)} instance(s), {len(failed)} with violations\n")
    return EXIT_VIOLATION if failed else EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plslab", description="Exact Flip local search and PLS reductions.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a seeded random instance")
    g.add_argument("--kind", required=True, choices=[t.value for t in P.Tag])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, default=2, help="cluster count for kmeans")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--weight-min", type=int, default=1)
    g.add_argument("--weight-max", type=int, default=10)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("reduce", help="apply a chain of reductions")
    r.add_argument("--in", dest="input", required=True)
    r.add_argument("--path", required=True, help="comma-separated reduction ids, e.g. r1,r2")
    r.add_argument("--set", action="append", metavar="RID.NAME=VALUE", help="stage option, e.g. r6.matching_size=8")
    r.add_argument("--out")
    r.add_argument("--cert-out")
    r.set_defaults(func=cmd_reduce)

    s = sub.add_parser("solve", help="run Flip local search")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--start", choices=["standard", "file"], default="standard")
    s.add_argument("--start-file")
    s.add_argument("--pivot", choices=["first", "best"], default="first")
    s.add_argument("--max-iters", type=int)
    s.add_argument("--trace-out")
    s.set_defaults(func=cmd_solve)

    m = sub.add_parser("map-back", help="map a target solution through a certificate")
    m.add_argument("--cert", required=True)
    m.add_argument("--solution", required=True)
    m.add_argument("--out")
    m.set_defaults(func=cmd_map_back)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=list(V.SUITES) + ["all"], default="all")
    v.add_argument("--reduction")
    v.add_argument("--n", type=int, default=7)
    v.add_argument("--trials", type=int, default=10)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--report-out")
    v.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("transition-graph", help="export the transition graph")
    t.add_argument("--in", dest="input", required=True)
    t.add_argument("--format", choices=["dot", "json"], default="dot")
    t.add_argument("--cap", type=int)
    t.add_argument("--out")
    t.set_defaults(func=cmd_transition_graph)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except (UsageError, PlsLabError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
