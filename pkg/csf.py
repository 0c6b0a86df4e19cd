#!/usr/bin/env python3
"""
csf.py
- Command-line front end for the chromatic symmetric function workbench
- JSON on stdout, logs on stderr; --pretty renders aligned tables for humans

Commands:
  compute <graph.json> [--engine all|stable|subsets|delcon] [--basis m|p|e|h|s] [--pretty]
  verify <check|all> [--n N] [--maxw W] [--seed S] [--count C] [--multigraphs | --simple-only] [--jobs J]
  search-trees --n N [--maxw W] [--weights 1,2,1,3,2] [--seed S] [--count C]
  convert <symfunc.json> --basis <b> [--pretty]
  replay <witness.json>
  witnesses [--summary]

Exit codes: 0 success / all pass, 1 verification failure, 2 usage or parse error.
"""

import sys
import json
import logging
import argparse
from dataclasses import replace

import config
from corpus import (
    CorpusSpec,
    DEFAULT_CORPORA,
    corpora_for,
    install_signal_handlers,
    search_equal_trees,
    stop_requested,
    summarize,
    sweep,
)
from csf_engine import ENGINES, EngineDisagreement, SubsetLimitError, compute
from partition_algebra import Basis, SymFunc, SymFuncError, convert
from verifiers import CHECKS, EXPANSIONS, VerificationReport, instance_descriptor, replay
from weighted_graph import GraphFormatError, load_graph
from witness_store import WitnessStore

log = logging.getLogger("csf")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _fail(msg: str, *args, code: int = EXIT_USAGE) -> int:
    log.error(msg, *args, exc_info=log.isEnabledFor(logging.DEBUG))
    return code


def print_table(f: SymFunc) -> None:
    """Aligned partition / coefficient table."""
    print(f"{f.basis.value}-basis, degree {f.degree}")
    print("=" * 30)
    rows = [(f"{f.basis.value}{lam!r}", str(c)) for lam, c in f.items()]
    if not rows:
        print("  0")
        return
    width = max(len(r[0]) for r in rows)
    for name, coeff in rows:
        print(f"  {name.ljust(width)}  {coeff.rjust(8)}")


def _emit(f: SymFunc, pretty: bool) -> None:
    if pretty:
        print_table(f)
    else:
        print(json.dumps(f.to_json()))


# ---------------- Commands ----------------

def cmd_compute(args) -> int:
    try:
        g, _ = load_graph(args.graph)
    except (GraphFormatError, OSError) as e:
        return _fail("Cannot read graph %s: %s", args.graph, e)
    try:
        result = compute(g, args.engine)
    except SubsetLimitError as e:
        return _fail("Size error: %s", e)
    except EngineDisagreement as e:
        path = WitnessStore().save(VerificationReport("engines", instance_descriptor(g), False, e.witness()))
        return _fail("%s (witness: %s)", e, path, code=EXIT_FAIL)
    log.info("X computed by %s engine (fingerprint %s)", result.provenance, result.fingerprint)
    _emit(convert(result.value, args.basis), args.pretty)
    return EXIT_OK


def _override(check: str, args) -> CorpusSpec | None:
    if (args.n is None and args.maxw is None and args.seed is None and args.count is None
            and not args.multigraphs and not args.simple_only):
        return None
    defaults = DEFAULT_CORPORA[check]
    simple_only = all(s.simple_only for s in defaults)
    if args.multigraphs:
        simple_only = False
    if args.simple_only:
        simple_only = True
    spec = replace(defaults[0], min_n=1, simple_only=simple_only)
    if args.n is not None:
        spec = replace(spec, max_n=args.n)
    if args.maxw is not None:
        spec = replace(spec, max_weight=args.maxw)
    if args.seed is not None:
        spec = replace(spec, mode="random", seed=args.seed)
    if args.count is not None:
        spec = replace(spec, count=args.count)
    return spec


def cmd_verify(args) -> int:
    if args.check != "all" and args.check not in CHECKS:
        return _fail("Unknown check '%s'. Choose from: all, %s", args.check, ", ".join(CHECKS))
    names = list(CHECKS) if args.check == "all" else [args.check]
    install_signal_handlers()
    reports: list[VerificationReport] = []
    interrupted = False
    for name in names:
        if stop_requested():
            interrupted = True
            break
        specs = corpora_for(name, _override(name, args)) if name in EXPANSIONS else []
        got, cut = sweep(name, specs, jobs=args.jobs, progress=not args.no_progress)
        reports.extend(got)
        if cut:
            interrupted = True
            break

    for r in reports:
        print(json.dumps(r.to_json(), sort_keys=True))
    summary = summarize(reports)
    if interrupted:
        summary["interrupted"] = True
    print(json.dumps(summary, sort_keys=True))

    paths = WitnessStore().save_failures(reports)
    if paths:
        log.warning("%d witnesses written under %s", len(paths), config.WITNESS_DIR)
    if interrupted:
        log.warning("Run interrupted; summary covers completed batches only.")
        return EXIT_FAIL
    return EXIT_OK if summary["failed"] == 0 else EXIT_FAIL


def _parse_weights(raw: str | None) -> tuple[int, ...] | None:
    if raw is None:
        return None
    return tuple(int(x) for x in raw.split(",") if x.strip())


def cmd_search_trees(args) -> int:
    try:
        pool = _parse_weights(args.weights)
        maxw = args.maxw if args.maxw is not None else 1
        found = search_equal_trees(args.n, maxw, pool, args.seed, args.count or 200)
    except ValueError as e:
        return _fail("%s", e)
    for pair in found:
        print(json.dumps(pair, sort_keys=True))
    flagged = sum(1 for p in found if p["underlying"] != "same underlying tree")
    print(json.dumps({"pairs": len(found), "non_isomorphic_underlying": flagged}, sort_keys=True))
    return EXIT_OK


def cmd_convert(args) -> int:
    try:
        with open(args.symfunc, "r") as f:
            value = SymFunc.from_json(json.load(f))
    except (OSError, json.JSONDecodeError, SymFuncError) as e:
        return _fail("Cannot read symmetric function %s: %s", args.symfunc, e)
    _emit(convert(value, args.basis), args.pretty)
    return EXIT_OK


def cmd_replay(args) -> int:
    store = WitnessStore()
    try:
        record = store.load(args.witness)
        report = replay(record)
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as e:
        return _fail("Cannot replay %s: %s", args.witness, e)
    print(json.dumps(report.to_json(), sort_keys=True))
    if report.passed:
        log.info("%s now passes on the recorded instance", report.check)
        return EXIT_OK
    return EXIT_FAIL


def cmd_witnesses(args) -> int:
    store = WitnessStore()
    if args.summary:
        summary = store.read_summary() or store.write_summary()
        print("📊 Witness Summary:")
        print("=" * 30)
        print(f"Total witnesses: {summary.get('total_witnesses', 0)}")
        for check, count in sorted(summary.get("checks", {}).items()):
            print(f"  {check}: {count}")
        date_range = summary.get("date_range", {})
        if date_range.get("oldest"):
            print(f"Date range: {date_range['oldest']} to {date_range['newest']}")
        return EXIT_OK

    listing = store.list_witnesses()
    if not listing:
        print(f"No witnesses found under {store.root}.")
        return EXIT_OK
    print("📁 Stored Witnesses:")
    print("=" * 50)
    for check, files in listing.items():
        print(f"🔎 {check} ({len(files)} files)")
        for p in files:
            print(f"   {p.name}")
    print(f"\nTotal: {sum(len(f) for f in listing.values())} witnesses")
    return EXIT_OK


# ---------------- Entry point ----------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="csf", description="Chromatic symmetric functions of vertex-weighted graphs")
    parser.add_argument("--log-level", default=None, help="Logging level (default: CSF_LOG_LEVEL or INFO)")
    sub = parser.add_subparsers(dest="command", required=True)
    bases = [b.value for b in Basis]

    p = sub.add_parser("compute", help="Compute X for a graph file")
    p.add_argument("graph")
    p.add_argument("--engine", default="delcon", choices=["all", *ENGINES])
    p.add_argument("--basis", default="p", choices=bases)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="Run a check (or all) over its corpus")
    p.add_argument("check")
    p.add_argument("--n", type=int, default=None, help="Largest vertex count")
    p.add_argument("--maxw", type=int, default=None, help="Largest vertex weight")
    p.add_argument("--seed", type=int, default=None, help="Random corpus with this seed")
    p.add_argument("--count", type=int, default=None, help="Instance cap")
    p.add_argument("--multigraphs", action="store_true", help="Add the multigraph family even where the default corpus is simple")
    p.add_argument("--simple-only", action="store_true", help="Leave out the multigraph family")
    p.add_argument("--jobs", type=int, default=None, help="Worker processes (default: CSF_JOBS)")
    p.add_argument("--no-progress", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-trees", help="Look for weighted trees with equal X")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--maxw", type=int, default=None)
    p.add_argument("--weights", default=None, help="Use permutations of this weight list, e.g. 1,2,1,3,2")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--count", type=int, default=None)
    p.set_defaults(func=cmd_search_trees)

    p = sub.add_parser("convert", help="Re-express a symmetric function JSON in another basis")
    p.add_argument("symfunc")
    p.add_argument("--basis", required=True, choices=bases)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("replay", help="Re-run the check recorded in a witness file")
    p.add_argument("witness")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("witnesses", help="List stored witnesses")
    p.add_argument("--summary", action="store_true")
    p.set_defaults(func=cmd_witnesses)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config.setup_logging(args.log_level)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
