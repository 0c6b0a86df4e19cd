#!/usr/bin/env python3
"""
corpus.py
- Graph corpora for the verifiers: exhaustive labeled graphs with every weighting,
  a small multigraph family (parallel pairs, a loop), and seeded random graphs
- Weighted trees from Pruefer sequences, and the equal-CSF tree search
- The sweep driver: runs a check over its corpus in batches, optionally across
  worker processes, and stops cleanly after the current batch on SIGINT/SIGTERM

Environment (optional):
  CSF_JOBS         Worker processes for sweeps (default: 1)
  CSF_TREE_MAX_N   Largest tree size accepted by the tree search (default: 9)
"""

import logging
import random
import signal
from dataclasses import dataclass, replace
from itertools import combinations, permutations, product
from typing import Iterator

import networkx as nx
from joblib import Parallel, delayed
from tqdm import tqdm

import config
from csf_engine import EngineDisagreement, csf_delcon_value
from verifiers import EXPANSIONS, STANDALONE, VerificationReport, instance_descriptor
from weighted_graph import VertexWeightedGraph, canonical_key

log = logging.getLogger("corpus")

BATCH_SIZE = 64


@dataclass(frozen=True)
class CorpusSpec:
    """Which graphs a sweep visits. The same spec and seed always give the same stream."""

    max_n: int = 4
    max_weight: int = 1
    min_n: int = 1
    simple_only: bool = True
    connected_only: bool = False
    mode: str = "exhaustive"  # or "random"
    seed: int = 0
    count: int | None = None

    def describe(self) -> str:
        kind = "simple" if self.simple_only else "multi"
        extra = f", seed {self.seed}" if self.mode == "random" else ""
        cap = f", cap {self.count}" if self.count else ""
        return f"{self.mode} {kind} n={self.min_n}..{self.max_n} w<={self.max_weight}{extra}{cap}"


# ---------------- Generators ----------------

def _weightings(n: int, max_weight: int) -> Iterator[tuple[int, ...]]:
    return product(range(1, max_weight + 1), repeat=n)


def labeled_graphs(n: int, max_weight: int) -> Iterator[VertexWeightedGraph]:
    """All 2^C(n,2) labeled simple graphs on n vertices, each with every weighting."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        for ws in _weightings(n, max_weight):
            yield VertexWeightedGraph(dict(enumerate(ws)), edges)


def multigraph_family(max_n: int, max_weight: int) -> Iterator[VertexWeightedGraph]:
    """
    Non-simple graphs on up to 3 vertices: each pair joined 0-2 times, with or
    without a loop at vertex 0. Simple members are skipped; the exhaustive
    labeled corpus already has them.
    """
    for n in range(1, min(max_n, 3) + 1):
        pairs = list(combinations(range(n), 2))
        for mult in product(range(3), repeat=len(pairs)):
            base = [p for p, k in zip(pairs, mult) for _ in range(k)]
            for loop in (False, True):
                edges = base + ([(0, 0)] if loop else [])
                if not loop and all(k < 2 for k in mult):
                    continue
                for ws in _weightings(n, max_weight):
                    yield VertexWeightedGraph(dict(enumerate(ws)), edges)


def random_graphs(spec: CorpusSpec) -> Iterator[VertexWeightedGraph]:
    """Seeded random graphs, one per isomorphism class (within the canonical-key bound)."""
    rng = random.Random(spec.seed)
    wanted = spec.count or 100
    seen: set = set()
    attempts = 0
    while len(seen) < wanted and attempts < 50 * wanted:
        attempts += 1
        n = rng.randint(spec.min_n, spec.max_n)
        edges = [p for p in combinations(range(n), 2) if rng.random() < 0.5]
        if not spec.simple_only:
            edges += [p for p in combinations(range(n), 2) if rng.random() < 0.15]
            edges += [(v, v) for v in range(n) if rng.random() < 0.05]
        g = VertexWeightedGraph({v: rng.randint(1, spec.max_weight) for v in range(n)}, edges)
        key = canonical_key(g)
        if key is not None:
            if key in seen:
                continue
            seen.add(key)
        else:
            seen.add(attempts)
        yield g
    if len(seen) < wanted:
        log.warning("random corpus: only %d distinct graphs after %d attempts", len(seen), attempts)


def instances(spec: CorpusSpec) -> Iterator[VertexWeightedGraph]:
    if spec.mode == "random":
        stream = random_graphs(spec)
    elif spec.mode == "exhaustive":
        def exhaustive():
            for n in range(spec.min_n, spec.max_n + 1):
                yield from labeled_graphs(n, spec.max_weight)
            if not spec.simple_only:
                yield from multigraph_family(spec.max_n, spec.max_weight)
        stream = exhaustive()
    else:
        raise ValueError(f"unknown corpus mode {spec.mode!r}")
    emitted = 0
    for g in stream:
        if spec.connected_only and not g.is_connected():
            continue
        yield g
        emitted += 1
        if spec.count and spec.mode == "exhaustive" and emitted >= spec.count:
            return


# Corpora each check runs on when no override is given.
DEFAULT_CORPORA: dict[str, list[CorpusSpec]] = {
    "engines": [CorpusSpec(min_n=5, max_n=5), CorpusSpec(max_n=4, max_weight=3, simple_only=False)],
    "delcon": [CorpusSpec(max_n=4, max_weight=2, simple_only=False)],
    "uncontraction": [CorpusSpec(max_n=3, max_weight=3, simple_only=False)],
    "simple_contraction": [CorpusSpec(max_n=4, max_weight=2)],
    "multiplicativity": [CorpusSpec(max_n=3, max_weight=2, simple_only=False)],
    "involution": [CorpusSpec(max_n=4, max_weight=2, simple_only=False)],
    "p_positivity": [CorpusSpec(min_n=5, max_n=5), CorpusSpec(max_n=4, max_weight=3)],
    "cycle": [CorpusSpec(max_n=5), CorpusSpec(max_n=3, max_weight=2, simple_only=False)],
    "sink": [CorpusSpec(max_n=4, max_weight=2)],
    "stanley": [CorpusSpec(max_n=5)],
    "hook": [CorpusSpec(max_n=5, connected_only=True)],
    "acyclic": [CorpusSpec(max_n=5), CorpusSpec(max_n=3, max_weight=2, simple_only=False)],
    "epos": [CorpusSpec(max_n=4, max_weight=3)],
    "flip": [CorpusSpec(max_n=4, max_weight=2)],
    "qspec": [CorpusSpec(max_n=4, max_weight=2, simple_only=False)],
}

# Graphs a check does not apply to are left out of its sweep.
CHECK_FILTERS = {
    "stanley": lambda g: g.is_unweighted() and g.is_simple(),
    "hook": lambda g: g.is_unweighted() and g.is_simple(),
    "simple_contraction": lambda g: g.is_simple(),
}


def corpora_for(check: str, override: CorpusSpec | None = None) -> list[CorpusSpec]:
    if override is None:
        return DEFAULT_CORPORA[check]
    if check == "hook":
        override = replace(override, connected_only=True)
    return [override]


# ---------------- Signals ----------------
_stop = False


def _sig_handler(signum, frame):
    global _stop
    log.info("Signal %s received; will stop after the current batch.", signum)
    _stop = True


def install_signal_handlers() -> None:
    global _stop
    _stop = False
    signal.signal(signal.SIGINT, _sig_handler)
    signal.signal(signal.SIGTERM, _sig_handler)


def stop_requested() -> bool:
    return _stop


# ---------------- Runner ----------------

def run_instance(check: str, g: VertexWeightedGraph) -> list[dict]:
    """Run one check on one graph. Never raises: errors become failing reports."""
    try:
        return [r.to_json() for r in EXPANSIONS[check](g)]
    except EngineDisagreement as e:
        log.error("%s: %s", check, e)
        witness = {"error": str(e), **e.witness()}
    except Exception as e:
        log.exception("%s crashed on %r", check, g)
        witness = {"error": f"{type(e).__name__}: {e}"}
    return [VerificationReport(check, instance_descriptor(g), False, witness).to_json()]


def run_standalone(check: str) -> list[dict]:
    try:
        return [r.to_json() for r in STANDALONE[check]()]
    except Exception as e:
        log.exception("%s crashed", check)
        witness = {"error": f"{type(e).__name__}: {e}"}
        return [VerificationReport(check, instance_descriptor(None), False, witness).to_json()]


def _batches(items: list, size: int) -> Iterator[list]:
    for i in range(0, len(items), size):
        yield items[i:i + size]


def sweep(check: str, specs: list[CorpusSpec], jobs: int | None = None, progress: bool = True) -> tuple[list[VerificationReport], bool]:
    """
    Run `check` over every graph of every spec. Returns (reports sorted by
    (check, fingerprint, params), interrupted flag).
    """
    jobs = config.JOBS if jobs is None else jobs
    if check in STANDALONE:
        return [VerificationReport.from_json(r) for r in run_standalone(check)], False

    keep = CHECK_FILTERS.get(check, lambda g: True)
    graphs = [g for spec in specs for g in instances(spec) if keep(g)]
    log.info("%s: %d graphs (%s) | jobs: %d", check, len(graphs), "; ".join(s.describe() for s in specs), jobs)

    results: list[dict] = []
    interrupted = False
    pool = Parallel(n_jobs=jobs) if jobs > 1 else None
    bar = tqdm(total=len(graphs), desc=check, unit="graph", disable=not progress, leave=False)
    try:
        for batch in _batches(graphs, BATCH_SIZE):
            if _stop:
                interrupted = True
                break
            if pool is not None:
                for out in pool(delayed(run_instance)(check, g) for g in batch):
                    results.extend(out)
            else:
                for g in batch:
                    results.extend(run_instance(check, g))
            bar.update(len(batch))
    finally:
        bar.close()

    reports = sorted((VerificationReport.from_json(r) for r in results), key=lambda r: r.sort_key())
    failed = sum(1 for r in reports if not r.passed)
    if interrupted:
        log.warning("%s interrupted: %d reports so far", check, len(reports))
    log.info("%s: %d reports, %d failed", check, len(reports), failed)
    return reports, interrupted


def summarize(reports: list[VerificationReport]) -> dict:
    per: dict[str, dict[str, int]] = {}
    for r in reports:
        row = per.setdefault(r.check, {"passed": 0, "failed": 0})
        row["passed" if r.passed else "failed"] += 1
    return {
        "summary": dict(sorted(per.items())),
        "total": len(reports),
        "failed": sum(row["failed"] for row in per.values()),
    }


# ---------------- Trees ----------------

def tree_from_prufer(seq, weights) -> VertexWeightedGraph:
    """Labeled tree on len(weights) vertices from its Pruefer sequence."""
    weights = list(weights)
    n = len(weights)
    if n == 1:
        return VertexWeightedGraph({0: weights[0]})
    if len(seq) != n - 2:
        raise ValueError(f"a Pruefer sequence for {n} vertices has {n - 2} entries, got {len(seq)}")
    t = nx.from_prufer_sequence(list(seq)) if n > 2 else nx.path_graph(2)
    return VertexWeightedGraph(dict(enumerate(weights)), list(t.edges()))


def _weight_choices(n: int, max_weight: int, pool: tuple[int, ...] | None):
    if pool is not None:
        if len(pool) != n:
            raise ValueError(f"weight pool {pool} does not have {n} entries")
        return sorted(set(permutations(pool)))
    return list(_weightings(n, max_weight))


def weighted_trees(n: int, max_weight: int, pool: tuple[int, ...] | None = None, seed: int | None = None, count: int = 200) -> list[VertexWeightedGraph]:
    """
    Weighted trees on n vertices, one per isomorphism class. Exhaustive over
    Pruefer sequences and weightings (or permutations of `pool`); with a seed,
    a random sample of `count` labeled candidates instead.
    """
    if n < 1:
        raise ValueError("trees need at least one vertex")
    seqs = list(product(range(n), repeat=n - 2)) if n > 2 else [()]
    choices = _weight_choices(n, max_weight, pool)
    if seed is None:
        candidates = product(seqs, choices)
    else:
        rng = random.Random(seed)
        candidates = ((rng.choice(seqs), rng.choice(choices)) for _ in range(count))
    seen: set = set()
    out = []
    for seq, ws in candidates:
        t = tree_from_prufer(seq, ws)
        key = canonical_key(t)
        if key in seen:
            continue
        seen.add(key)
        out.append(t)
    return out


def _underlying(t: VertexWeightedGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(t.vertices)
    g.add_edges_from(t.edges)
    return g


def search_equal_trees(n: int, max_weight: int, pool: tuple[int, ...] | None = None, seed: int | None = None, count: int = 200) -> list[dict]:
    """
    Bucket weighted trees by the fingerprint of X, confirm every collision by
    exact equality, and say whether the two underlying unweighted trees are
    isomorphic. The fingerprint alone is never trusted.
    """
    if n > config.TREE_MAX_N:
        raise ValueError(f"tree search is limited to n <= {config.TREE_MAX_N} (CSF_TREE_MAX_N)")
    trees = weighted_trees(n, max_weight, pool, seed, count)
    log.info("tree search: %d weighted trees on %d vertices", len(trees), n)
    buckets: dict[str, list[tuple[VertexWeightedGraph, object]]] = {}
    for t in tqdm(trees, desc="trees", unit="tree", leave=False):
        x = csf_delcon_value(t)
        buckets.setdefault(x.fingerprint(), []).append((t, x))
    found = []
    for fp, members in sorted(buckets.items()):
        for (t1, x1), (t2, x2) in combinations(members, 2):
            if x1 != x2:
                log.warning("fingerprint collision without equality: %s", fp)
                continue
            same_shape = nx.is_isomorphic(_underlying(t1), _underlying(t2))
            found.append({
                "fingerprint": fp,
                "trees": [t1.to_json(), t2.to_json()],
                "confirmed_equal": True,
                "underlying": "same underlying tree" if same_shape else "non-isomorphic underlying trees",
            })
    flagged = sum(1 for f in found if f["underlying"] != "same underlying tree")
    log.info("tree search: %d equal pairs, %d with non-isomorphic underlying trees", len(found), flagged)
    return found
