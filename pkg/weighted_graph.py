#!/usr/bin/env python3
"""
weighted_graph.py
- Vertex-weighted multigraphs (loops and parallel edges kept exactly)
- Deletion, contraction, simple contraction and the reverse "uncontraction" family
- Orientations with acyclicity/sink queries, stable and connected partitions
- Brute-force canonical keys for memoization, and the JSON graph file format

Vertex ids are opaque ints. Edges are stored as a sorted tuple of (min, max)
pairs, one entry per occurrence, so an edge occurrence is simply its index
into `G.edges`. Orientations are tuples of (tail, head) aligned with that index.
"""

from __future__ import annotations

import json
import logging
from itertools import permutations, product
from typing import Iterable, Iterator, Mapping

import networkx as nx

import config
from partition_algebra import Partition, PartitionSizeError

log = logging.getLogger("weighted_graph")


class GraphError(ValueError):
    """Invalid graph, or an operation that does not apply to it."""


class EdgeNotFoundError(GraphError):
    pass


class NotSimpleError(GraphError):
    pass


class NotACycleError(GraphError):
    pass


class GraphFormatError(GraphError):
    pass


Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class VertexWeightedGraph:
    """Immutable multigraph with a positive integer weight on every vertex."""

    __slots__ = ("vertices", "weights", "edges", "_pos")

    def __init__(self, weight: Mapping[int, int], edges: Iterable[Edge] = ()):
        pos = {}
        for v, wv in weight.items():
            if not isinstance(v, int) or isinstance(v, bool):
                raise GraphError(f"vertex ids must be ints: {v!r}")
            if int(wv) < 1:
                raise GraphError(f"vertex {v} has weight {wv}; weights must be >= 1")
        self.vertices: tuple[int, ...] = tuple(sorted(weight))
        self.weights: tuple[int, ...] = tuple(int(weight[v]) for v in self.vertices)
        for i, v in enumerate(self.vertices):
            pos[v] = i
        self._pos = pos
        normed = []
        for u, v in edges:
            if u not in pos or v not in pos:
                raise GraphError(f"edge ({u}, {v}) uses an undeclared vertex")
            normed.append(_norm(u, v))
        self.edges: tuple[Edge, ...] = tuple(sorted(normed))

    # -- basic queries --
    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def d(self) -> int:
        return sum(self.weights)

    def weight(self, v: int) -> int:
        return self.weights[self._pos[v]]

    def weight_map(self) -> dict[int, int]:
        return dict(zip(self.vertices, self.weights))

    def total_weight(self, subset: Iterable[int]) -> int:
        return sum(self.weight(v) for v in subset)

    def sorted_weights(self) -> Partition:
        return Partition.from_parts(self.weights)

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def is_simple(self) -> bool:
        return not self.has_loop() and len(set(self.edges)) == len(self.edges)

    def is_unweighted(self) -> bool:
        return all(wv == 1 for wv in self.weights)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum((u == v) + (x == v) for u, x in self.edges)

    def edge_index(self, u: int, v: int, occurrence: int = 0) -> int:
        """Index of the given occurrence of edge uv."""
        target = _norm(u, v)
        seen = 0
        for i, e in enumerate(self.edges):
            if e == target:
                if seen == occurrence:
                    return i
                seen += 1
        raise EdgeNotFoundError(f"edge {target} (occurrence {occurrence}) not in graph")

    def _resolve(self, e) -> int:
        if isinstance(e, int) and not isinstance(e, bool):
            if not 0 <= e < len(self.edges):
                raise EdgeNotFoundError(f"edge index {e} out of range")
            return e
        u, v = e
        return self.edge_index(u, v)

    def induced(self, subset: Iterable[int]) -> "VertexWeightedGraph":
        keep = set(subset)
        return VertexWeightedGraph(
            {v: self.weight(v) for v in keep},
            [(u, v) for u, v in self.edges if u in keep and v in keep],
        )

    def relabel(self, mapping: Mapping[int, int]) -> "VertexWeightedGraph":
        return VertexWeightedGraph(
            {mapping[v]: wv for v, wv in zip(self.vertices, self.weights)},
            [(mapping[u], mapping[v]) for u, v in self.edges],
        )

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        for v, wv in zip(self.vertices, self.weights):
            g.add_node(v, weight=wv)
        g.add_edges_from(self.edges)
        return g

    # -- minors --
    def delete_edge(self, e) -> "VertexWeightedGraph":
        """G \\ e: drop one occurrence of e."""
        i = self._resolve(e)
        return VertexWeightedGraph(self.weight_map(), self.edges[:i] + self.edges[i + 1:])

    def delete_edges(self, indices: Iterable[int]) -> "VertexWeightedGraph":
        drop = set(indices)
        for i in drop:
            self._resolve(i)
        return VertexWeightedGraph(self.weight_map(), [e for i, e in enumerate(self.edges) if i not in drop])

    def add_edge(self, u: int, v: int) -> "VertexWeightedGraph":
        return VertexWeightedGraph(self.weight_map(), self.edges + (_norm(u, v),))

    def contract_with_map(self, e) -> tuple["VertexWeightedGraph", dict[int, int], int | None]:
        """
        G / e together with old-edge-index -> new-edge-index for surviving edges,
        and the id of the merged vertex (None when e is a loop).
        """
        i = self._resolve(e)
        v1, v2 = self.edges[i]
        if v1 == v2:
            remap = {j: (j if j < i else j - 1) for j in range(len(self.edges)) if j != i}
            return self.delete_edge(i), remap, None
        star = max(self.vertices) + 1
        weights = {v: wv for v, wv in zip(self.vertices, self.weights) if v not in (v1, v2)}
        weights[star] = self.weight(v1) + self.weight(v2)
        moved = []
        for j, (a, b) in enumerate(self.edges):
            if j == i:
                continue
            a = star if a in (v1, v2) else a
            b = star if b in (v1, v2) else b
            moved.append((_norm(a, b), j))
        moved.sort()
        remap = {j: k for k, (_, j) in enumerate(moved)}
        return VertexWeightedGraph(weights, [pair for pair, _ in moved]), remap, star

    def contract_edge(self, e) -> "VertexWeightedGraph":
        """G / e with w/e: endpoints merge into a fresh vertex carrying both weights."""
        return self.contract_with_map(e)[0]

    def simple_contract(self, e) -> "VertexWeightedGraph":
        """Contract, then drop loops and collapse parallel edges. Simple graphs only."""
        if not self.is_simple():
            raise NotSimpleError("simple contraction is defined on simple graphs only")
        g = self.contract_edge(e)
        return VertexWeightedGraph(g.weight_map(), sorted({(u, v) for u, v in g.edges if u != v}))

    # -- equality / serialization --
    def _key(self):
        return (self.vertices, self.weights, self.edges)

    def __eq__(self, other):
        if not isinstance(other, VertexWeightedGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self) -> str:
        ws = ",".join(f"{v}:{wv}" for v, wv in zip(self.vertices, self.weights))
        es = ",".join(f"{u}-{v}" for u, v in self.edges)
        return f"Graph(w=[{ws}], E=[{es}])"

    def to_json(self, orientation: "Orientation | None" = None) -> dict:
        out = {
            "vertices": [{"id": v, "weight": wv} for v, wv in zip(self.vertices, self.weights)],
            "edges": [[u, v] for u, v in self.edges],
        }
        if orientation is not None:
            out["orientation"] = [[t, h] for t, h in orientation.arcs]
        return out


def graph_from_json(obj: Mapping) -> tuple[VertexWeightedGraph, "Orientation | None"]:
    """Parse the graph file format; the optional orientation list is parallel to `edges`."""
    try:
        weights = {}
        for item in obj["vertices"]:
            vid = int(item["id"])
            if vid in weights:
                raise GraphFormatError(f"duplicate vertex id {vid}")
            weights[vid] = int(item.get("weight", 1))
        raw_edges = [(int(u), int(v)) for u, v in obj.get("edges", [])]
        raw_arcs = obj.get("orientation")
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, GraphFormatError):
            raise
        raise GraphFormatError(f"malformed graph JSON: {e}") from None
    try:
        graph = VertexWeightedGraph(weights, raw_edges)
    except GraphError as e:
        raise GraphFormatError(str(e)) from None
    if raw_arcs is None:
        return graph, None
    if len(raw_arcs) != len(raw_edges):
        raise GraphFormatError("orientation must have one entry per edge")
    paired = []
    for (u, v), arc in zip(raw_edges, raw_arcs):
        t, h = int(arc[0]), int(arc[1])
        if _norm(t, h) != _norm(u, v):
            raise GraphFormatError(f"orientation {arc} does not match edge {[u, v]}")
        paired.append((_norm(u, v), (t, h)))
    paired.sort()
    return graph, Orientation(graph, [arc for _, arc in paired])


def load_graph(path) -> tuple[VertexWeightedGraph, "Orientation | None"]:
    try:
        with open(path, "r") as f:
            obj = json.load(f)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"{path}: not valid JSON ({e})") from None
    return graph_from_json(obj)


# ---------------- Constructors ----------------

def edgeless_graph(weights: Iterable[int]) -> VertexWeightedGraph:
    """The complement of K^lambda: no edges, weights as given."""
    return VertexWeightedGraph(dict(enumerate(weights)))


def complete_graph(weights: Iterable[int]) -> VertexWeightedGraph:
    """K^lambda: a clique with the given vertex weights."""
    weights = list(weights)
    n = len(weights)
    return VertexWeightedGraph(dict(enumerate(weights)), [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(weights: Iterable[int]) -> VertexWeightedGraph:
    weights = list(weights)
    return VertexWeightedGraph(dict(enumerate(weights)), [(i, i + 1) for i in range(len(weights) - 1)])


def cycle_graph(weights: Iterable[int]) -> VertexWeightedGraph:
    weights = list(weights)
    n = len(weights)
    if n == 1:
        edges = [(0, 0)]
    else:
        edges = [(i, (i + 1) % n) for i in range(n)]
    return VertexWeightedGraph(dict(enumerate(weights)), edges)


def disjoint_union(g: VertexWeightedGraph, h: VertexWeightedGraph) -> VertexWeightedGraph:
    shift = (max(g.vertices) + 1 if g.vertices else 0) - (min(h.vertices) if h.vertices else 0)
    weights = g.weight_map()
    weights.update({v + shift: wv for v, wv in zip(h.vertices, h.weights)})
    return VertexWeightedGraph(weights, list(g.edges) + [(u + shift, v + shift) for u, v in h.edges])


# ---------------- Subset partitions ----------------

def lambda_of_subset(g: VertexWeightedGraph, subset: Iterable[int]) -> Partition:
    """Component weights of the spanning subgraph (V, S), S given as edge indices."""
    components = nx.utils.UnionFind(range(g.n))
    for i in subset:
        u, v = g.edges[i]
        components.union(g._pos[u], g._pos[v])
    totals: dict[int, int] = {}
    for idx, wv in enumerate(g.weights):
        r = components[idx]
        totals[r] = totals.get(r, 0) + wv
    return Partition.from_parts(totals.values())


def stable_partitions(g: VertexWeightedGraph, lam: Iterable[int] | None = None) -> Iterator[tuple[frozenset, ...]]:
    """
    Partitions of V into stable blocks, optionally only those whose block
    weights form `lam`. Blocks are built vertex by vertex.
    """
    target = Partition(lam) if lam is not None else None
    if target is not None and target.size() != g.d:
        raise PartitionSizeError(f"|lambda| = {target.size()} but total weight is {g.d}")
    if g.has_loop():
        return
    adj = g.adjacency()
    order = g.vertices
    limit_blocks = target.length() if target is not None else g.n
    limit_weight = target[0] if target else g.d

    blocks: list[list[int]] = []
    block_weight: list[int] = []

    def place(k: int):
        if k == len(order):
            if target is None or Partition.from_parts(block_weight) == target:
                yield tuple(frozenset(b) for b in blocks)
            return
        v = order[k]
        wv = g.weight(v)
        for b, members in enumerate(blocks):
            if block_weight[b] + wv > limit_weight or adj[v].intersection(members):
                continue
            members.append(v)
            block_weight[b] += wv
            yield from place(k + 1)
            members.pop()
            block_weight[b] -= wv
        if len(blocks) < limit_blocks and wv <= limit_weight:
            blocks.append([v])
            block_weight.append(wv)
            yield from place(k + 1)
            blocks.pop()
            block_weight.pop()

    yield from place(0)


def count_stable_partitions(g: VertexWeightedGraph, lam: Iterable[int]) -> int:
    return sum(1 for _ in stable_partitions(g, lam))


def stable_partition_types(g: VertexWeightedGraph) -> dict[Partition, int]:
    """|St_lambda(G, w)| for every lambda that occurs, from a single enumeration."""
    counts: dict[Partition, int] = {}
    for blocks in stable_partitions(g):
        key = Partition.from_parts(g.total_weight(b) for b in blocks)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _connected_subsets(g: VertexWeightedGraph) -> list[frozenset]:
    base = nx.Graph()
    base.add_nodes_from(g.vertices)
    base.add_edges_from((u, v) for u, v in g.edges if u != v)
    found = []
    verts = g.vertices
    for mask in range(1, 1 << g.n):
        members = [verts[i] for i in range(g.n) if mask >> i & 1]
        if nx.is_connected(base.subgraph(members)):
            found.append(frozenset(members))
    return found


def connected_partition_blocks(g: VertexWeightedGraph) -> Iterator[tuple[frozenset, ...]]:
    """Every partition of V whose blocks each induce a connected subgraph."""
    if not g.vertices:
        yield ()
        return
    by_min: dict[int, list[frozenset]] = {}
    for s in _connected_subsets(g):
        by_min.setdefault(min(s), []).append(s)

    def extend(remaining: frozenset, chosen: tuple):
        if not remaining:
            yield chosen
            return
        first = min(remaining)
        for block in by_min.get(first, []):
            if block <= remaining:
                yield from extend(remaining - block, chosen + (block,))

    yield from extend(frozenset(g.vertices), ())


def connected_partitions(g: VertexWeightedGraph) -> set[Partition]:
    """Types (block-weight partitions) of all connected partitions."""
    return {Partition.from_parts(g.total_weight(b) for b in blocks) for blocks in connected_partition_blocks(g)}


def is_refinement(mu: Iterable[int], lam: Iterable[int]) -> bool:
    """Can the parts of mu be grouped into blocks summing to the parts of lam?"""
    mu, lam = Partition(mu), Partition(lam)
    if mu.size() != lam.size():
        raise PartitionSizeError(f"refinement needs equal sizes: {mu} vs {lam}")
    room = list(lam)

    def fit(k: int) -> bool:
        if k == len(mu):
            return True
        tried = set()
        for b in range(len(room)):
            if room[b] >= mu[k] and room[b] not in tried:
                tried.add(room[b])
                room[b] -= mu[k]
                ok = fit(k + 1)
                room[b] += mu[k]
                if ok:
                    return True
        return False

    return fit(0)


# ---------------- Orientations ----------------

class Orientation:
    """(tail, head) for every edge occurrence of `graph`, aligned with graph.edges."""

    __slots__ = ("graph", "arcs")

    def __init__(self, graph: VertexWeightedGraph, arcs: Iterable[tuple[int, int]]):
        arcs = tuple((int(t), int(h)) for t, h in arcs)
        if len(arcs) != len(graph.edges):
            raise GraphError("orientation must orient every edge occurrence exactly once")
        for (t, h), e in zip(arcs, graph.edges):
            if _norm(t, h) != e:
                raise GraphError(f"arc {t}->{h} does not orient edge {e}")
        self.graph = graph
        self.arcs = arcs

    def is_acyclic(self) -> bool:
        """Kahn's algorithm; loops and opposite parallel arcs are directed cycles."""
        indeg = {v: 0 for v in self.graph.vertices}
        out: dict[int, list[int]] = {v: [] for v in self.graph.vertices}
        for t, h in self.arcs:
            if t == h:
                return False
            out[t].append(h)
            indeg[h] += 1
        ready = [v for v, k in indeg.items() if k == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for h in out[v]:
                indeg[h] -= 1
                if indeg[h] == 0:
                    ready.append(h)
        return seen == self.graph.n

    def sinks(self) -> frozenset[int]:
        tails = {t for t, _ in self.arcs}
        return frozenset(v for v in self.graph.vertices if v not in tails)

    def flip(self, e) -> "Orientation":
        i = self.graph._resolve(e)
        t, h = self.arcs[i]
        return Orientation(self.graph, self.arcs[:i] + ((h, t),) + self.arcs[i + 1:])

    def delete_edge(self, e) -> "Orientation":
        i = self.graph._resolve(e)
        return Orientation(self.graph.delete_edge(i), self.arcs[:i] + self.arcs[i + 1:])

    def contract(self, e) -> "Orientation":
        """
        Orientation of G/e: untouched edges keep their arcs, edges at v1/v2 keep
        their head/tail roles with v* substituted, other v1v2 edges become v*->v*.
        """
        i = self.graph._resolve(e)
        g2, remap, star = self.graph.contract_with_map(i)
        v1, v2 = self.graph.edges[i]
        arcs: list[tuple[int, int] | None] = [None] * len(g2.edges)
        for j, (t, h) in enumerate(self.arcs):
            if j == i:
                continue
            if star is not None:
                t = star if t in (v1, v2) else t
                h = star if h in (v1, v2) else h
            arcs[remap[j]] = (t, h)
        return Orientation(g2, arcs)

    def ascents(self, coloring: Mapping[int, int]) -> int:
        return sum(1 for t, h in self.arcs if coloring[t] < coloring[h])

    def __eq__(self, other):
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.graph == other.graph and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.graph, self.arcs))

    def __repr__(self) -> str:
        return "Orientation(" + ",".join(f"{t}->{h}" for t, h in self.arcs) + ")"


def all_orientations(g: VertexWeightedGraph) -> Iterator[Orientation]:
    choices = [((u, v), (v, u)) if u != v else ((u, v),) for u, v in g.edges]
    for arcs in product(*choices):
        yield Orientation(g, arcs)


def acyclic_orientations(g: VertexWeightedGraph) -> Iterator[Orientation]:
    """Every acyclic orientation once; none at all if G has a loop."""
    if g.has_loop():
        return
    for o in all_orientations(g):
        if o.is_acyclic():
            yield o


def count_acyclic_orientations(g: VertexWeightedGraph) -> int:
    return sum(1 for _ in acyclic_orientations(g))


def contract_orientation(gamma: Orientation, e) -> Orientation:
    return gamma.contract(e)


# ---------------- Cycles ----------------

def simple_cycles(g: VertexWeightedGraph) -> list[tuple[int, ...]]:
    """
    Every cycle of G as a tuple of edge indices in traversal order, including
    loops (length 1) and pairs of parallel edges (length 2).
    """
    found: dict[frozenset, tuple[int, ...]] = {}
    incident: dict[int, list[tuple[int, int]]] = {v: [] for v in g.vertices}
    for i, (u, v) in enumerate(g.edges):
        if u == v:
            found[frozenset((i,))] = (i,)
            continue
        incident[u].append((i, v))
        incident[v].append((i, u))

    for start in g.vertices:
        path_edges: list[int] = []
        on_path = {start}

        def walk(v: int):
            for i, x in incident[v]:
                if path_edges and i == path_edges[-1]:
                    continue
                if x == start and path_edges:
                    cyc = tuple(path_edges + [i])
                    key = frozenset(cyc)
                    if len(key) == len(cyc) and key not in found:
                        found[key] = cyc
                elif x > start and x not in on_path:
                    on_path.add(x)
                    path_edges.append(i)
                    walk(x)
                    path_edges.pop()
                    on_path.discard(x)

        walk(start)
    return sorted(found.values(), key=lambda c: (len(c), sorted(c)))


def check_cycle(g: VertexWeightedGraph, cycle: Iterable[int]) -> tuple[int, ...]:
    """Validate that the edge indices form a single cycle; raise NotACycleError otherwise."""
    cycle = tuple(cycle)
    if not cycle or len(set(cycle)) != len(cycle):
        raise NotACycleError(f"not a cycle: {cycle}")
    for i in cycle:
        g._resolve(i)
    if len(cycle) == 1:
        u, v = g.edges[cycle[0]]
        if u != v:
            raise NotACycleError(f"single edge {g.edges[cycle[0]]} is not a loop")
        return cycle
    deg: dict[int, int] = {}
    sub = nx.MultiGraph()
    for i in cycle:
        u, v = g.edges[i]
        if u == v:
            raise NotACycleError("a loop cannot be part of a longer cycle")
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        sub.add_edge(u, v)
    if any(k != 2 for k in deg.values()) or not nx.is_connected(sub):
        raise NotACycleError(f"edges {cycle} do not form a cycle")
    return cycle


# ---------------- Uncontraction ----------------

def uncontractions(g: VertexWeightedGraph, v: int) -> Iterator[tuple[VertexWeightedGraph, int]]:
    """
    Every (H, e) with H/e isomorphic to g where e's endpoints merge into v:
    all splits of w(v) into two positive weights and all ways of attaching
    v's edges to the two new vertices. Duplicates up to isomorphism are skipped
    while the graph is within the canonical-key bound.
    """
    wv = g.weight(v)
    if wv < 2:
        return
    a = max(g.vertices) + 1
    b = a + 1
    base = {x: wx for x, wx in g.weight_map().items() if x != v}
    kept = [(x, y) for x, y in g.edges if v not in (x, y)]
    incident = [(x, y) for x, y in g.edges if v in (x, y)]
    options = []
    for x, y in incident:
        if x == y:
            options.append([(a, a), (b, b), (a, b)])
        else:
            other = y if x == v else x
            options.append([(a, other), (b, other)])
    seen: set = set()
    for w1 in range(1, wv):
        for attach in product(*options):
            weights = dict(base)
            weights[a], weights[b] = w1, wv - w1
            h = VertexWeightedGraph(weights, kept + list(attach) + [(a, b)])
            key = canonical_key(h)
            if key is not None:
                if key in seen:
                    continue
                seen.add(key)
            yield h, h.edge_index(a, b)


# ---------------- Canonical keys ----------------

def _encode(g: VertexWeightedGraph, order: tuple[int, ...]) -> tuple:
    pos = {v: i for i, v in enumerate(order)}
    return (
        tuple(g.weight(v) for v in order),
        tuple(sorted(_norm(pos[u], pos[v]) for u, v in g.edges)),
    )


def canonical_key(g: VertexWeightedGraph, bound: int | None = None) -> bytes | None:
    """
    Isomorphism-invariant key: the smallest encoding over all vertex orders that
    respect (weight, loop count, degree) classes. None above the vertex bound.
    """
    bound = config.MEMO_BOUND if bound is None else bound
    if g.n > bound:
        log.debug("canonical_key: %d vertices exceeds bound %d (uncached)", g.n, bound)
        return None
    loops = {v: 0 for v in g.vertices}
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
    base = {v: (g.weight(v), loops[v], g.degree(v)) for v in g.vertices}
    nbrs: dict[int, list] = {v: [] for v in g.vertices}
    for u, v in g.edges:
        if u != v:
            nbrs[u].append(base[v])
            nbrs[v].append(base[u])
    # one refinement round: a vertex's class also records its neighbours' classes
    inv = {v: (base[v], tuple(sorted(nbrs[v]))) for v in g.vertices}
    classes: dict[tuple, list[int]] = {}
    for v in g.vertices:
        classes.setdefault(inv[v], []).append(v)
    groups = [classes[k] for k in sorted(classes)]
    best = None
    for choice in product(*(permutations(grp) for grp in groups)):
        order = tuple(v for grp in choice for v in grp)
        enc = _encode(g, order)
        if best is None or enc < best:
            best = enc
    return json.dumps([list(best[0]), [list(e) for e in best[1]]], separators=(",", ":")).encode()


def is_isomorphic(g: VertexWeightedGraph, h: VertexWeightedGraph) -> bool:
    """Weighted multigraph isomorphism via canonical keys, with a networkx fallback above the bound."""
    kg, kh = canonical_key(g), canonical_key(h)
    if kg is not None and kh is not None:
        return kg == kh
    match = nx.algorithms.isomorphism.categorical_node_match("weight", None)
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx(), node_match=match)
