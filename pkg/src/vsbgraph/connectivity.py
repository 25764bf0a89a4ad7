"""Connectivity predicates on directed graphs.

A digraph is *strongly biconnected* when it is strongly connected and
its underlying undirected graph has no articulation point.  It is
*k-vertex strongly biconnected* (k-vsb) when deleting any set of at most
k-1 vertices leaves a strongly biconnected graph; the empty set is
included, so k-vsb implies strong biconnectivity and the k levels form a
hierarchy.

Small-graph conventions (they arise in deletion residuals and are fixed
here explicitly): a single vertex is strongly biconnected; two vertices
are strongly biconnected iff both arcs between them are present.

Every negative verdict carries a witness that can be replayed
independently: an unreachable ordered pair, an articulation point, or a
deleted-vertex set that breaks strong biconnectivity.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from typing import AbstractSet, Callable, Iterable, Iterator

from .digraph import Digraph, UndirectedGraph
from .errors import TooFewVerticesError

UNREACHABLE_PAIR = "unreachable-pair"
ARTICULATION_POINT = "articulation-point"
VERTEX_CUT = "vertex-cut"


@dataclass(frozen=True)
class Witness:
    """Replayable certificate of a failed connectivity predicate."""

    kind: str
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == UNREACHABLE_PAIR:
            u, v = self.vertices
            return f"no directed path from {u} to {v}"
        if self.kind == ARTICULATION_POINT:
            return f"articulation point {self.vertices[0]}"
        if not self.vertices:
            return "graph itself is not strongly biconnected"
        cut = ", ".join(str(v) for v in self.vertices)
        return f"deleting {{{cut}}} breaks strong biconnectivity"


@dataclass(frozen=True)
class ConnectivityReport:
    """Boolean verdict plus a witness exactly when the verdict is false."""

    verdict: bool
    witness: Witness | None = None

    def __post_init__(self) -> None:
        if self.verdict == (self.witness is not None):
            raise ValueError("witness must be present iff verdict is false")

    def __bool__(self) -> bool:
        return self.verdict


def reachability_from(g: Digraph, v: int) -> set[int]:
    """Vertices reachable from v by directed paths, including v."""
    g._check_vertex(v)
    seen = {v}
    stack = [v]
    out = g._out
    while stack:
        x = stack.pop()
        for y in out[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def is_strongly_connected(g: Digraph) -> ConnectivityReport:
    """Every vertex reaches every other one by directed paths.

    Checked with one forward and one backward search from vertex 0; on
    failure the witness is an ordered pair (u, v) with no u-to-v path.
    """
    if g.n < 1:
        raise TooFewVerticesError("strong connectivity needs at least one vertex")
    if g.n == 1:
        return ConnectivityReport(True)
    for adj, backward in ((g._out, False), (g._in, True)):
        missing = _search_miss(g.n, adj, 0, frozenset())
        if missing is not None:
            pair = (missing, 0) if backward else (0, missing)
            return ConnectivityReport(False, Witness(UNREACHABLE_PAIR, pair))
    return ConnectivityReport(True)


def articulation_points(u: UndirectedGraph) -> set[int]:
    """Exact articulation-point set, per connected component."""
    return _articulation_vertices(
        u.n, lambda v: iter(u.adj[v]), range(u.n), frozenset()
    )


def is_strongly_biconnected(g: Digraph) -> ConnectivityReport:
    """Strongly connected with no articulation point in the undirected view."""
    if g.n < 1:
        raise TooFewVerticesError("strong biconnectivity needs at least one vertex")
    witness = _strong_biconnectivity_witness(g, frozenset())
    if witness is None:
        return ConnectivityReport(True)
    return ConnectivityReport(False, witness)


def is_k_vsb(g: Digraph, k: int) -> ConnectivityReport:
    """k-vertex strong biconnectivity for k in {1, 2, 3}.

    Tests every vertex subset of size at most k-1, in increasing size
    and ascending lexicographic order, so a negative verdict reports the
    first (hence minimal-size) failing subset as its witness.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    if g.n <= k:
        raise TooFewVerticesError(
            f"{k}-vertex strong biconnectivity needs more than {k} vertices"
        )
    for size in range(k):
        for subset in combinations(range(g.n), size):
            if _strong_biconnectivity_witness(g, subset) is not None:
                return ConnectivityReport(False, Witness(VERTEX_CUT, subset))
    return ConnectivityReport(True)


def _search_miss(
    n: int,
    adj: list[set[int]],
    root: int,
    blocked: AbstractSet[int] | tuple[int, ...],
) -> int | None:
    """First vertex not reached from root along adj, or None if all are."""
    seen = bytearray(n)
    seen[root] = 1
    stack = [root]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y] and y not in blocked:
                seen[y] = 1
                stack.append(y)
    for v in range(n):
        if not seen[v] and v not in blocked:
            return v
    return None


def _strong_biconnectivity_witness(
    g: Digraph, blocked: AbstractSet[int] | tuple[int, ...]
) -> Witness | None:
    """Strong-biconnectivity check of g with the blocked vertices ignored.

    Returns None when the residual graph is strongly biconnected,
    otherwise a witness in g's own vertex ids.
    """
    n = g.n
    out = g._out
    inn = g._in
    survivors = n - len(blocked)
    if survivors == 1:
        return None
    if survivors == 2:
        u, v = (w for w in range(n) if w not in blocked)
        if v not in out[u]:
            return Witness(UNREACHABLE_PAIR, (u, v))
        if u not in out[v]:
            return Witness(UNREACHABLE_PAIR, (v, u))
        return None
    root = next(w for w in range(n) if w not in blocked)
    for adj, backward in ((out, False), (inn, True)):
        missing = _search_miss(n, adj, root, blocked)
        if missing is not None:
            pair = (missing, root) if backward else (root, missing)
            return Witness(UNREACHABLE_PAIR, pair)
    cut_vertices = _articulation_vertices(
        n, lambda v: chain(out[v], inn[v]), (root,), blocked
    )
    if cut_vertices:
        return Witness(ARTICULATION_POINT, (min(cut_vertices),))
    return None


def _articulation_vertices(
    n: int,
    neighbors: Callable[[int], Iterator[int]],
    seeds: Iterable[int],
    blocked: AbstractSet[int] | tuple[int, ...],
) -> set[int]:
    """Articulation points via one lowpoint depth-first pass per component.

    ``neighbors`` may yield duplicates (e.g. antiparallel arcs presented
    as two entries); duplicates act as repeated back edges, which is
    harmless, and edges to the current parent are skipped entirely since
    edge multiplicity never affects vertex cuts.
    """
    disc = [0] * n
    low = [0] * n
    parent = [-1] * n
    result: set[int] = set()
    timer = 0
    for seed in seeds:
        if disc[seed] or seed in blocked:
            continue
        timer += 1
        disc[seed] = low[seed] = timer
        root_children = 0
        stack: list[tuple[int, Iterator[int]]] = [(seed, neighbors(seed))]
        while stack:
            x, nbrs = stack[-1]
            descended = False
            for y in nbrs:
                if y in blocked or y == parent[x]:
                    continue
                dy = disc[y]
                if dy:
                    if dy < low[x]:
                        low[x] = dy
                else:
                    parent[y] = x
                    timer += 1
                    disc[y] = low[y] = timer
                    stack.append((y, neighbors(y)))
                    descended = True
                    break
            if not descended:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[x] < low[p]:
                        low[p] = low[x]
                    if p == seed:
                        root_children += 1
                    elif low[x] >= disc[p]:
                        result.add(p)
        if root_children >= 2:
            result.add(seed)
    return result
