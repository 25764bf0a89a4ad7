"""Directed-graph value type with deletion-friendly edge bookkeeping.

Vertices are the dense integers ``0..n-1``.  Edges form an ordered
sequence; insertion order is significant (the greedy extraction
algorithms iterate edges in it) and is preserved by serialization.
Removing an edge clears an activity flag over the immutable edge
sequence instead of rebuilding adjacency, so a remove/restore pair costs
O(degree) and a restored edge reappears at its original position.

A :class:`Digraph` may be shared read-only across threads; the mutating
methods (``add_edge``, ``remove_edge``, ``restore_edge``) require
exclusive access.  There is no internal locking.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdgeError,
    EdgeAbsentError,
    EdgeListSyntaxError,
    EmptyResultError,
    OutOfRangeError,
    SelfLoopError,
)

_EDGE_LINE = re.compile(r"(\d+) (\d+)")


class Digraph:
    """Simple directed graph: no self-loops, no parallel arcs."""

    __slots__ = ("n", "_src", "_dst", "_alive", "_pos", "_out", "_in", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self._src: list[int] = []
        self._dst: list[int] = []
        self._alive = bytearray()
        self._pos: dict[tuple[int, int], int] = {}
        self._out: list[set[int]] = [set() for _ in range(n)]
        self._in: list[set[int]] = [set() for _ in range(n)]
        self._m = 0
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def m(self) -> int:
        """Number of active edges."""
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        """Active edges in sequence order."""
        alive = self._alive
        return [
            (u, v)
            for i, (u, v) in enumerate(zip(self._src, self._dst))
            if alive[i]
        ]

    def has_edge(self, u: int, v: int) -> bool:
        i = self._pos.get((u, v))
        return i is not None and bool(self._alive[i])

    def out_neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(self._out[v])

    def in_neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(self._in[v])

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._in[v])

    def add_edge(self, u: int, v: int) -> None:
        """Insert the arc (u, v).

        A brand-new pair is appended to the edge sequence; a pair that
        was removed earlier is reactivated at its original position.
        """
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoopError(f"self-loop ({u}, {v}) not allowed")
        i = self._pos.get((u, v))
        if i is not None:
            if self._alive[i]:
                raise DuplicateEdgeError(f"edge ({u}, {v}) already present")
            self._alive[i] = 1
        else:
            self._pos[(u, v)] = len(self._src)
            self._src.append(u)
            self._dst.append(v)
            self._alive.append(1)
        self._out[u].add(v)
        self._in[v].add(u)
        self._m += 1

    def remove_edge(self, u: int, v: int) -> None:
        """Deactivate the arc (u, v); its slot is kept for restoration."""
        i = self._pos.get((u, v))
        if i is None or not self._alive[i]:
            raise EdgeAbsentError(f"edge ({u}, {v}) not present")
        self._alive[i] = 0
        self._out[u].discard(v)
        self._in[v].discard(u)
        self._m -= 1

    def restore_edge(self, u: int, v: int) -> None:
        """Reactivate a previously removed arc at its original position."""
        i = self._pos.get((u, v))
        if i is None:
            raise EdgeAbsentError(f"edge ({u}, {v}) was never present")
        if self._alive[i]:
            raise DuplicateEdgeError(f"edge ({u}, {v}) is already active")
        self._alive[i] = 1
        self._out[u].add(v)
        self._in[v].add(u)
        self._m += 1

    def copy(self) -> Digraph:
        """Independent copy holding only the active edges."""
        return Digraph(self.n, self.edges())

    def delete_vertices(self, remove: Iterable[int]) -> tuple[Digraph, list[int]]:
        """Induced subgraph on the surviving vertices.

        Survivors are re-indexed densely, preserving their relative
        order.  Returns the subgraph together with the list mapping new
        ids back to original ids (needed to report witnesses in the
        caller's vertex numbering).
        """
        dropped = set(remove)
        for v in dropped:
            self._check_vertex(v)
        if len(dropped) == self.n:
            raise EmptyResultError("cannot delete every vertex")
        kept = [v for v in range(self.n) if v not in dropped]
        new_id = {v: i for i, v in enumerate(kept)}
        edges = [
            (new_id[u], new_id[v])
            for u, v in self.edges()
            if u not in dropped and v not in dropped
        ]
        return Digraph(len(kept), edges), kept

    def underlying_undirected(self) -> UndirectedGraph:
        """Undirected view: antiparallel arcs collapse to one edge."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges():
            adj[u].add(v)
            adj[v].add(u)
        return UndirectedGraph(self.n, adj)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise OutOfRangeError(f"vertex {v} outside [0, {self.n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.edges() == other.edges()

    __hash__ = None  # mutable

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self._m})"


class UndirectedGraph:
    """Adjacency-set view produced by :meth:`Digraph.underlying_undirected`."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: list[set[int]]) -> None:
        self.n = n
        self.adj = adj

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as (u, v) with u < v, ascending."""
        return [
            (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
        ]

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False)
class EdgeSubset:
    """Ordered subset of a digraph's edges (e.g. removed or protected sets)."""

    parent: Digraph
    members: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for u, v in self.members:
            if not self.parent.has_edge(u, v):
                raise EdgeAbsentError(
                    f"({u}, {v}) is not an edge of the parent graph"
                )

    def __contains__(self, edge: tuple[int, int]) -> bool:
        return edge in self.members

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def parse_edge_list(text: str) -> Digraph:
    """Parse edge-list text: header ``n m`` then m lines ``u v``.

    Lines starting with ``#`` are comments and may appear anywhere.
    Input must be ASCII; vertex ids are 0-based decimals separated by a
    single space.
    """
    if not text.isascii():
        raise EdgeListSyntaxError("edge-list text must be ASCII")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    data: list[tuple[int, str]] = [
        (i, line)
        for i, line in enumerate(lines, start=1)
        if not line.startswith("#")
    ]
    if not data:
        raise EdgeListSyntaxError("missing 'n m' header line")
    lineno, header = data[0]
    match = _EDGE_LINE.fullmatch(header)
    if match is None:
        raise EdgeListSyntaxError(f"line {lineno}: expected 'n m', got {header!r}")
    n, m = int(match.group(1)), int(match.group(2))
    body = data[1:]
    if len(body) != m:
        raise EdgeListSyntaxError(
            f"header declares {m} edges but {len(body)} edge lines found"
        )
    edges = []
    for lineno, line in body:
        match = _EDGE_LINE.fullmatch(line)
        if match is None:
            raise EdgeListSyntaxError(
                f"line {lineno}: expected 'u v', got {line!r}"
            )
        edges.append((int(match.group(1)), int(match.group(2))))
    return Digraph(n, edges)


def serialize_edge_list(g: Digraph) -> str:
    """Canonical edge-list text; ``parse_edge_list`` inverts it exactly."""
    out = [f"{g.n} {g.m}\n"]
    out.extend(f"{u} {v}\n" for u, v in g.edges())
    return "".join(out)
