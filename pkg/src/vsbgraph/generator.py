"""Random 3-vsb benchmark instances with deterministic seeding.

Construction recipe: sample a fixed number of distinct arcs uniformly
(default 8n), then insert further uniformly random absent arcs one at a
time, re-testing 3-vertex strong biconnectivity after every insertion,
and stop at the first pass.  Randomness comes from numpy's PCG64
generator, so a spec (n, initial edge count, 64-bit seed) pins the
instance exactly.

Arcs are addressed through the bijection between [0, n(n-1)) and
ordered pairs (u, v), v skipping u; sampling without replacement is a
partial Fisher-Yates shuffle of that index space, which is uniform and
needs no rejection loop at high densities.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .connectivity import is_k_vsb
from .digraph import Digraph
from .errors import SaturatedError, TooFewVerticesError, TooManyEdgesError


@dataclass(frozen=True)
class InstanceSpec:
    """Generator parameters; ``initial_edges`` defaults to 8n."""

    n: int
    initial_edges: int | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 4:
            raise TooFewVerticesError(
                f"instances need at least 4 vertices, got {self.n}"
            )
        if self.initial_edges is None:
            object.__setattr__(self, "initial_edges", 8 * self.n)
        if not 0 <= self.initial_edges <= self.n * (self.n - 1):
            raise TooManyEdgesError(
                f"{self.initial_edges} edges impossible on {self.n} vertices "
                f"(max {self.n * (self.n - 1)})"
            )


@dataclass(frozen=True, eq=False)
class GeneratedInstance:
    spec: InstanceSpec
    graph: Digraph
    edges_added_in_growth: int


def _arc_pair(index: int, n: int) -> tuple[int, int]:
    u, r = divmod(index, n - 1)
    return u, r if r < u else r + 1


def random_digraph(spec: InstanceSpec) -> Digraph:
    """Uniform simple digraph with exactly ``spec.initial_edges`` arcs."""
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    total = n * (n - 1)
    pool = list(range(total))
    for i in range(spec.initial_edges):
        j = int(rng.integers(i, total))
        pool[i], pool[j] = pool[j], pool[i]
    return Digraph(n, [_arc_pair(idx, n) for idx in pool[: spec.initial_edges]])


def grow_until_3vsb(g: Digraph, seed: int) -> GeneratedInstance:
    """Add uniformly random absent arcs until the graph is 3-vsb.

    The input is not modified; each insertion is followed by a full
    3-vsb re-test and growth stops at the first pass (a graph that
    already passes gains nothing).  Terminates before the arc space is
    exhausted because the complete bidirected graph on n >= 4 vertices
    is 3-vsb; running out anyway raises :class:`SaturatedError`.
    """
    if g.n < 4:
        raise TooFewVerticesError(f"growth needs at least 4 vertices, got {g.n}")
    spec = InstanceSpec(g.n, g.m, seed)
    rng = np.random.default_rng(seed)
    work = g.copy()
    n = work.n
    absent = [
        i for i in range(n * (n - 1)) if not work.has_edge(*_arc_pair(i, n))
    ]
    added = 0
    while not is_k_vsb(work, 3).verdict:
        if added == len(absent):
            raise SaturatedError(
                "graph became complete without passing the 3-vsb test"
            )
        j = int(rng.integers(added, len(absent)))
        absent[added], absent[j] = absent[j], absent[added]
        work.add_edge(*_arc_pair(absent[added], n))
        added += 1
    return GeneratedInstance(spec, work, added)


def generate(spec: InstanceSpec) -> GeneratedInstance:
    """Full pipeline: sample ``spec.initial_edges`` arcs, then grow to 3-vsb."""
    return grow_until_3vsb(random_digraph(spec), spec.seed)
