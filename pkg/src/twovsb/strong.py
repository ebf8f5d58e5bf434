"""Strong biconnectivity: components, b-articulation points, and the 2VSB test.

A digraph is strongly biconnected when it is strongly connected and its
underlying undirected graph is biconnected.  Strongly biconnected components
are taken to be the blocks of the underlying graph inside each strongly
connected component; within one SCC every block induces a strongly connected
subgraph, so these are exactly the maximal strongly biconnected vertex sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .connectivity import _biconnected, _blocks, _strongly_connected, scc
from .errors import PreconditionError
from .graph import Arc, Digraph, underlying


@dataclass(frozen=True)
class SbccDecomposition:
    components: tuple[tuple[int, ...], ...]
    # intra-SCC arc -> component id; arcs between SCCs are absent
    arc_component: Mapping[Arc, int] = field(compare=False, repr=False)
    vertex_components: Mapping[int, frozenset[int]] = field(compare=False, repr=False)

    @property
    def t(self) -> int:
        return len(self.components)

    def share_component(self, u: int, w: int) -> bool:
        return bool(self.vertex_components[u] & self.vertex_components[w])


@dataclass(frozen=True)
class BapReport:
    points: tuple[int, ...]

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.points)


def _undirected_adj(g: Digraph):
    ug = underlying(g)
    return ug.neighbors


def _strongly_biconnected(g: Digraph, adj, skip=()) -> bool:
    return _strongly_connected(g, skip) and _biconnected(g.vertices, adj, skip)


def is_strongly_biconnected(g: Digraph) -> bool:
    return _strongly_biconnected(g, _undirected_adj(g))


def sbcc(g: Digraph) -> SbccDecomposition:
    """Strongly biconnected components; they may overlap at cut vertices."""
    parts = scc(g)
    comps: list[tuple[int, ...]] = []
    for members in parts.blocks:
        inside = set(members)
        adj = {v: [] for v in members}
        for v in members:
            for w in g.successors(v):
                if w in inside:
                    adj[v].append(w)
                    adj[w].append(v)
        neighbors = {v: sorted(set(ws)) for v, ws in adj.items()}
        found, _ = _blocks(members, neighbors.__getitem__)
        comps.extend(tuple(sorted(b)) for b in found)
    comps.sort()

    by_vertex: dict[int, set[int]] = {v: set() for v in g.vertices}
    for i, comp in enumerate(comps):
        for v in comp:
            by_vertex[v].add(i)
    arc_component = {}
    for u, w in g.arcs:
        if parts.index[u] == parts.index[w]:
            # two blocks share at most one vertex, so this is unique
            (cid,) = by_vertex[u] & by_vertex[w]
            arc_component[(u, w)] = cid
    return SbccDecomposition(
        tuple(comps),
        arc_component,
        {v: frozenset(ids) for v, ids in by_vertex.items()},
    )


def b_articulation_points(g: Digraph) -> BapReport:
    """Vertices whose deletion leaves a digraph that is not strongly biconnected."""
    adj = _undirected_adj(g)
    if not _strongly_biconnected(g, adj):
        raise PreconditionError("b-articulation points are defined only for strongly biconnected graphs")
    return BapReport(tuple(w for w in g.vertices if not _strongly_biconnected(g, adj, (w,))))


def is_2vsb(g: Digraph) -> bool:
    """2-vertex strongly biconnected: n >= 3 and strongly biconnected minus any vertex."""
    if g.n < 3:
        return False
    adj = _undirected_adj(g)
    if not _strongly_biconnected(g, adj):
        return False
    return all(_strongly_biconnected(g, adj, (w,)) for w in g.vertices)
