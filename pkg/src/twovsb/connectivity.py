"""Strongly connected components, blocks, and small vertex-connectivity checks.

The k-connectivity predicates delete vertices one (or two) at a time and rerun
a plain reachability test.  That is quadratic-ish but easy to trust, and the
higher-level modules are validated against these checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Collection, Iterable, Mapping, Sequence

from .graph import Digraph, Edge, UGraph

Adjacency = Callable[[int], Iterable[int]]


@dataclass(frozen=True)
class Partition:
    """Disjoint vertex classes; class ids are dense and ordered by least vertex."""

    blocks: tuple[tuple[int, ...], ...]
    index: Mapping[int, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    articulation_points: frozenset[int]
    # (u, w) with u < w -> id of the unique block holding that edge
    edge_block: Mapping[Edge, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.blocks)


def scc(g: Digraph) -> Partition:
    """Tarjan's algorithm, iterative so deep graphs do not hit the recursion limit."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    classes: list[tuple[int, ...]] = []
    counter = 0

    for root in g.vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(g.successors(root)))]
        while work:
            v, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.successors(w))))
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    members = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        members.append(w)
                        if w == v:
                            break
                    classes.append(tuple(sorted(members)))

    classes.sort()
    lookup = {v: i for i, members in enumerate(classes) for v in members}
    return Partition(tuple(classes), lookup)


def _reach(adj: Adjacency, start: int, skip: Collection[int] = ()) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in adj(v):
            if w not in seen and w not in skip:
                seen.add(w)
                todo.append(w)
    return seen


def _strongly_connected(g: Digraph, skip: Collection[int] = ()) -> bool:
    live = [v for v in g.vertices if v not in skip]
    if not live:
        return False
    root = live[0]
    return (
        len(_reach(g.successors, root, skip)) == len(live)
        and len(_reach(g.predecessors, root, skip)) == len(live)
    )


def is_strongly_connected(g: Digraph) -> bool:
    """True iff ``g`` is non-empty and every vertex reaches every other."""
    return _strongly_connected(g)


def _blocks(
    vertices: Sequence[int], adj: Adjacency, skip: Collection[int] = ()
) -> tuple[list[set[int]], set[int]]:
    """Hopcroft-Tarjan biconnected components over the vertices not in ``skip``."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    found: list[set[int]] = []
    cut: set[int] = set()
    counter = 0

    for root in vertices:
        if root in skip or root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        edges: list[Edge] = []
        root_children = 0
        work = [(root, None, iter(adj(root)))]
        while work:
            v, parent, it = work[-1]
            for w in it:
                if w in skip:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edges.append((v, w))
                    work.append((w, v, iter(adj(w))))
                    break
                if w != parent and disc[w] < disc[v]:
                    low[v] = min(low[v], disc[w])
                    edges.append((v, w))
            else:
                work.pop()
                if parent is None:
                    continue
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    members: set[int] = set()
                    while True:
                        e = edges.pop()
                        members.update(e)
                        if e == (parent, v):
                            break
                    found.append(members)
                    if parent == root:
                        root_children += 1
                    else:
                        cut.add(parent)
        if root_children == 0:
            found.append({root})
        elif root_children > 1:
            cut.add(root)
    return found, cut


def _biconnected(vertices: Sequence[int], adj: Adjacency, skip: Collection[int] = ()) -> bool:
    # one block overall <=> connected and free of cut vertices (K1 and K2 included)
    if all(v in skip for v in vertices):
        return False
    found, _ = _blocks(vertices, adj, skip)
    return len(found) == 1


def blocks(ug: UGraph) -> BlockDecomposition:
    """Block / cut-vertex decomposition.  Isolated vertices form singleton blocks."""
    found, cut = _blocks(ug.vertices, ug.neighbors)
    ordered = sorted(tuple(sorted(b)) for b in found)
    members = [set(b) for b in ordered]
    edge_block = {}
    for u, w in ug.edges:
        for i, b in enumerate(members):
            if u in b and w in b:
                edge_block[(u, w)] = i
                break
    return BlockDecomposition(tuple(ordered), frozenset(cut), edge_block)


def is_biconnected(ug: UGraph) -> bool:
    """Connected with no articulation point; a lone vertex or lone edge qualifies."""
    return _biconnected(ug.vertices, ug.neighbors)


def is_2vc_digraph(g: Digraph) -> bool:
    """At least 3 vertices and strongly connected after deleting any one vertex."""
    if g.n < 3 or not _strongly_connected(g):
        return False
    return all(_strongly_connected(g, (v,)) for v in g.vertices)


def _connected(ug: UGraph, skip: Collection[int] = ()) -> bool:
    live = [v for v in ug.vertices if v not in skip]
    if not live:
        return False
    return len(_reach(ug.neighbors, live[0], skip)) == len(live)


def is_3vc_ugraph(ug: UGraph) -> bool:
    """At least 4 vertices and connected after deleting any two vertices."""
    if ug.n < 4 or not _connected(ug):
        return False
    return all(_connected(ug, pair) for pair in combinations(ug.vertices, 2))
