"""Immutable directed and undirected simple graphs with integer vertex labels.

Vertices are arbitrary non-negative integers.  Iteration order is canonical
everywhere: vertices ascending, arcs lexicographic by ``(tail, head)``, and
undirected edges stored as ``(min, max)`` pairs in lexicographic order.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Tuple

from .errors import GraphError, ParseError

Arc = Tuple[int, int]
Edge = Tuple[int, int]
ArcSet = Tuple[Arc, ...]


class Digraph:
    """A simple directed graph (no self-loops, no parallel arcs).

    ``input_order`` keeps the arcs in the order they were first supplied; it is
    only consulted by the ``input`` deletion order and never affects equality.
    """

    __slots__ = ("vertices", "arcs", "input_order", "_succ", "_pred", "_arcset")

    def __init__(self, vertices: Iterable[int] = (), arcs: Iterable[Arc] = ()):
        vset = set()
        for v in vertices:
            _check_label(v)
            vset.add(v)
        seen = set()
        ordered = []
        for tail, head in arcs:
            if tail == head:
                raise GraphError(f"self-loop on vertex {tail}")
            if tail not in vset or head not in vset:
                raise GraphError(f"arc ({tail}, {head}) has an endpoint outside the vertex set")
            if (tail, head) not in seen:
                seen.add((tail, head))
                ordered.append((tail, head))

        self.vertices: tuple[int, ...] = tuple(sorted(vset))
        self.arcs: ArcSet = tuple(sorted(seen))
        self.input_order: ArcSet = tuple(ordered)
        self._arcset = frozenset(seen)
        succ: dict[int, list[int]] = {v: [] for v in self.vertices}
        pred: dict[int, list[int]] = {v: [] for v in self.vertices}
        for tail, head in self.arcs:
            succ[tail].append(head)
            pred[head].append(tail)
        self._succ = {v: tuple(ws) for v, ws in succ.items()}
        self._pred = {v: tuple(ws) for v, ws in pred.items()}

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc]) -> "Digraph":
        """Digraph whose vertex set is exactly the arc endpoints."""
        arcs = list(arcs)
        return cls({v for arc in arcs for v in arc}, arcs)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def successors(self, v: int) -> tuple[int, ...]:
        return self._succ[v]

    def predecessors(self, v: int) -> tuple[int, ...]:
        return self._pred[v]

    def out_degree(self, v: int) -> int:
        return len(self._succ[v])

    def in_degree(self, v: int) -> int:
        return len(self._pred[v])

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self._arcset

    def __contains__(self, v: object) -> bool:
        return v in self._succ

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertices == other.vertices and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.vertices, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


class UGraph:
    """A simple undirected graph; edges are stored as sorted pairs."""

    __slots__ = ("vertices", "edges", "input_order", "_adj")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        vset = set()
        for v in vertices:
            _check_label(v)
            vset.add(v)
        seen = set()
        ordered = []
        for u, w in edges:
            if u == w:
                raise GraphError(f"self-loop on vertex {u}")
            if u not in vset or w not in vset:
                raise GraphError(f"edge ({u}, {w}) has an endpoint outside the vertex set")
            e = (u, w) if u < w else (w, u)
            if e not in seen:
                seen.add(e)
                ordered.append(e)

        self.vertices: tuple[int, ...] = tuple(sorted(vset))
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self.input_order: tuple[Edge, ...] = tuple(ordered)
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, w in self.edges:
            adj[u].append(w)
            adj[w].append(u)
        self._adj = {v: tuple(sorted(ws)) for v, ws in adj.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, w: int) -> bool:
        return w in self._adj.get(u, ())

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"UGraph(n={self.n}, m={self.m})"


def _check_label(v) -> None:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise GraphError(f"vertex labels must be non-negative integers, got {v!r}")


def from_edge_list(text: str | Iterable[str]) -> Digraph:
    """Parse ``tail head`` lines; ``#`` comments and blank lines are skipped."""
    lines = text.splitlines() if isinstance(text, str) else text
    arcs = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'tail head', got {raw.rstrip()!r}", lineno)
        try:
            tail, head = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex label in {raw.rstrip()!r}", lineno) from None
        if tail < 0 or head < 0:
            raise ParseError(f"negative vertex label in {raw.rstrip()!r}", lineno)
        if tail == head:
            raise ParseError(f"self-loop on vertex {tail}", lineno)
        arcs.append((tail, head))
    return Digraph.from_arcs(arcs)


def to_edge_list(arcs: Digraph | Iterable[Arc]) -> str:
    """Canonical edge-list text: sorted arcs, one ``tail head`` per line."""
    if isinstance(arcs, Digraph):
        arcs = arcs.arcs
    return "".join(f"{t} {h}\n" for t, h in sorted(arcs))


def underlying(g: Digraph) -> UGraph:
    """Undirected graph obtained by forgetting directions; antiparallel arcs merge."""
    return UGraph(g.vertices, g.input_order)


def remove_vertex(g: Digraph, v: int) -> Digraph:
    if v not in g:
        raise GraphError(f"unknown vertex {v}")
    return Digraph(
        (u for u in g.vertices if u != v),
        (a for a in g.input_order if v not in a),
    )


def remove_ugraph_vertex(ug: UGraph, v: int) -> UGraph:
    if v not in ug:
        raise GraphError(f"unknown vertex {v}")
    return UGraph(
        (u for u in ug.vertices if u != v),
        (e for e in ug.input_order if v not in e),
    )


def subgraph_with_arcs(g: Digraph, arcs: Iterable[Arc]) -> Digraph:
    """Spanning subgraph of ``g`` keeping exactly ``arcs``."""
    arcs = list(arcs)
    for tail, head in arcs:
        if not g.has_arc(tail, head):
            raise GraphError(f"arc ({tail}, {head}) is not in the graph")
    return Digraph(g.vertices, arcs)
