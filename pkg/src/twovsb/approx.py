"""Approximation algorithms for the minimum 2VSB spanning subgraph problem.

``approx_m2vsbss_alg1`` starts from an inclusion-minimal 2-vertex-connected
core and repairs it around every b-articulation point of that core.  Each
repair step adds one arc joining two different strongly biconnected
components of the core minus ``b``; since the core minus ``b`` is strongly
connected, the new arc closes a cycle and merges at least two components.

``union_algorithm`` combines the same core with the arcs lying over an
inclusion-minimal 3-vertex-connected subgraph of the underlying graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .connectivity import is_2vc_digraph
from .errors import GraphError, PreconditionError
from .graph import Arc, ArcSet, Digraph, Edge, underlying
from .sparsify import LEX, DeletionOrder, minimal_2vc_subgraph, minimal_3vc_subgraph
from .strong import b_articulation_points, is_2vsb, is_strongly_biconnected, sbcc


@dataclass(frozen=True)
class Augmentation:
    """Arcs added while repairing around one b-articulation point."""

    b: int
    added: ArcSet
    # component count of the b-deleted subgraph before each step, then after the last
    t_history: tuple[int, ...]


@dataclass(frozen=True)
class ApproxResult:
    arcs: ArcSet
    n: int
    m: int
    l: int  # noqa: E741
    bound: int
    trace: tuple[Augmentation, ...]
    method: Literal["alg1", "union"] = "alg1"
    core: ArcSet = ()

    @property
    def size(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class UnionResult:
    core_L: ArcSet
    undirected_U: tuple[Edge, ...]
    lifted_A: ArcSet
    union_arcs: ArcSet

    @property
    def size(self) -> int:
        return len(self.union_arcs)


def _without(g: Digraph, arcs, b: int) -> Digraph:
    return Digraph((v for v in g.vertices if v != b), (a for a in arcs if b not in a))


def _augment(g: Digraph, current: set[Arc], b: int) -> Augmentation:
    added: list[Arc] = []
    history: list[int] = []
    while True:
        h = _without(g, current, b)
        if is_strongly_biconnected(h):
            history.append(1)
            return Augmentation(b, tuple(added), tuple(history))
        comps = sbcc(h)
        history.append(comps.t)
        for arc in g.arcs:
            u, w = arc
            if arc in current or u == b or w == b:
                continue
            if not comps.share_component(u, w):
                break
        else:
            raise GraphError("input graph is not 2-vertex strongly biconnected")
        current.add(arc)
        added.append(arc)


def augment_for_bap(g: Digraph, current, b: int) -> list[Arc]:
    """Add arcs of ``g`` to ``current`` until ``(V, current) - b`` is strongly biconnected.

    The smallest eligible arc (lexicographically) is taken at every step.
    Returns the added arcs in insertion order; ``current`` is not modified.
    """
    if b not in g:
        raise GraphError(f"unknown vertex {b}")
    current = set(current)
    for tail, head in current:
        if not g.has_arc(tail, head):
            raise GraphError(f"arc ({tail}, {head}) is not in the graph")
    if not is_2vc_digraph(Digraph(g.vertices, current)):
        raise PreconditionError("current arc set is not 2-vertex-connected")
    return list(_augment(g, current, b).added)


def approx_m2vsbss_alg1(g: Digraph, order: DeletionOrder = LEX) -> ApproxResult:
    if not is_2vsb(g):
        raise PreconditionError("input graph is not 2-vertex strongly biconnected")
    core = minimal_2vc_subgraph(g, order)
    core_graph = Digraph(g.vertices, core)
    n = g.n
    if is_2vsb(core_graph):
        return ApproxResult(core, n, g.m, 0, 4 * n, (), "alg1", core)

    points = b_articulation_points(core_graph).points
    current = set(core)
    trace = tuple(_augment(g, current, b) for b in points)
    arcs = tuple(sorted(current))
    if not is_2vsb(Digraph(g.vertices, arcs)):
        raise AssertionError("augmented subgraph failed the 2VSB check")
    l = len(points)  # noqa: E741
    return ApproxResult(arcs, n, g.m, l, l * (n - 1) + 4 * n, trace, "alg1", core)


def union_algorithm(g: Digraph, order: DeletionOrder = LEX) -> UnionResult:
    if g.n < 4:
        raise PreconditionError("union construction needs at least 4 vertices")
    if not is_2vsb(g):
        raise PreconditionError("input graph is not 2-vertex strongly biconnected")
    core = minimal_2vc_subgraph(g, order)
    frame = set(minimal_3vc_subgraph(underlying(g), order))
    lifted = tuple(a for a in g.arcs if (min(a), max(a)) in frame)
    union = tuple(sorted(set(core) | set(lifted)))
    return UnionResult(core, tuple(sorted(frame)), lifted, union)


def union_as_result(g: Digraph, order: DeletionOrder = LEX) -> ApproxResult:
    """``union_algorithm`` packaged like an ``alg1`` result (bound is 7n)."""
    u = union_algorithm(g, order)
    l = b_articulation_points(Digraph(g.vertices, u.core_L)).l  # noqa: E741
    return ApproxResult(u.union_arcs, g.n, g.m, l, 7 * g.n, (), "union", u.core_L)


def run_method(g: Digraph, method: str, order: DeletionOrder = LEX) -> ApproxResult:
    if method == "alg1":
        return approx_m2vsbss_alg1(g, order)
    if method == "union":
        return union_as_result(g, order)
    raise ValueError(f"unknown method {method!r}")


def bound_report(r: ApproxResult, exact_size: Optional[int] = None) -> dict:
    lower = 2 * r.n
    reference = lower if exact_size is None else max(lower, exact_size)
    return {
        "n": r.n,
        "m": r.m,
        "l": r.l,
        "size": r.size,
        "bound": r.bound,
        "lower_bound": lower,
        "exact_size": exact_size,
        "ratio": r.size / reference,
    }
