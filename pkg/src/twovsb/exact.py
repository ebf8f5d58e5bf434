"""Exact minimum 2VSB spanning subgraph by include/exclude branch-and-bound.

Arcs are decided in canonical order, include branch first.  For two subsets of
equal size that order visits the lexicographically smaller sorted arc list
first, and the incumbent is only replaced on strict improvement, so the
returned optimum is the lexicographically least among all minimum solutions.

Pruning rules, all exact:
  * every vertex of a 2-vertex-connected digraph has in- and out-degree >= 2,
    so a branch where some vertex can no longer reach that is dead, and the
    summed degree deficit of the included arcs bounds the completion size;
  * the incumbent size;
  * 2VSB is monotone under arc addition, so excluding an arc is only allowed
    while the included plus undecided arcs still form a 2VSB graph;
  * any 2VSB graph has at least 2n arcs, so an incumbent of size 2n stops the search.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionError
from .graph import ArcSet, Digraph
from .strong import is_2vsb

DEFAULT_MAX_N = 10
DEFAULT_MAX_M = 32


@dataclass(frozen=True)
class ExactResult:
    arcs: ArcSet
    nodes_explored: int
    proven_optimal: bool
    time_limit_hit: bool

    @property
    def size(self) -> int:
        return len(self.arcs)


class _Stop(Exception):
    pass


def lower_bound(g: Digraph) -> int:
    if not is_2vsb(g):
        raise PreconditionError("input graph is not 2-vertex strongly biconnected")
    return 2 * g.n


def _greedy_2vsb(g: Digraph) -> ArcSet:
    kept = set(g.arcs)
    for a in g.arcs:
        kept.discard(a)
        if not is_2vsb(Digraph(g.vertices, kept)):
            kept.add(a)
    return tuple(sorted(kept))


def exact_m2vsbss(
    g: Digraph,
    max_n: int = DEFAULT_MAX_N,
    max_m: int = DEFAULT_MAX_M,
    time_limit_ms: Optional[float] = None,
) -> ExactResult:
    """Minimum-size arc subset whose spanning subgraph is 2VSB.

    When ``g`` exceeds ``max_n``/``max_m`` no search is run and a greedy
    inclusion-minimal feasible subset is returned with ``proven_optimal=False``.
    When the time budget runs out the best incumbent so far is returned.
    """
    floor = lower_bound(g)
    if g.n > max_n or g.m > max_m:
        return ExactResult(_greedy_2vsb(g), 0, False, True)

    arcs = g.arcs
    m = len(arcs)
    vertices = g.vertices
    deadline = None if time_limit_ms is None else time.monotonic() + time_limit_ms / 1000.0

    included = [False] * m
    undecided = [True] * m
    inc_out = dict.fromkeys(vertices, 0)
    inc_in = dict.fromkeys(vertices, 0)
    avail_out = {v: g.out_degree(v) for v in vertices}
    avail_in = {v: g.in_degree(v) for v in vertices}

    best: list = [arcs]
    nodes = 0
    hit = False

    def feasible(mask) -> bool:
        return is_2vsb(Digraph(vertices, (a for a, keep in zip(arcs, mask) if keep)))

    def dfs(i: int, size: int) -> None:
        nonlocal nodes, hit
        nodes += 1
        if deadline is not None and nodes % 64 == 0 and time.monotonic() > deadline:
            hit = True
            raise _Stop
        short_out = sum(max(0, 2 - d) for d in inc_out.values())
        short_in = sum(max(0, 2 - d) for d in inc_in.values())
        if size + max(short_out, short_in) >= len(best[0]):
            return
        if short_out == 0 and short_in == 0 and feasible(included):
            best[0] = tuple(a for a, keep in zip(arcs, included) if keep)
            if len(best[0]) <= floor:
                raise _Stop
            return
        if i == m:
            return
        u, w = arcs[i]

        undecided[i] = False
        included[i] = True
        inc_out[u] += 1
        inc_in[w] += 1
        dfs(i + 1, size + 1)
        inc_out[u] -= 1
        inc_in[w] -= 1
        included[i] = False

        if avail_out[u] > 2 and avail_in[w] > 2:
            avail_out[u] -= 1
            avail_in[w] -= 1
            if feasible([inc or und for inc, und in zip(included, undecided)]):
                dfs(i + 1, size)
            avail_out[u] += 1
            avail_in[w] += 1
        undecided[i] = True

    try:
        dfs(0, 0)
    except _Stop:
        pass
    return ExactResult(best[0], nodes, not hit, hit)
