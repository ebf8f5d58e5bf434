"""Bundled example graphs.

FIG1A is a 2VSB digraph on 7 vertices; FIG1B is a minimum 2-vertex-connected
spanning subgraph of it (a bidirected 7-cycle) that is not 2VSB; FIG1C is a
minimum 2VSB spanning subgraph with 2n = 14 arcs.
"""

from __future__ import annotations

from .graph import ArcSet, Digraph

FIG1A: ArcSet = (
    (1, 2), (2, 1), (1, 5), (5, 1), (5, 7), (7, 5), (7, 6), (6, 7),
    (6, 4), (4, 6), (4, 3), (3, 4), (3, 2), (2, 3), (1, 7), (5, 6),
    (6, 3), (4, 2), (3, 1), (4, 5), (2, 5), (2, 6), (3, 5), (7, 4),
)

_CYCLE = (1, 2, 3, 4, 6, 7, 5)
FIG1B: ArcSet = tuple(
    arc
    for u, w in zip(_CYCLE, _CYCLE[1:] + _CYCLE[:1])
    for arc in ((u, w), (w, u))
)

FIG1C: ArcSet = (
    (2, 5), (2, 1), (1, 5), (5, 7), (7, 6), (6, 4), (4, 3), (3, 2),
    (1, 7), (5, 6), (6, 3), (4, 2), (3, 1), (7, 4),
)

TRI: ArcSet = ((1, 2), (2, 3), (3, 1))

K4BI: ArcSet = tuple((u, w) for u in range(1, 5) for w in range(1, 5) if u != w)

FIXTURES: dict[str, ArcSet] = {
    "fig1a": FIG1A,
    "fig1b": FIG1B,
    "fig1c": FIG1C,
    "tri": TRI,
    "k4bi": K4BI,
}


def load(name: str) -> Digraph:
    try:
        return Digraph.from_arcs(FIXTURES[name])
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
