"""Inclusion-minimal spanning subgraphs by greedy edge deletion.

Both connectivity properties are monotone under edge deletion, so a single
pass suffices: an edge kept because its removal broke the property stays
unremovable after further deletions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Literal, Sequence, TypeVar

from .connectivity import is_2vc_digraph, is_3vc_ugraph
from .errors import PreconditionError
from .graph import ArcSet, Digraph, Edge, UGraph

T = TypeVar("T")

MODES = ("input", "lexicographic", "random")


@dataclass(frozen=True)
class DeletionOrder:
    """Order in which candidate edges are offered for deletion."""

    mode: Literal["input", "lexicographic", "random"] = "lexicographic"
    seed: int = 0

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown deletion order {self.mode!r}; expected one of {MODES}")

    @classmethod
    def parse(cls, name: str, seed: int = 0) -> "DeletionOrder":
        return cls("lexicographic" if name == "lex" else name, seed)

    def arrange(self, canonical: Sequence[T], given: Sequence[T]) -> list[T]:
        if self.mode == "input":
            return list(given)
        items = list(canonical)
        if self.mode == "random":
            random.Random(self.seed).shuffle(items)
        return items


LEX = DeletionOrder()


def _greedy_delete(edges: list[T], keep_ok: Callable[[set[T]], bool]) -> set[T]:
    current = set(edges)
    for e in edges:
        current.discard(e)
        if not keep_ok(current):
            current.add(e)
    return current


def minimal_2vc_subgraph(g: Digraph, order: DeletionOrder = LEX) -> ArcSet:
    """Arc set of an inclusion-minimal 2-vertex-connected spanning subgraph."""
    if not is_2vc_digraph(g):
        raise PreconditionError("input not 2-vertex-connected")
    kept = _greedy_delete(
        order.arrange(g.arcs, g.input_order),
        lambda arcs: is_2vc_digraph(Digraph(g.vertices, arcs)),
    )
    return tuple(sorted(kept))


def minimal_3vc_subgraph(ug: UGraph, order: DeletionOrder = LEX) -> tuple[Edge, ...]:
    """Edge set of an inclusion-minimal 3-vertex-connected spanning subgraph."""
    if not is_3vc_ugraph(ug):
        raise PreconditionError("underlying graph not 3-vertex-connected")
    kept = _greedy_delete(
        order.arrange(ug.edges, ug.input_order),
        lambda edges: is_3vc_ugraph(UGraph(ug.vertices, edges)),
    )
    return tuple(sorted(kept))

