from __future__ import annotations

import random

from .errors import PreconditionError
from .graph import Digraph
from .strong import is_2vsb


def random_2vsb(n: int, extra_arcs: int = 0, seed: int = 0) -> Digraph:
    """Seeded random 2VSB digraph on vertices ``1..n``.

    Starts from a bidirected Hamiltonian cycle over a shuffled vertex order,
    then adds shuffled missing arcs one at a time until the graph is 2VSB,
    then ``extra_arcs`` more from the same shuffled sequence.
    """
    if n < 4:
        raise PreconditionError("random2vsb needs n >= 4")
    if extra_arcs < 0:
        raise ValueError("extra_arcs must be non-negative")
    rng = random.Random(seed)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    arcs = set()
    for u, w in zip(perm, perm[1:] + perm[:1]):
        arcs.add((u, w))
        arcs.add((w, u))
    pool = [(u, w) for u in range(1, n + 1) for w in range(1, n + 1) if u != w and (u, w) not in arcs]
    rng.shuffle(pool)

    vertices = range(1, n + 1)
    it = iter(pool)
    while not is_2vsb(Digraph(vertices, arcs)):
        arcs.add(next(it))
    for arc in it:
        if extra_arcs == 0:
            break
        arcs.add(arc)
        extra_arcs -= 1
    return Digraph(vertices, sorted(arcs))
