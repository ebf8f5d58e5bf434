"""Reference implementations that share no code with the package under test.

Everything here is either brute force straight from the definitions or
delegates to networkx.
"""

from itertools import combinations

import networkx as nx


def nx_digraph(vertices, arcs):
    g = nx.DiGraph()
    g.add_nodes_from(vertices)
    g.add_edges_from(arcs)
    return g


def reach(vertices, arcs, start):
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for t, h in arcs:
            if t == v and h not in seen:
                seen.add(h)
                frontier.append(h)
    return seen


def mutual_reachability_classes(vertices, arcs):
    reachable = {v: reach(vertices, arcs, v) for v in vertices}
    classes = {frozenset(w for w in vertices if w in reachable[v] and v in reachable[w]) for v in vertices}
    return sorted(tuple(sorted(c)) for c in classes)


def undirected_components(vertices, edges):
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(edges)
    return nx.number_connected_components(g)


def articulation_points_bruteforce(vertices, edges):
    base = undirected_components(vertices, edges)
    out = set()
    for v in vertices:
        rest = [u for u in vertices if u != v]
        if undirected_components(rest, [e for e in edges if v not in e]) > base:
            out.add(v)
    return out


def strongly_biconnected(vertices, arcs):
    """Straight from the definition, with K1/K2 counting as biconnected."""
    vertices = list(vertices)
    if not vertices:
        return False
    g = nx_digraph(vertices, arcs)
    if not nx.is_strongly_connected(g):
        return False
    ug = g.to_undirected()
    if len(vertices) <= 2:
        return nx.is_connected(ug)
    return nx.is_biconnected(ug)


def induced(arcs, keep):
    return [(t, h) for t, h in arcs if t in keep and h in keep]


def is_2vsb(vertices, arcs):
    vertices = list(vertices)
    if len(vertices) < 3 or not strongly_biconnected(vertices, arcs):
        return False
    for w in vertices:
        rest = [v for v in vertices if v != w]
        if not strongly_biconnected(rest, induced(arcs, set(rest))):
            return False
    return True


def is_2vc(vertices, arcs):
    vertices = list(vertices)
    if len(vertices) < 3 or not nx.is_strongly_connected(nx_digraph(vertices, arcs)):
        return False
    for w in vertices:
        rest = [v for v in vertices if v != w]
        if not nx.is_strongly_connected(nx_digraph(rest, induced(arcs, set(rest)))):
            return False
    return True


def is_3vc(vertices, edges):
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(edges)
    return len(vertices) >= 4 and nx.is_connected(g) and nx.node_connectivity(g) >= 3


def maximal_sb_sets(vertices, arcs, min_size=3):
    """All inclusion-maximal vertex sets inducing a strongly biconnected subgraph."""
    good = [
        frozenset(s)
        for k in range(1, len(vertices) + 1)
        for s in combinations(vertices, k)
        if strongly_biconnected(s, induced(arcs, set(s)))
    ]
    maximal = [s for s in good if not any(s < t for t in good)]
    return sorted(tuple(sorted(s)) for s in maximal if len(s) >= min_size)


def minimum_2vsb_size(vertices, arcs):
    """Smallest k admitting a 2VSB k-subset of ``arcs``, with the lex-least witness."""
    arcs = sorted(arcs)
    for k in range(2 * len(vertices), len(arcs) + 1):
        for subset in combinations(arcs, k):
            if is_2vsb(vertices, subset):
                return k, subset
    return None, None


def minimum_2vc_size(vertices, arcs):
    arcs = sorted(arcs)
    for k in range(len(vertices), len(arcs) + 1):
        for subset in combinations(arcs, k):
            if is_2vc(vertices, subset):
                return k
    return None


def undirected_block_count(vertices, arcs):
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(arcs)
    return sum(1 for _ in nx.biconnected_components(g))
