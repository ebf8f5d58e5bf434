import pytest

import oracles
from twovsb.approx import approx_m2vsbss_alg1, union_as_result
from twovsb.connectivity import is_3vc_ugraph
from twovsb.errors import PreconditionError
from twovsb.exact import exact_m2vsbss, lower_bound
from twovsb.fixtures import FIG1C
from twovsb.generators import random_2vsb
from twovsb.graph import Digraph, underlying


def test_lower_bound(fig1a, k4bi, fig1b):
    assert lower_bound(fig1a) == 14
    assert lower_bound(k4bi) == 8
    k3 = Digraph.from_arcs([(u, w) for u in range(3) for w in range(3) if u != w])
    assert lower_bound(k3) == 6
    with pytest.raises(PreconditionError):
        lower_bound(fig1b)


def test_fig1a(fig1a):
    r = exact_m2vsbss(fig1a)
    assert r.size == 14 and r.proven_optimal and not r.time_limit_hit
    assert oracles.is_2vsb(fig1a.vertices, r.arcs)


def test_bidirected_k4_matches_bruteforce(k4bi):
    r = exact_m2vsbss(k4bi)
    size, witness = oracles.minimum_2vsb_size(k4bi.vertices, k4bi.arcs)
    assert r.size == size == 8
    assert r.arcs == witness


def test_hand_witness_for_k4_is_feasible(k4bi):
    w = [(1, 2), (2, 3), (3, 4), (4, 1), (2, 4), (4, 2), (1, 3), (3, 1)]
    assert oracles.is_2vsb(k4bi.vertices, w)


def test_fig1c_is_its_own_optimum(fig1c):
    r = exact_m2vsbss(fig1c)
    assert r.arcs == tuple(sorted(FIG1C))
    assert r.proven_optimal


@pytest.mark.parametrize("seed", range(1, 9))
def test_small_random_graphs_match_bruteforce(seed):
    g = random_2vsb(4 + seed % 2, seed % 2, seed)
    r = exact_m2vsbss(g)
    size, witness = oracles.minimum_2vsb_size(g.vertices, g.arcs)
    assert r.proven_optimal
    assert (r.size, r.arcs) == (size, witness)


@pytest.mark.parametrize("seed", range(1, 16))
def test_properties_on_random_graphs(seed):
    g = random_2vsb(4 + seed % 5, seed % 3, seed)
    r = exact_m2vsbss(g)
    assert r.proven_optimal
    assert oracles.is_2vsb(g.vertices, r.arcs)
    assert r.size >= 2 * g.n
    assert r.size <= approx_m2vsbss_alg1(g).size
    assert r.size <= union_as_result(g).size
    assert is_3vc_ugraph(underlying(Digraph(g.vertices, r.arcs)))
    assert exact_m2vsbss(g) == r


def test_size_limits_return_unproven_feasible_incumbent():
    g = random_2vsb(20, 0, 3)
    r = exact_m2vsbss(g)
    assert not r.proven_optimal and r.time_limit_hit
    assert r.nodes_explored == 0
    assert oracles.is_2vsb(g.vertices, r.arcs)


def test_time_limit(fig1a):
    g = random_2vsb(10, 6, 5)
    r = exact_m2vsbss(g, time_limit_ms=0)
    assert r.time_limit_hit and not r.proven_optimal
    assert oracles.is_2vsb(g.vertices, r.arcs)


def test_rejects_non_2vsb(fig1b):
    with pytest.raises(PreconditionError):
        exact_m2vsbss(fig1b)
