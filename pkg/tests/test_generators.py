import pytest

import oracles
from twovsb.errors import PreconditionError
from twovsb.generators import random_2vsb


@pytest.mark.parametrize("n", range(4, 11))
@pytest.mark.parametrize("seed", [0, 1, 17])
def test_output_is_2vsb_on_1_to_n(n, seed):
    g = random_2vsb(n, 2, seed)
    assert g.vertices == tuple(range(1, n + 1))
    assert oracles.is_2vsb(g.vertices, g.arcs)


def test_contains_a_bidirected_hamiltonian_cycle():
    g = random_2vsb(9, 0, 4)
    # every vertex sits on the cycle, so it has at least two antiparallel partners
    for v in g.vertices:
        assert sum(1 for w in g.successors(v) if g.has_arc(w, v)) >= 2


def test_deterministic_per_arguments():
    assert random_2vsb(8, 3, 5) == random_2vsb(8, 3, 5)
    assert random_2vsb(8, 3, 5) != random_2vsb(8, 3, 6)


def test_extra_arcs_are_added_on_top():
    base = random_2vsb(7, 0, 9)
    more = random_2vsb(7, 4, 9)
    assert set(base.arcs) < set(more.arcs)
    assert more.m == base.m + 4


def test_extra_arcs_saturate_at_complete_graph():
    assert random_2vsb(4, 100, 1).m == 12


def test_rejects_small_n():
    with pytest.raises(PreconditionError):
        random_2vsb(3)
