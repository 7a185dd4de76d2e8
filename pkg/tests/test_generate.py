import pytest

from dimp8.dimcheck import check_dim, matching_weight
from dimp8.generate import (
    BadParameterError,
    GenSpec,
    gen_named,
    gen_planted_yes,
    gen_random_p8_free,
)
from dimp8.graph import connected_components
from dimp8.patterns import find_induced_p8
from dimp8.solver import solve_dim
from helpers import ref_has_induced_p8


def test_small_always_accepts():
    g = gen_random_p8_free(GenSpec("random_p8_free", n=5, p=0.9, seed=3, connected=False))
    assert g.n == 5


def test_random_determinism():
    a = gen_random_p8_free(GenSpec("random_p8_free", n=12, p=0.3, seed=1))
    b = gen_random_p8_free(GenSpec("random_p8_free", n=12, p=0.3, seed=1))
    assert a.edges == b.edges and a.edge_weights == b.edge_weights
    c = gen_random_p8_free(GenSpec("random_p8_free", n=12, p=0.3, seed=2))
    assert (a.edges, a.edge_weights) != (c.edges, c.edge_weights)


def test_random_is_p8_free_and_connected():
    for seed in range(25):
        g = gen_random_p8_free(GenSpec("random_p8_free", n=12, p=0.35, seed=seed))
        assert find_induced_p8(g) is None
        assert len(connected_components(g)) == 1
    # cross-check the detector itself on a few samples
    for seed in range(5):
        g = gen_random_p8_free(GenSpec("random_p8_free", n=10, p=0.3, seed=seed))
        assert not ref_has_induced_p8(g)


def test_planted_k1_no_free_vertices():
    g, planted = gen_planted_yes(GenSpec("planted", n=2, k=1))
    assert g.m == 1 and planted == ((0, 1),)


def test_planted_rejects_unconnectable():
    with pytest.raises(BadParameterError):
        gen_planted_yes(GenSpec("planted", n=4, k=2))
    with pytest.raises(BadParameterError):
        gen_planted_yes(GenSpec("planted", n=3, k=2))


def test_planted_validity_and_determinism():
    for seed in range(15):
        spec = GenSpec("planted", n=14, k=4, seed=seed, w_lo=1, w_hi=9)
        g, planted = gen_planted_yes(spec)
        g2, planted2 = gen_planted_yes(spec)
        assert g.edges == g2.edges and planted == planted2
        assert check_dim(g, planted).is_dim
        assert find_induced_p8(g) is None
        assert len(connected_components(g)) == 1


def test_planted_solver_never_does_worse():
    for seed in range(10):
        g, planted = gen_planted_yes(GenSpec("planted", n=20, seed=seed, w_lo=1, w_hi=9))
        out = solve_dim(g)
        assert out.status == "dim_found"
        assert out.weight <= matching_weight(g, planted)


def test_named_families():
    assert gen_named("path", 7).m == 6
    assert gen_named("cycle", 4).m == 4
    assert gen_named("butterfly").m == 6
    assert gen_named("gem").m == 7
    assert gen_named("claw").m == 3
    assert gen_named("k4").m == 6
    with pytest.raises(BadParameterError):
        gen_named("cycle", 2)
    with pytest.raises(BadParameterError):
        gen_named("nosuch", 5)
