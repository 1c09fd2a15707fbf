import gzip
import random

import pytest

from zagrebcheck import kernels
from zagrebcheck.constructors import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    random_graph,
)
from zagrebcheck.graph import Graph, GraphError, decode_graph6, enumerate_labeled, from_edge_list
from zagrebcheck.invariants import (
    bipartition,
    circumference,
    full_bundle,
    independence_number,
    is_hamiltonian,
    is_traceable,
    vertex_connectivity,
    zagreb_m1,
)

import oracles


def fresh(g):
    # new instance with an empty invariant cache
    return Graph(g.n, g.adj)


def small_unlabeled(corpora, max_n=7):
    with gzip.open(corpora / "graph1_7.g6.gz", "rt") as fh:
        for line in fh:
            g = decode_graph6(line)
            if g.n <= max_n:
                yield g


def test_zagreb_examples():
    assert zagreb_m1(cycle_graph(5)) == 20
    assert zagreb_m1(cycle_graph(9)) == 36
    assert zagreb_m1(complete_bipartite(2, 3)) == 2 * 9 + 3 * 4 == 30
    assert zagreb_m1(from_edge_list(1, [])) == 0


def test_independence_examples(backend):
    assert independence_number(fresh(complete_graph(6))) == 1
    assert independence_number(fresh(complete_bipartite(2, 3))) == 3
    assert independence_number(fresh(cycle_graph(5))) == oracles.independence_number(cycle_graph(5)) == 2


def test_connectivity_examples(backend):
    assert vertex_connectivity(fresh(complete_bipartite(2, 3))) == 2
    assert oracles.vertex_connectivity(complete_bipartite(2, 3)) == 2
    assert vertex_connectivity(fresh(path_graph(5))) == 1
    assert vertex_connectivity(fresh(complete_graph(4))) == 3
    with pytest.raises(GraphError):
        vertex_connectivity(from_edge_list(1, []))


def test_hamiltonian_examples(backend):
    assert is_hamiltonian(fresh(cycle_graph(5)))
    assert not is_hamiltonian(fresh(complete_bipartite(2, 3)))
    assert not is_hamiltonian(fresh(path_graph(5)))
    assert not is_hamiltonian(fresh(complete_graph(2)))


def test_traceable_examples(backend):
    assert is_traceable(fresh(path_graph(5)))
    assert not is_traceable(fresh(complete_bipartite(1, 3)))
    assert not is_traceable(fresh(complete_bipartite(2, 4)))
    assert is_traceable(from_edge_list(1, []))


def test_circumference_examples(backend):
    assert circumference(fresh(cycle_graph(6))) == 6
    assert circumference(fresh(path_graph(5))) == 0
    assert circumference(fresh(complete_bipartite(2, 3))) == oracles.circumference(complete_bipartite(2, 3)) == 4
    with pytest.raises(GraphError):
        circumference(fresh(cycle_graph(17)))


def test_bipartition_examples():
    a, b = bipartition(cycle_graph(6))
    assert (len(a), len(b)) == (3, 3) and 0 in a
    assert bipartition(cycle_graph(5)) is None
    a, b = bipartition(complete_bipartite(2, 3))
    assert sorted((len(a), len(b))) == [2, 3]


def test_bipartition_places_component_roots_in_first_part():
    g = from_edge_list(6, [(0, 1), (2, 3), (3, 4)])
    a, b = bipartition(g)
    assert {0, 2, 5} <= a and a.isdisjoint(b) and a | b == set(range(6))


def test_full_bundle_examples():
    c5 = full_bundle(cycle_graph(5))
    assert (c5.n, c5.e, c5.delta, c5.Delta, c5.m1, c5.beta, c5.kappa) == (5, 5, 2, 2, 20, 2, 2)
    assert c5.hamiltonian and c5.traceable and c5.circumference == 5
    k23 = full_bundle(complete_bipartite(2, 3))
    assert (k23.m1, k23.beta, k23.kappa, k23.hamiltonian, k23.traceable) == (30, 3, 2, False, True)
    p5 = full_bundle(path_graph(5))
    assert (p5.m1, p5.beta, p5.kappa, p5.hamiltonian, p5.traceable, p5.circumference) == (14, 3, 1, False, True, 0)


def test_kernels_match_brute_force_on_all_small_graphs(backend, corpora):
    """Every graph up to isomorphism on n <= 7 vertices against the oracles."""
    for g in small_unlabeled(corpora):
        assert independence_number(fresh(g)) == oracles.independence_number(g), g
        if g.n >= 2:
            assert vertex_connectivity(fresh(g)) == oracles.vertex_connectivity(g), g
        assert is_hamiltonian(fresh(g)) == oracles.hamiltonian(g), g
        assert is_traceable(fresh(g)) == oracles.traceable(g), g
        assert (bipartition(g) is not None) == oracles.is_bipartite(g), g
        if g.n <= 6:
            assert circumference(fresh(g)) == oracles.circumference(g), g


def test_circumference_n7_against_brute_force(corpora):
    rng = random.Random(7)
    graphs = [g for g in small_unlabeled(corpora) if g.n == 7]
    for g in rng.sample(graphs, 150):
        assert circumference(fresh(g)) == oracles.circumference(g), g


@pytest.mark.parametrize("n", [4, 5])
def test_labeled_invariants_against_brute_force(backend, n):
    for g in enumerate_labeled(n):
        assert independence_number(fresh(g)) == oracles.independence_number(g)
        assert vertex_connectivity(fresh(g)) == oracles.vertex_connectivity(g)
        assert is_hamiltonian(fresh(g)) == oracles.hamiltonian(g)


def test_backends_agree_on_random_graphs():
    if len(kernels.available()) < 2:
        pytest.skip("compiled kernels not built")
    from zagrebcheck import _kernels, _pykernels

    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(1, 14)
        g = random_graph(n, rng.choice(["1/5", "2/5", "3/5", "4/5"]), rng.randrange(1 << 64))
        for name in ("is_connected", "max_independent_set", "vertex_connectivity",
                     "hamiltonian_cycle", "hamiltonian_path"):
            assert getattr(_kernels, name)(n, g.adj) == getattr(_pykernels, name)(n, g.adj), (name, g)
        assert _kernels.longest_cycle(n, g.adj, n) == _pykernels.longest_cycle(n, g.adj, n)
        mask = rng.randrange(1 << (n * (n - 1) // 2)) if n > 1 else 0
        assert _kernels.adj_from_mask(n, mask) == _pykernels.adj_from_mask(n, mask)


def test_bundle_invariants_on_enumeration():
    for g in enumerate_labeled(5):
        b = full_bundle(g)
        assert b.delta ** 2 * b.n <= b.m1 <= b.Delta ** 2 * b.n
        assert 1 <= b.beta <= b.n
        assert b.kappa <= b.delta
        assert not b.hamiltonian or b.traceable
        assert b.hamiltonian == (b.circumference == b.n)
        if b.bipartition is not None:
            a, c = b.bipartition
            assert a | c == set(range(b.n)) and not a & c
            assert all(not g.has_edge(u, v) for u in a for v in a)
            assert all(not g.has_edge(u, v) for u in c for v in c)
