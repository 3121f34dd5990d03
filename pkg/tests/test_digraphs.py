import itertools

import networkx as nx
import numpy as np
import pytest
from conftest import find_isomorphism, random_digraph

import unigraph as ug
from unigraph import Digraph, InputError


def nx_directed(D):
    g = nx.DiGraph()
    g.add_nodes_from(range(D.n))
    g.add_edges_from(D.arcs())
    return g


def nx_underlying(D):
    g = nx.Graph()
    g.add_nodes_from(range(D.n))
    g.add_edges_from((i, j) for i, j in D.arcs() if i != j)
    return g


def test_digraph_validation():
    with pytest.raises(InputError):
        Digraph([[0, 1]])
    with pytest.raises(InputError):
        Digraph(np.zeros((0, 0)))
    with pytest.raises(InputError):
        Digraph([[2]])
    with pytest.raises(InputError):
        Digraph([[0.5]])
    d = Digraph([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        d.adj[0, 0] = 1  # adjacency is read-only


def test_basic_accessors():
    p = ug.paw_graph()
    assert p.n == 4
    assert p.arc_count == 8
    assert p.edges() == [(0, 1), (1, 2), (1, 3), (2, 3)]
    assert p.out_neighbors(1) == (0, 2, 3)
    assert p.in_degree(1) == 3
    assert p.is_symmetric() and not p.has_loops()
    assert p.is_regular() is None
    assert ug.cycle_graph(5).is_regular() == 2
    assert ug.neighborhood(p, [2, 3]) == frozenset({1, 2, 3})
    assert ug.neighborhood(ug.directed_cycle(4), [0], direction="in") == frozenset({3})


def test_structure_report_against_networkx():
    rng = np.random.default_rng(7)
    for _ in range(40):
        n = int(rng.integers(2, 10))
        D = random_digraph(rng, n, float(rng.uniform(0.1, 0.6)), symmetric=True)
        sr = ug.structure_report(D)
        g = nx_underlying(D)
        assert sorted(map(sorted, sr.weak_components)) == sorted(
            sorted(c) for c in nx.connected_components(g)
        )
        assert sorted(sr.bridges) == sorted(tuple(sorted(e)) for e in nx.bridges(g))
        assert sorted(sr.cut_vertices) == sorted(nx.articulation_points(g))
        assert sr.is_symmetric


def test_directed_bridges_brute():
    rng = np.random.default_rng(11)
    for _ in range(40):
        n = int(rng.integers(2, 9))
        D = random_digraph(rng, n, float(rng.uniform(0.1, 0.5)))
        base = nx.number_connected_components(nx_underlying(D))
        expected = []
        for i, j in D.arcs():
            if i == j or D.adj[j, i]:
                continue
            g = nx_underlying(D)
            g.remove_edge(i, j)
            if nx.number_connected_components(g) > base:
                expected.append((i, j))
        assert sorted(ug.structure_report(D).directed_bridges) == sorted(expected)


def test_strong_components_against_networkx():
    rng = np.random.default_rng(3)
    for _ in range(30):
        n = int(rng.integers(2, 10))
        D = random_digraph(rng, n, 0.3, loops=True)
        ours = {frozenset(c) for c in ug.structure_report(D).strong_components}
        theirs = {frozenset(c) for c in nx.strongly_connected_components(nx_directed(D))}
        assert ours == theirs


def test_quadrangularity_brute():
    rng = np.random.default_rng(5)
    for _ in range(30):
        D = random_digraph(rng, int(rng.integers(2, 8)), 0.4, loops=True)
        a = D.adj
        expected = []
        for i in range(D.n):
            for j in range(i + 1, D.n):
                if int((a[i] & a[j]).sum()) == 1:
                    expected.append(((i, j), "out"))
                if int((a[:, i] & a[:, j]).sum()) == 1:
                    expected.append(((i, j), "in"))
        assert sorted(ug.quadrangularity_violations(D)) == sorted(expected)
    assert ug.quadrangularity_violations(ug.cycle_graph(4)) == []
    assert ug.quadrangularity_violations(ug.cycle_graph(5)) != []


def test_term_rank_and_cycle_factor():
    rng = np.random.default_rng(13)
    for _ in range(40):
        n = int(rng.integers(1, 9))
        D = random_digraph(rng, n, float(rng.uniform(0.1, 0.7)), loops=True)
        g = nx.Graph()
        g.add_nodes_from(("r", i) for i in range(n))
        g.add_nodes_from(("c", j) for j in range(n))
        g.add_edges_from((("r", i), ("c", j)) for i, j in D.arcs())
        match = nx.algorithms.bipartite.hopcroft_karp_matching(
            g, top_nodes=[("r", i) for i in range(n)]
        )
        tr = ug.term_rank(D)
        assert tr.value == len(match) // 2
        cf = ug.cycle_factor(D)
        if tr.value == n:
            assert cf is not None
            assert sorted(cf) == list(range(n))
            assert all(D.adj[i, cf[i]] for i in range(n))
        else:
            assert cf is None


def test_permutation_cycles():
    assert ug.digraphs.permutation_cycles((1, 0, 3, 4, 2)) == ((0, 1), (2, 3, 4))


def test_perfect_two_matching():
    tm = ug.perfect_two_matching(ug.cycle_graph(6))
    assert tm is not None
    covered = [v for e in tm.edges for v in e] + [v for c in tm.cycles for v in c]
    assert sorted(covered) == list(range(6))
    for i, j in tm.edges:
        assert ug.cycle_graph(6).adj[i, j]
    for c in tm.cycles:
        assert len(c) >= 3
        ring = list(c) + [c[0]]
        assert all(ug.cycle_graph(6).adj[a, b] for a, b in zip(ring, ring[1:]))
    tm = ug.perfect_two_matching(Digraph([[0, 1], [1, 0]]))
    assert tm is not None and tm.edges == ((0, 1),)
    assert ug.perfect_two_matching(ug.star_graph(3)) is None
    with pytest.raises(InputError):
        ug.perfect_two_matching(ug.directed_cycle(3))
    with pytest.raises(InputError):
        ug.perfect_two_matching(ug.add_loops(ug.cycle_graph(4)))


def brute_hall_violation(D):
    n = D.n
    for size in range(1, n + 1):
        for sub in itertools.combinations(range(n), size):
            nb = set()
            for v in sub:
                nb.update(D.out_neighbors(v))
            if len(nb) < len(sub):
                return True
    return False


def test_hall_violations_brute():
    rng = np.random.default_rng(17)
    for _ in range(25):
        D = random_digraph(rng, int(rng.integers(1, 8)), 0.35, symmetric=True)
        hv = ug.hall_violations(D)
        assert bool(hv) == brute_hall_violation(D)
        if hv:
            s = hv[0]
            nb = set().union(*(D.out_neighbors(v) for v in s)) if s else set()
            assert len(nb) < len(s)
            # inclusion-minimal: every proper subset satisfies Hall
            for k in range(1, len(s)):
                for sub in itertools.combinations(s, k):
                    nb2 = set().union(*(D.out_neighbors(v) for v in sub))
                    assert len(nb2) >= len(sub)


def test_connectivity_against_networkx():
    rng = np.random.default_rng(19)
    checked = 0
    while checked < 25:
        n = int(rng.integers(3, 9))
        D = random_digraph(rng, n, float(rng.uniform(0.3, 0.8)), symmetric=True)
        g = nx_underlying(D)
        if not nx.is_connected(g):
            continue
        kappa, lam = ug.connectivity_numbers(D)
        assert kappa == nx.node_connectivity(g)
        assert lam == nx.edge_connectivity(g)
        checked += 1
    assert ug.connectivity_numbers(ug.complete_graph(5)) == (4, 4)
    with pytest.raises(InputError):
        ug.connectivity_numbers(ug.directed_cycle(4))


def test_independent_paths():
    C = ug.cycle_graph(5)
    paths = ug.independent_paths(C, 0, 2)
    assert paths is not None
    for p in paths:
        assert p[0] == 0 and p[-1] == 2
        assert all(C.adj[a, b] for a, b in zip(p, p[1:]))
    inner0 = set(paths[0][1:-1])
    inner1 = set(paths[1][1:-1])
    assert not inner0 & inner1
    assert ug.independent_paths(ug.paw_graph(), 0, 2) is None


def test_hamiltonian_cycle_small():
    def brute(D):
        n = D.n
        if n == 1:
            return bool(D.adj[0, 0])
        for perm in itertools.permutations(range(1, n)):
            tour = (0,) + perm
            if all(D.adj[tour[i], tour[(i + 1) % n]] for i in range(n)):
                return True
        return False

    rng = np.random.default_rng(23)
    for _ in range(30):
        D = random_digraph(rng, int(rng.integers(2, 7)), 0.45)
        cyc = ug.hamiltonian_cycle(D)
        assert (cyc is not None) == brute(D)
        if cyc is not None:
            assert sorted(cyc) == list(range(D.n))
            closed = list(cyc) + [cyc[0]]
            assert all(D.adj[a, b] for a, b in zip(closed, closed[1:]))
    assert ug.hamiltonian_cycle(ug.cycle_graph(6)) is not None
    assert ug.hamiltonian_cycle(ug.path_graph(4)) is None
    assert ug.hamiltonian_cycle(ug.hypercube_graph(3)) is not None
    assert ug.hamiltonian_cycle(ug.k33_minus_edge()) is not None
    with pytest.raises(ug.CapacityError):
        ug.hamiltonian_cycle(ug.cycle_graph(20))
    assert ug.hamiltonian_cycle(ug.cycle_graph(20), limit_n=20) is not None


def test_diameter():
    assert ug.diameter(ug.cycle_graph(6)) == 3
    assert ug.diameter(ug.directed_cycle(5)) == 4
    assert ug.diameter(ug.path_graph(4)) == 3
    assert ug.diameter(ug.star_graph(3)) == 2
    two = Digraph(np.zeros((2, 2), dtype=np.int8))
    assert ug.diameter(two) == np.inf
    rng = np.random.default_rng(29)
    for _ in range(15):
        D = random_digraph(rng, int(rng.integers(2, 9)), 0.5, symmetric=True)
        g = nx_underlying(D)
        if nx.is_connected(g) and D.arc_count:
            assert ug.diameter(D) == nx.diameter(g)


def test_automorphism_group():
    rep = ug.automorphism_group(ug.cycle_graph(4))
    assert rep.order == 8 and rep.vertex_transitive and rep.arc_transitive
    assert ug.automorphism_group(ug.complete_graph(4)).order == 24
    assert ug.automorphism_group(ug.path_graph(4)).order == 2
    assert ug.automorphism_group(ug.hypercube_graph(3)).order == 48
    claw = ug.automorphism_group(ug.claw_graph())
    assert claw.order == 6 and not claw.vertex_transitive and not claw.arc_transitive
    dc = ug.automorphism_group(ug.directed_cycle(5))
    assert dc.order == 5 and dc.vertex_transitive and dc.arc_transitive
    with pytest.raises(ug.CapacityError):
        ug.automorphism_group(ug.cycle_graph(11))


def test_bipartition():
    parts = ug.bipartition(ug.hypercube_graph(3))
    assert parts is not None and len(parts[0]) == 4
    assert ug.bipartition(ug.k33_minus_edge()) == ((0, 1, 2), (3, 4, 5))
    assert ug.bipartition(ug.cycle_graph(5)) is None
    assert ug.bipartition(ug.add_loops(ug.cycle_graph(4))) is None
    with pytest.raises(InputError):
        ug.bipartition(ug.directed_cycle(4))


def test_induced_subgraph_search():
    assert ug.induced_subgraph_search(ug.k33_minus_edge(), ug.claw_graph()) is not None
    assert ug.induced_subgraph_search(ug.complete_graph(4), ug.claw_graph()) is None
    tri = ug.cycle_graph(3)
    f = ug.induced_subgraph_search(ug.paw_graph(), tri)
    assert f is not None and sorted(f) == [1, 2, 3]
    # J - I contains no induced directed 3-cycle: any 3 vertices span all 6 arcs
    j4 = Digraph((np.ones((4, 4)) - np.eye(4)).astype(np.int8))
    assert ug.induced_subgraph_search(j4, ug.directed_cycle(3)) is None


def test_generators():
    assert np.array_equal(ug.cycle_graph(2).adj, [[0, 1], [1, 0]])
    q3 = ug.hypercube_graph(3)
    assert q3.n == 8 and q3.is_regular() == 3
    assert find_isomorphism(ug.hypercube_graph(2), ug.cycle_graph(4)) is not None
    k = ug.k33_minus_edge()
    assert sorted(int(x) for x in k.adj.sum(axis=1)) == [2, 2, 3, 3, 3, 3]
    assert not k.adj[0, 5] and not k.adj[5, 0]
    assert ug.directed_path(4).arc_count == 3
    assert ug.star_graph(3) == ug.claw_graph()
    looped = ug.add_loops(ug.cycle_graph(3))
    assert looped.has_loops() and looped.arc_count == 9
    sub = ug.induced_subdigraph(ug.paw_graph(), [1, 2, 3])
    assert sub == ug.cycle_graph(3)
    assert ug.hypercube_graph(0).n == 1
    with pytest.raises(InputError):
        ug.cycle_graph(1)
    with pytest.raises(InputError):
        ug.hypercube_graph(-1)
