import json
from math import gcd

import pytest

from lfmd.errors import EmptyGraphError, InvalidFamilyError, InvalidInputError
from lfmd.graphs import (
    UNREACHABLE,
    Graph,
    all_pairs_distances,
    bfs_distances,
    build_toeplitz,
    build_zero_divisor,
    build_zero_divisor_star,
    complete_graph,
    cycle_graph,
    export_graph,
    graph_from_dict,
    is_bipartite,
    path_graph,
    union_with_isolated,
)


def test_toeplitz_22_vertex_one_neighbors():
    g = build_toeplitz(22, {1, 2, 21})
    assert set(g.neighbors(1)) == {2, 3, 22}


def test_toeplitz_single_difference_is_path():
    g = build_toeplitz(4, {1})
    assert g.label_edges() == [(1, 2), (2, 3), (3, 4)]


def test_toeplitz_edge_count_matches_enumeration():
    g = build_toeplitz(16, {1, 4, 8})
    brute = {(p, q) for p in range(1, 17) for q in range(p + 1, 17) if q - p in (1, 4, 8)}
    assert len(g.edges) == 35 == len(brute)
    assert set(g.label_edges()) == brute


def test_toeplitz_degree_formula():
    # vertex p gains one neighbor for each s with p - s >= 1 and one for each p + s <= n
    n, S = 19, {2, 5, 7}
    g = build_toeplitz(n, S)
    for p in g.labels:
        assert g.degree(p) == sum((p - s >= 1) + (p + s <= n) for s in S)


@pytest.mark.parametrize("n,S", [(1, {1}), (5, set()), (5, {5}), (5, {0, 1})])
def test_toeplitz_rejects_bad_parameters(n, S):
    with pytest.raises(InvalidFamilyError):
        build_toeplitz(n, S)


def test_zero_divisor_22_is_star():
    g = build_zero_divisor(22)
    assert set(g.neighbors(11)) == set(range(2, 21, 2))
    assert all(g.degree(v) == 1 for v in g.labels if v != 11)


def test_zero_divisor_9():
    g = build_zero_divisor(9)
    assert g.labels == (3, 6) and g.label_edges() == [(3, 6)]


def test_zero_divisor_25_is_complete():
    g = build_zero_divisor(25)
    assert g.labels == (5, 10, 15, 20)
    assert len(g.edges) == 6


def test_zero_divisor_35_complete_bipartite():
    g = build_zero_divisor(35)
    fives, sevens = {5, 10, 15, 20, 25, 30}, {7, 14, 21, 28}
    assert set(g.label_edges()) == {(min(a, b), max(a, b)) for a in fives for b in sevens}


@pytest.mark.parametrize("n", [2, 3, 13, 97])
def test_zero_divisor_of_prime_is_empty(n):
    with pytest.raises(EmptyGraphError):
        build_zero_divisor(n)


def test_zero_divisor_matches_definition_up_to_200():
    for n in range(4, 201):
        zd = [x for x in range(1, n) if any((x * y) % n == 0 for y in range(1, n))]
        if not zd:
            continue
        g = build_zero_divisor(n)
        assert list(g.labels) == zd
        brute = {(u, v) for u in zd for v in zd if u < v and (u * v) % n == 0}
        assert set(g.label_edges()) == brute


def test_zero_divisor_2p_and_kp_are_bipartite():
    primes = [p for p in range(3, 100) if all(p % q for q in range(2, p))]
    for p in primes:
        assert is_bipartite(build_zero_divisor(2 * p))[0]
    for i, p in enumerate(primes):
        for q in primes[i + 1 :]:
            if p * q <= 200:
                assert is_bipartite(build_zero_divisor(p * q))[0]


def test_zero_divisor_star_12_adjacency():
    g = build_zero_divisor_star(12)
    assert g.has_edge(5, 2)
    assert not g.has_edge(5, 7)


def test_zero_divisor_star_of_prime_is_edgeless():
    g = build_zero_divisor_star(7)
    assert g.order == 6 and not g.edges


def test_zero_divisor_star_contains_zero_divisor_graph():
    for n in range(4, 80):
        if all(n % q for q in range(2, n)):
            continue
        inner = build_zero_divisor(n)
        outer = build_zero_divisor_star(n)
        assert set(inner.label_edges()) <= set(outer.label_edges())


def test_zero_divisor_star_definition():
    for n in range(3, 40):
        g = build_zero_divisor_star(n)
        brute = {(u, v) for u in range(1, n) for v in range(u + 1, n) if gcd(u * v % n, n) != 1}
        assert set(g.label_edges()) == brute


def test_star_leaf_distances():
    g = build_zero_divisor(22)
    d = all_pairs_distances(g)
    leaves = [v for v in g.labels if v != 11]
    assert all(d.distance(a, b) == 2 for a in leaves for b in leaves if a != b)


def test_toeplitz_16_far_corners():
    g = build_toeplitz(16, {1, 4, 8})
    assert not set(g.neighbors(1)) & set(g.neighbors(16))
    assert all_pairs_distances(g).distance(1, 16) == 3


def test_unreachable_entries():
    g = union_with_isolated(path_graph(3), [9])
    d = all_pairs_distances(g)
    assert d.distance(1, 9) is None
    assert d.entries[0, 3] == UNREACHABLE
    assert d.distance(9, 9) == 0


def test_scipy_distances_match_bfs_oracle():
    graphs = [build_toeplitz(n, S) for n, S in [(16, {1, 4, 8}), (10, {3}), (12, {2, 5}), (9, {3})]]
    graphs += [build_zero_divisor(n) for n in (12, 22, 30, 49)] + [build_zero_divisor_star(n) for n in (7, 12, 15)]
    for g in graphs:
        d = all_pairs_distances(g).to_lists()
        for i, lab in enumerate(g.labels):
            assert d[i] == bfs_distances(g, lab)


def test_distance_matrix_is_read_only():
    d = all_pairs_distances(path_graph(3))
    with pytest.raises(ValueError):
        d.entries[0, 0] = 5


def test_bipartite_examples():
    assert is_bipartite(build_zero_divisor(22))[0]
    ok, sides = is_bipartite(build_toeplitz(9, {1, 7}))
    assert ok and sides == ([1, 3, 5, 7, 9], [2, 4, 6, 8])
    assert is_bipartite(build_toeplitz(5, {1, 4})) == (False, None)


def test_components():
    g = build_toeplitz(9, {3})
    assert not g.is_connected()
    assert len(g.components()) == 3


def test_export_json():
    out = export_graph(build_toeplitz(4, {1}), "json")
    assert out == b'{"order":4,"labels":[1,2,3,4],"edges":[[1,2],[2,3],[3,4]]}\n'
    assert graph_from_dict(json.loads(out)) == build_toeplitz(4, {1})


def test_export_dot():
    out = export_graph(build_zero_divisor(9), "dot").decode()
    assert '"3";' in out and '"6";' in out
    assert out.count("--") == 1


def test_export_csv():
    lines = export_graph(build_zero_divisor(22), "csv").decode().splitlines()
    assert lines[0] == "u,v"
    assert len(lines[1:]) == 10
    assert all("11" in line.split(",") for line in lines[1:])


def test_export_rejects_unknown_format():
    with pytest.raises(InvalidInputError):
        export_graph(path_graph(2), "xml")


def test_graph_validation():
    with pytest.raises(InvalidInputError):
        Graph((1, 2), ((1, 0),))
    with pytest.raises(InvalidInputError):
        Graph.from_label_edges([1, 2], [(1, 1)])
    with pytest.raises(InvalidInputError):
        Graph.from_label_edges([1, 2], [(1, 3)])


def test_small_helpers():
    assert len(complete_graph(5).edges) == 10
    assert len(cycle_graph(5).edges) == 5
    assert cycle_graph(5) == build_toeplitz(5, {1, 4})
