import pytest

from lfmd.errors import InvalidInputError, NoEdgesError, NotAdjacentError
from lfmd.graphs import all_pairs_distances, build_toeplitz, build_zero_divisor, build_zero_divisor_star, complete_graph, path_graph
from lfmd.resolving import (
    diff_against_listing,
    edge_cardinalities,
    edge_resolving_profile,
    ell_beta,
    global_resolving_neighborhood,
    local_resolving_neighborhood,
)

from listings import T16_1_4_8, ZSTAR_12


def _brute_neighborhood(g, u, v):
    d = all_pairs_distances(g)
    return tuple(x for x in g.labels if d.distance(x, u) != d.distance(x, v))


def test_t16_edge_6_7():
    g = build_toeplitz(16, {1, 4, 8})
    R = local_resolving_neighborhood(g, all_pairs_distances(g), (6, 7))
    assert set(R) == set(range(1, 17)) - {4, 9}
    assert len(R) == 14


def test_connected_bipartite_edges_resolve_everything():
    for g in (build_zero_divisor(22), build_toeplitz(9, {1, 7}), path_graph(6)):
        d = all_pairs_distances(g)
        for e in g.label_edges():
            assert local_resolving_neighborhood(g, d, e) == g.labels


def test_complete_graph_edges_resolve_only_endpoints():
    g = complete_graph(4)
    d = all_pairs_distances(g)
    for u, v in g.label_edges():
        assert local_resolving_neighborhood(g, d, (u, v)) == (u, v)


def test_local_rejects_non_edges():
    g = path_graph(3)
    with pytest.raises(NotAdjacentError):
        local_resolving_neighborhood(g, all_pairs_distances(g), (1, 3))


def test_ell_beta_examples():
    assert ell_beta(build_toeplitz(16, {1, 4, 8})) == (8, 14)
    assert ell_beta(build_zero_divisor_star(12)) == (2, 5)
    assert ell_beta(complete_graph(5)) == (2, 2)


def test_ell_beta_needs_edges():
    with pytest.raises(NoEdgesError):
        ell_beta(build_zero_divisor_star(7))


def test_global_neighborhood_examples():
    g = path_graph(3)
    d = all_pairs_distances(g)
    assert global_resolving_neighborhood(g, d, (1, 3)) == (1, 3)
    assert global_resolving_neighborhood(g, d, (1, 2)) == (1, 2, 3)
    with pytest.raises(InvalidInputError):
        global_resolving_neighborhood(g, d, (2, 2))


def test_edgeless_pair_is_itself():
    g = build_zero_divisor_star(7)
    d = all_pairs_distances(g)
    assert global_resolving_neighborhood(g, d, (2, 5)) == (2, 5)


def test_disconnected_third_vertex_does_not_resolve():
    g = build_toeplitz(5, {3})  # edges 1-4, 2-5, vertex 3 isolated
    d = all_pairs_distances(g)
    assert local_resolving_neighborhood(g, d, (1, 4)) == (1, 4)


def test_cardinalities_match_brute_force():
    for g in (build_toeplitz(14, {2, 3, 7}), build_zero_divisor_star(18), build_zero_divisor(45)):
        cards = edge_cardinalities(g)
        for (u, v), c in zip(g.label_edges(), cards):
            assert c == len(_brute_neighborhood(g, u, v))


def test_profile_witnesses_and_order():
    prof = edge_resolving_profile(build_toeplitz(16, {1, 4, 8}))
    assert [r.edge for r in prof.records] == sorted(r.edge for r in prof.records)
    assert all(prof.cardinalities()[e] == 8 for e in prof.ell_witnesses)
    assert all(prof.cardinalities()[e] == 14 for e in prof.beta_witnesses)
    assert (6, 7) in prof.beta_witnesses


def test_profile_serializations():
    prof = edge_resolving_profile(build_zero_divisor(9))
    assert prof.to_csv() == "u,v,cardinality,neighborhood\n3,6,2,3 6\n"
    assert '"ell": 2' in prof.to_json()


def test_t16_listing_agrees():
    g = build_toeplitz(16, {1, 4, 8})
    assert len(T16_1_4_8) == len(g.edges)
    assert diff_against_listing(edge_resolving_profile(g), g.labels, T16_1_4_8) == []


def test_zstar12_listing_agrees():
    g = build_zero_divisor_star(12)
    assert len(ZSTAR_12) == len(g.edges)
    assert diff_against_listing(edge_resolving_profile(g), g.labels, ZSTAR_12) == []


def test_listing_diff_reports_disagreements():
    g = build_toeplitz(16, {1, 4, 8})
    listing = dict(T16_1_4_8)
    listing[(6, 7)] = {4}
    listing[(1, 3)] = set()
    report = diff_against_listing(edge_resolving_profile(g), g.labels, listing)
    assert {"edge": (1, 3), "problem": "listed pair is not an edge"} in report
    assert {"edge": (6, 7), "listed_missing": [4], "computed_missing": [4, 9]} in report
