import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BRIDGED, K33M
from graph_ideal.errors import ParseError, ResourceLimit, ValidationError
from graph_ideal.graph import (Cycle, Graph, biconnected_blocks, complete_bipartite,
                               complete_graph, connected_components, cycle_graph,
                               enumerate_simple_cycles, is_bipartite, is_two_connected,
                               parse_graph, path_graph, theta_graph, upper_bound_witness)


@st.composite
def graphs(draw, max_vertices=7, max_edges=10):
    n = draw(st.integers(2, max_vertices))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=max_edges, unique=True))
    return Graph.from_edges(chosen)


def to_nx(g):
    h = nx.Graph()
    h.add_edges_from(g.edges)
    return h


def test_parse_edge_list():
    g = parse_graph("1 2\n2 3\n3 4\n1 4")
    assert g.vertices == (1, 2, 3, 4)
    assert g.edges == ((1, 2), (1, 4), (2, 3), (3, 4))
    assert g.adjacency[1] == (2, 4)


def test_parse_comments_and_json():
    assert parse_graph("# c\n2 1  # x\n") == Graph.from_edges([(1, 2)])
    g = parse_graph('{"edges":[[1,2],[2,3],[1,3],[3,4],[4,5],[5,6],[4,6]]}')
    assert g == BRIDGED and g.num_vertices == 6 and g.num_edges == 7
    assert parse_graph("[[1, 2]]").edges == ((1, 2),)


@pytest.mark.parametrize("text,err", [
    ("1 1", ValidationError), ("1 2\n2 1", ValidationError), ("", ParseError),
    ("1 2 3", ParseError), ("a b", ParseError), ('{"edges": [[1]]}', ParseError),
    ('{"vertices": [1, 2, 3], "edges": [[1, 2]]}', ValidationError),
    ('{"edges": [[0, 1]]}', ValidationError), ('{"nodes": []}', ParseError),
])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_graph(text)


def test_components_and_bipartite():
    assert connected_components(cycle_graph(4))[0] == 1
    assert connected_components(Graph.from_edges([(1, 2), (3, 4)]))[0] == 2
    assert connected_components(BRIDGED)[0] == 1
    r = is_bipartite(cycle_graph(4))
    assert r.flag and r.partition == ((1, 3), (2, 4))
    r = is_bipartite(complete_graph(3))
    assert not r.flag and len(r.odd_cycle) == 3
    assert is_bipartite(K33M).flag


def test_cycles_examples():
    assert enumerate_simple_cycles(path_graph(4)) == []
    assert [len(c) for c in enumerate_simple_cycles(complete_graph(3))] == [3]
    assert sorted(len(c) for c in enumerate_simple_cycles(BRIDGED)) == [3, 3]
    assert len(enumerate_simple_cycles(complete_graph(4))) == 7
    with pytest.raises(ResourceLimit):
        enumerate_simple_cycles(complete_graph(6), cap=10)


def test_blocks_examples():
    assert set(biconnected_blocks(path_graph(3))) == {((1, 2),), ((2, 3),)}
    assert list(biconnected_blocks(cycle_graph(4))) == [cycle_graph(4).edges]
    blocks = {frozenset(b) for b in biconnected_blocks(BRIDGED)}
    assert blocks == {frozenset({(1, 2), (1, 3), (2, 3)}), frozenset({(3, 4)}),
                      frozenset({(4, 5), (4, 6), (5, 6)})}
    assert is_two_connected(K33M) and not is_two_connected(BRIDGED)


def test_upper_bound_witness():
    w = upper_bound_witness(cycle_graph(4))
    assert w.num_edges == 3 and connected_components(w)[0] == 1
    assert upper_bound_witness(complete_graph(3)) == complete_graph(3)
    w = upper_bound_witness(BRIDGED)
    assert w.num_vertices == 6 and connected_components(w)[0] == 1
    cycles = enumerate_simple_cycles(w)
    assert len(cycles) == 1 and len(cycles[0]) % 2 == 1


def test_families():
    assert complete_bipartite(2, 3).num_edges == 6
    t = theta_graph(1, 3, 3)
    assert t.num_vertices == 6 and t.num_edges == 7 and is_bipartite(t).flag
    assert Cycle.from_vertices([1, 2, 3, 4]).is_even


def test_json_roundtrip():
    assert parse_graph(__import__("json").dumps(K33M.to_json())) == K33M


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_cycles_match_networkx(g):
    ours = sorted(sorted(c.edges) for c in enumerate_simple_cycles(g))
    theirs = []
    for cyc in nx.simple_cycles(to_nx(g)):
        if len(cyc) >= 3:
            vs = list(cyc) + [cyc[0]]
            theirs.append(sorted(tuple(sorted(p)) for p in zip(vs, vs[1:])))
    assert ours == sorted(theirs)


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_structure_matches_networkx(g):
    h = to_nx(g)
    assert connected_components(g)[0] == nx.number_connected_components(h)
    assert is_bipartite(g).flag == nx.is_bipartite(h)
    ours = {frozenset(b) for b in biconnected_blocks(g)}
    theirs = {frozenset(tuple(sorted(e)) for e in comp)
              for comp in nx.biconnected_component_edges(h)}
    assert ours == theirs
    r = is_bipartite(g)
    if r.flag:
        left = set(r.partition[0])
        assert all((u in left) != (v in left) for u, v in g.edges)
    else:
        assert len(r.odd_cycle) % 2 == 1 and r.odd_cycle.edges <= set(g.edges)


@settings(max_examples=50, deadline=None)
@given(graphs())
def test_upper_bound_witness_properties(g):
    w = upper_bound_witness(g)
    assert w.vertices == g.vertices
    assert connected_components(w)[0] == connected_components(g)[0]
    assert is_bipartite(w).flag == is_bipartite(g).flag
