import pytest
from hypothesis import given, settings

from conftest import BRIDGED, BRIDGED_ORDER
from oracles import evaluate, points
from test_graph import graphs
from graph_ideal.algebra import (MonomialOrder, PolynomialRing, PrimeField, VariableSpace,
                                 normal_form)
from graph_ideal.errors import ResourceLimit, ValidationError
from graph_ideal.graph import Graph, complete_graph, cycle_graph, path_graph
from graph_ideal.groebner import (GraphVariables, build_extended_generators, buchberger,
                                  ideal_of_graph, is_groebner_basis, is_reduced)

C4 = cycle_graph(4)
C4_ORDER = [(1, 2), (2, 3), (3, 4), (1, 4)]
C4_LIST = ["t1_2*t3_4 - t2_3*t1_4", "t1_2^2 - t1_4^2", "t2_3^2 - t1_4^2",
           "t3_4^2 - t1_4^2", "t1_2*t2_3 - t3_4*t1_4", "t1_2*t1_4 - t3_4*t2_3"]


def test_extended_generators():
    g = Graph.from_edges([(1, 2)])
    gens = build_extended_generators(g)
    ring = gens[0].ring
    assert set(gens) == {ring.parse("t1_2 - x1*x2*z"), ring.parse("x1^2 - x2^2")}
    assert len(build_extended_generators(C4)) == 7
    assert len(build_extended_generators(BRIDGED)) == 12


def test_buchberger_small():
    space = VariableSpace(("t1_2", "t1_4"))
    ring = PolynomialRing(PrimeField(3), space, MonomialOrder("grevlex"))
    f = ring.parse("t1_2^2 - t1_4^2")
    assert buchberger([f]).elements == (f,)
    space = VariableSpace(("x1", "x2", "x3"))
    ring = PolynomialRing(PrimeField(3), space, MonomialOrder("grevlex"))
    gens = [ring.parse("x1^2 - x3^2"), ring.parse("x2^2 - x3^2")]
    assert set(buchberger(gens).elements) == set(gens)


def test_single_edge_is_zero_ideal():
    assert len(ideal_of_graph(Graph.from_edges([(1, 2)]))) == 0


def test_c4_matches_listed_generators():
    gb = ideal_of_graph(C4, 3, C4_ORDER)
    listed = [gb.ring.parse(s) for s in C4_LIST]
    assert all(not gb.reduce(f) for f in listed)
    assert all(not normal_form(f, buchberger(listed).elements) for f in gb.elements)


def test_bridged_triangles_basis():
    gb = ideal_of_graph(BRIDGED, 3, BRIDGED_ORDER)
    assert len(gb) == 16
    assert sum(1 for f in gb if f.degree == 3) == 10
    assert {str(f) for f in gb if f.degree == 2} == {
        f"{v}^2 - t4_6^2" for v in ("t1_2", "t2_3", "t1_3", "t3_4", "t4_5", "t5_6")}


def test_k3_complete_intersection():
    gb = ideal_of_graph(complete_graph(3))
    assert gb.strings() == ["t1_2^2 - t2_3^2", "t1_3^2 - t2_3^2"]


def test_field_independence_c4():
    a, b = ideal_of_graph(C4, 3), ideal_of_graph(C4, 5)
    assert a.leading_monomials() == b.leading_monomials()
    assert a.normalized() == b.normalized()


def test_t_order_validation():
    with pytest.raises(ValidationError):
        GraphVariables.of(C4, [(1, 2), (2, 3)])


def test_pair_cap():
    with pytest.raises(ResourceLimit):
        ideal_of_graph(cycle_graph(6), 3, pair_cap=2)


def test_serialization():
    d = ideal_of_graph(complete_graph(3)).to_json()
    assert d == {"characteristic": 3, "order": "grevlex",
                 "variables": ["t1_2", "t1_3", "t2_3"],
                 "elements": ["t1_2^2 - t2_3^2", "t1_3^2 - t2_3^2"]}


@pytest.mark.parametrize("g", [C4, BRIDGED, complete_graph(4), path_graph(4), cycle_graph(5)])
def test_basis_is_reduced_and_complete(g):
    gb = ideal_of_graph(g)
    assert is_groebner_basis(gb) and is_reduced(gb)


@settings(max_examples=25, deadline=None)
@given(graphs(max_vertices=6, max_edges=7))
def test_basis_properties(g):
    for p in (3, 5):
        gb = ideal_of_graph(g, p)
        assert is_reduced(gb)
        assert is_groebner_basis(gb)
        pts = points(g, p)
        for f in gb:
            # homogeneous binomials with coefficients 1 and -1
            assert f.is_homogeneous() and len(f) == 2
            assert sorted(c for _, c in f.signed_terms()) == [-1, 1]
            assert all(evaluate(f, pt, p) == 0 for pt in pts)


@settings(max_examples=20, deadline=None)
@given(graphs(max_vertices=6, max_edges=7))
def test_subgraph_compatibility(g):
    """Generators of I(X_H) lie in I(X_G) for every subgraph H, and
    elements of I(X_G) using only edges of H lie in I(X_H)."""
    if g.num_edges < 2:
        return
    h = g.subgraph(g.edges[:-1])
    gb_g, gb_h = ideal_of_graph(g), ideal_of_graph(h)
    pos = [g.edge_index[e] for e in h.edges]
    for f in gb_h:
        lifted = gb_g.ring.from_terms(
            (tuple(m[pos.index(i)] if i in pos else 0 for i in range(g.num_edges)), c)
            for m, c in f.terms)
        assert not gb_g.reduce(lifted)
    last = g.num_edges - 1
    for f in gb_g:
        if all(m[last] == 0 for m in f.monomials):
            down = gb_h.ring.from_terms((tuple(m[i] for i in pos), c) for m, c in f.terms)
            assert not gb_h.reduce(down)


@settings(max_examples=25, deadline=None)
@given(graphs(max_vertices=6, max_edges=7))
def test_characteristic_two_differs_only_by_signs(g):
    a, b = ideal_of_graph(g, 2), ideal_of_graph(g, 3)
    assert a.leading_monomials() == b.leading_monomials()
    unsigned = {tuple((m, abs(c)) for m, c in f.signed_terms()) for f in b}
    assert unsigned == {f.terms for f in a}
