import io

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_graph
from twoeig import graph6
from twoeig.errors import CapacityError
from twoeig.graph import (
    Graph,
    VertexSet,
    add_isolated_edges,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    is_bipartite,
    is_connected,
    matching,
    petersen_graph,
    star_graph,
)


def test_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(ValueError):
        Graph.from_edges(0, [])
    with pytest.raises(CapacityError):
        Graph.from_edges(513, [])
    Graph.from_edges(512, [(0, 511)])


def test_basic_queries():
    g = petersen_graph()
    assert g.num_edges == 15 and set(g.degrees()) == {3}
    assert not is_bipartite(g) and is_connected(g)
    assert is_bipartite(cycle_graph(6))
    s = star_graph(3)
    assert s.degree(0) == 3 and s.neighbors(0) == VertexSet.of([1, 2, 3])


def test_union_and_padding():
    g = add_isolated_edges(complete_graph(3), 2)
    assert g.n == 7 and g.num_edges == 5
    comps = connected_components(g)
    assert [len(c) for c in comps] == [3, 2, 2]
    with pytest.raises(CapacityError):
        disjoint_union(matching(200), matching(57))


def test_induced_subgraph_renumbers():
    h = induced_subgraph(petersen_graph(), [0, 1, 2, 3, 4])
    assert h.n == 5 and sorted(h.degrees()) == [2] * 5
    with pytest.raises(ValueError):
        induced_subgraph(petersen_graph(), [])


def test_complement_and_flip():
    g = cycle_graph(5)
    assert g.complement().num_edges == 5
    assert g.flip_edge(0, 2).num_edges == 6
    assert g.flip_edge(0, 1).num_edges == 4


@given(st.integers(1, 70), st.integers(0, 2**32))
def test_graph6_roundtrip_against_networkx(n, seed):
    import random

    g = random_graph(random.Random(seed), n, 0.3)
    line = graph6.encode(g)
    assert graph6.decode(line) == g
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(g.edges())
    ref = nx.to_graph6_bytes(h, nodes=list(range(n)), header=False).decode().strip()
    assert line == ref


def test_graph6_stream_and_header():
    g = petersen_graph()
    buf = io.StringIO()
    graph6.write_graph6([g, cycle_graph(4)], buf)
    buf.seek(0)
    assert list(graph6.read_graph6(buf)) == [g, cycle_graph(4)]
    assert graph6.decode(">>graph6<<" + graph6.encode(g)) == g
    assert graph6.encode(petersen_graph()) == "IheA@GUAo"


def test_graph6_rejects_bad_input():
    for bad in ["", "?", "C~~", "A\x01"]:
        with pytest.raises(ValueError):
            graph6.decode(bad)
