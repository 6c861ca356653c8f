import pytest
from hypothesis import given, settings, strategies as st

from majpart.families import figure2_k5, gadget_append, triangle_nonmono
from majpart.graph import (
    BLUE,
    RED,
    DuplicateEdge,
    ECGSyntaxError,
    EdgeColoredGraph,
    EmptyGraph,
    SelfLoop,
    VertexOutOfRange,
    add_edge,
    color_degree,
    color_degree_into,
    color_subgraph,
    edge_connectivity,
    max_degree,
    min_color_degree,
    parse_graph,
    serialize_graph,
)


def test_add_edge_basic():
    g = add_edge(EdgeColoredGraph(2), 0, 1, RED)
    assert g.m == 1 and g.has_edge(1, 0, RED) and not g.has_edge(0, 1, BLUE)


def test_parallel_edges_of_distinct_colors():
    g = add_edge(add_edge(EdgeColoredGraph(2), 0, 1, RED), 0, 1, BLUE)
    assert g.m == 2


def test_add_edge_errors():
    g = add_edge(EdgeColoredGraph(2), 0, 1, RED)
    with pytest.raises(DuplicateEdge):
        add_edge(g, 1, 0, RED)
    with pytest.raises(SelfLoop):
        add_edge(g, 1, 1, BLUE)
    with pytest.raises(VertexOutOfRange):
        add_edge(g, 0, 2, BLUE)
    with pytest.raises(DuplicateEdge):
        EdgeColoredGraph.from_edges(2, [(0, 1, 1), (1, 0, 1)])


def test_graph_is_immutable():
    g = triangle_nonmono()
    with pytest.raises(Exception):
        g.n = 4


def test_color_degrees_two_colored_k5():
    g = figure2_k5()
    assert all(color_degree(g, v, c) == 2 for v in range(5) for c in (RED, BLUE))
    assert min_color_degree(g) == 2 and max_degree(g) == 4


def test_color_degree_isolated_and_out_of_range():
    g = EdgeColoredGraph(3)
    assert color_degree(g, 2, RED) == color_degree(g, 2, BLUE) == 0
    with pytest.raises(VertexOutOfRange):
        color_degree(g, 3, RED)


def test_gadget_x1_degrees():
    g = gadget_append(EdgeColoredGraph(3), 0, 1, 2)
    assert (color_degree(g, 3, RED), color_degree(g, 3, BLUE)) == (5, 1)


def test_color_degree_into():
    g = figure2_k5()
    # red neighbours of x3 (vertex 2) are x1 and x5
    assert set(g.neighbors(2, RED)) == {0, 4}
    assert color_degree_into(g, 2, RED, {0, 4}) == 2
    assert color_degree_into(g, 2, RED, {3, 4}) == 1
    assert color_degree_into(g, 2, RED, set()) == 0
    assert color_degree_into(g, 2, RED, range(5)) == color_degree(g, 2, RED)


def test_min_max_degree_edge_cases():
    g = EdgeColoredGraph.from_edges(2, [(0, 1, RED)])
    assert min_color_degree(g) == 0 and max_degree(g) == 1
    c4 = EdgeColoredGraph.from_edges(4, [(0, 1, BLUE), (1, 2, RED), (2, 3, BLUE), (3, 0, RED)])
    assert min_color_degree(c4) == 1 and max_degree(c4) == 2
    with pytest.raises(EmptyGraph):
        min_color_degree(EdgeColoredGraph(0))
    with pytest.raises(EmptyGraph):
        max_degree(EdgeColoredGraph(0))


def test_parse_simple():
    g = parse_graph("p ecg 2 1\ne 1 2 1\n")
    assert g == EdgeColoredGraph.from_edges(2, [(0, 1, RED)])


@pytest.mark.parametrize(
    "text",
    [
        "p ecg 2 1\ne 1 1 1\n",
        "p ecg 2 1\ne 1 3 1\n",
        "p ecg 2 1\ne 1 2 3\n",
        "p ecg 2 2\ne 1 2 1\n",
        "p ecg 2 2\ne 1 2 1\ne 2 1 1\n",
        "e 1 2 1\n",
        "p ecg 2 1\nx 1 2 1\n",
        "p ecg two 1\ne 1 2 1\n",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(ECGSyntaxError):
        parse_graph(text)


def test_parse_error_carries_line_number():
    with pytest.raises(ECGSyntaxError) as info:
        parse_graph("c hello\np ecg 2 1\ne 1 1 1\n")
    assert info.value.lineno == 3


def test_roundtrip_triangle():
    g = triangle_nonmono()
    assert parse_graph(serialize_graph(g, comments=["triangle"])) == g


graphs = st.integers(min_value=1, max_value=9).flatmap(
    lambda n: st.sets(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.sampled_from([RED, BLUE])).filter(
            lambda e: e[0] != e[1]
        ),
        max_size=30,
    ).map(lambda es: EdgeColoredGraph(n, frozenset((min(u, v), max(u, v), c) for u, v, c in es)))
)


@settings(max_examples=200, deadline=None)
@given(graphs)
def test_roundtrip_property(g):
    assert parse_graph(serialize_graph(g)) == g


@settings(max_examples=200, deadline=None)
@given(graphs, st.data())
def test_degree_properties(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1)))
    rest = set(range(g.n)) - s
    for c in (RED, BLUE):
        assert sum(color_degree(g, v, c) for v in range(g.n)) == 2 * len(g.color_edges(c))
        for v in range(g.n):
            assert color_degree_into(g, v, c, s) + color_degree_into(g, v, c, rest) == color_degree(g, v, c)


def test_color_subgraph_and_connectivity():
    g = figure2_k5()
    red = color_subgraph(g, RED)
    assert red.m == 5 and all(c == RED for _, _, c in red)
    assert edge_connectivity(g, RED) == 2
    assert edge_connectivity(EdgeColoredGraph.from_edges(3, [(0, 1, RED)]), RED) == 0
