import pytest
from hypothesis import given, settings, strategies as st

from graphlifts.graphs import (
    Graph,
    LoopEdge,
    MalformedEdgeList,
    MalformedGraph6,
    OutOfRange,
    adjacency_matrix,
    degree_sequence,
    emit_edge_list,
    emit_graph6,
    from_adjacency_matrix,
    from_edge_list,
    neighbor_lists,
    parse_edge_list,
    parse_graph6,
)


def random_graph_strategy(max_n=12):
    """Edge sets drawn from the full upper triangle of an n-vertex graph."""

    def build(draw_result):
        n, picks = draw_result
        all_edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        chosen = [e for e, keep in zip(all_edges, picks) if keep]
        return from_edge_list(n, chosen)

    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.booleans(),
                min_size=n * (n - 1) // 2,
                max_size=n * (n - 1) // 2,
            ),
        )
    ).map(build)


def test_from_edge_list_normalizes_orientation():
    g = from_edge_list(4, [(2, 1), (3, 4), (1, 2)])
    assert g.edges == ((1, 2), (3, 4))
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(1, 3)


def test_from_edge_list_rejects_bad_input():
    with pytest.raises(LoopEdge):
        from_edge_list(3, [(2, 2)])
    with pytest.raises(OutOfRange):
        from_edge_list(3, [(1, 4)])
    with pytest.raises(OutOfRange):
        from_edge_list(3, [(0, 2)])


def test_adjacency_matrix_shape():
    g = from_edge_list(3, [(1, 2), (2, 3)])
    m = adjacency_matrix(g)
    assert m == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    assert from_adjacency_matrix(m) == g


def test_from_adjacency_matrix_validation():
    with pytest.raises(Exception):
        from_adjacency_matrix([[0, 1], [0, 0]])  # asymmetric
    with pytest.raises(Exception):
        from_adjacency_matrix([[1, 0], [0, 0]])  # diagonal
    with pytest.raises(Exception):
        from_adjacency_matrix([[0, 2], [2, 0]])  # non-binary


def test_neighbor_lists_and_degrees():
    g = from_edge_list(4, [(1, 2), (1, 3), (1, 4)])
    assert neighbor_lists(g) == [[1, 2, 3], [0], [0], [0]]
    assert degree_sequence(g) == [3, 1, 1, 1]


@given(random_graph_strategy())
def test_adjacency_matrix_symmetric_binary(g):
    m = adjacency_matrix(g)
    n = g.n
    for i in range(n):
        assert m[i][i] == 0
        for j in range(n):
            assert m[i][j] in (0, 1)
            assert m[i][j] == m[j][i]


@given(random_graph_strategy())
def test_degree_sequence_sums_to_twice_edges(g):
    assert sum(degree_sequence(g)) == 2 * len(g.edges)


@given(random_graph_strategy())
def test_graph6_roundtrip_small(g):
    assert parse_graph6(emit_graph6(g)) == g


@settings(max_examples=30)
@given(random_graph_strategy(max_n=80))
def test_graph6_roundtrip_larger(g):
    assert parse_graph6(emit_graph6(g)) == g


def test_graph6_known_encodings():
    assert emit_graph6(Graph(1, ())) == "@"
    assert emit_graph6(from_edge_list(2, [(1, 2)])) == "A_"
    assert parse_graph6("A_") == from_edge_list(2, [(1, 2)])
    assert parse_graph6(">>graph6<<A_") == from_edge_list(2, [(1, 2)])


def test_graph6_long_form():
    g = from_edge_list(70, [(1, 70), (2, 3)])
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


def test_parse_graph6_error_offsets():
    with pytest.raises(MalformedGraph6) as exc:
        parse_graph6("A" + chr(1))
    assert exc.value.offset == 1
    with pytest.raises(MalformedGraph6):
        parse_graph6("A")  # truncated body
    with pytest.raises(MalformedGraph6):
        parse_graph6("")


@given(random_graph_strategy())
def test_edge_list_roundtrip(g):
    assert parse_edge_list(emit_edge_list(g)) == g


def test_parse_edge_list_comments_and_errors():
    g = parse_edge_list("# header comment\n3 2\n1 2  # inline\n2 3\n")
    assert g == from_edge_list(3, [(1, 2), (2, 3)])
    with pytest.raises(MalformedEdgeList):
        parse_edge_list("3 2\n1 2\n")
    with pytest.raises(MalformedEdgeList):
        parse_edge_list("3\n")
    with pytest.raises(MalformedEdgeList):
        parse_edge_list("3 1\n1 2 3\n")
