import random

import pytest

from lettergrid.errors import InputError
from lettergrid.graphs import (
    Graph,
    all_graphs,
    canonical_form,
    complement,
    contains_induced,
    format_graph,
    generate,
    induced_subgraph,
    is_chain_pair,
    is_homogeneous,
    is_isomorphic,
    parse_graph,
    to_dot,
)


def relabel(g, perm):
    """perm is a dict old -> new on 1..n."""
    return Graph(g.n, [(perm[a], perm[b]) for a, b in g.edges])


def test_basic_accessors():
    g = Graph(4, [(1, 2), (2, 3)])
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(1, 3)
    assert g.neighbours(2) == {1, 3}
    assert g.degree(2) == 2 and g.degree(4) == 0
    assert g.edge_count() == 2
    assert g.sorted_edges() == [(1, 2), (2, 3)]


def test_rejects_loops_and_out_of_range():
    with pytest.raises(InputError):
        Graph(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph(3, [(1, 4)])


def test_induced_subgraph_relabels_ascending():
    g = generate("path", 5)
    sub = induced_subgraph(g, {2, 3, 5})
    # 2-3 edge survives as 1-2; vertex 5 is isolated as 3
    assert sub == Graph(3, [(1, 2)])


def test_complement_involution():
    for g in all_graphs(5):
        assert complement(complement(g)) == g


def test_homogeneous():
    g = generate("path", 4)
    assert is_homogeneous(g, {1, 2})      # edge = clique
    assert is_homogeneous(g, {1, 3})      # non-edge = independent
    assert not is_homogeneous(g, {1, 2, 4})


def test_chain_pair():
    # nested neighbourhoods: chain
    g = Graph(4, [(1, 3), (1, 4), (2, 4)])
    assert is_chain_pair(g, {1, 2}, {3, 4})
    # 2K2 between the sides: not a chain
    h = Graph(4, [(1, 3), (2, 4)])
    assert not is_chain_pair(h, {1, 2}, {3, 4})
    with pytest.raises(InputError):
        is_chain_pair(g, {1, 2}, {2, 3})


def test_families():
    assert generate("complete", 4).edge_count() == 6
    assert generate("path", 4).edge_count() == 3
    assert generate("cycle", 4).edge_count() == 4
    assert generate("matching", 3) == Graph(6, [(1, 2), (3, 4), (5, 6)])
    assert generate("edgeless", 5).edge_count() == 0
    with pytest.raises(InputError):
        generate("cycle", 2)
    with pytest.raises(InputError):
        generate("wheel", 4)


def test_canonical_form_is_relabelling_invariant():
    rng = random.Random(0)
    for g in all_graphs(5):
        order = list(range(1, g.n + 1))
        rng.shuffle(order)
        perm = {v: order[v - 1] for v in range(1, g.n + 1)}
        assert canonical_form(g) == canonical_form(relabel(g, perm))


def test_canonical_form_separates_non_isomorphic():
    gs = all_graphs(5)
    forms = {canonical_form(g) for g in gs}
    assert len(forms) == len(gs)


def test_is_isomorphic():
    p4 = generate("path", 4)
    assert is_isomorphic(p4, relabel(p4, {1: 3, 2: 1, 3: 4, 4: 2}))
    assert not is_isomorphic(p4, generate("cycle", 4))
    assert not is_isomorphic(p4, generate("path", 5))


def test_contains_induced():
    host = generate("cycle", 5)
    p3 = generate("path", 3)
    assert contains_induced(host, p3) == {1, 2, 3}  # lexicographically least
    assert contains_induced(host, generate("complete", 3)) is None
    assert contains_induced(generate("path", 2), p3) is None


def test_all_graphs_counts():
    # number of non-isomorphic graphs on n vertices (classical sequence)
    for n, count in ((1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)):
        assert len(all_graphs(n)) == count


def test_all_graphs_pairwise_non_isomorphic():
    gs = all_graphs(4)
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            assert not is_isomorphic(gs[i], gs[j])


def test_parse_format_round_trip():
    g = Graph(4, [(1, 2), (3, 4)])
    assert parse_graph(format_graph(g)) == g
    assert parse_graph("graph 3  # comment\ne 1 2\n") == Graph(3, [(1, 2)])
    with pytest.raises(InputError):
        parse_graph("e 1 2\n")
    with pytest.raises(InputError):
        parse_graph("graph 3\nedge 1 2\n")


def test_to_dot_mentions_every_edge():
    g = Graph(3, [(1, 2), (2, 3)])
    dot = to_dot(g)
    assert "1 -- 2;" in dot and "2 -- 3;" in dot
