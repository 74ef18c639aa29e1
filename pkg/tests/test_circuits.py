import random
from itertools import product

import pytest

from lettergrid.circuits import (
    cc_complement,
    conflict,
    conflict_cycle,
    cyclic_decoder,
    cyclic_word,
    encode,
    find_cycle_subgraph,
    find_directed_cycle,
    format_chain_circuit,
    generate_ckl,
    generate_twisted,
    parse_chain_circuit,
    random_chain_circuit,
    red_blue_split,
    topological_order,
    validate,
)
from lettergrid.errors import InputError
from lettergrid.graphs import Graph, is_isomorphic
from lettergrid.letters import decode


def decode_matches(enc, graph):
    decoded = decode(enc.decoder, enc.word)
    pos = {v: i for i, v in enumerate(enc.vertices, 1)}
    want = {(min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in graph.edges}
    return decoded.edges == frozenset(want)


def test_validate_rejects_bad_circuits():
    g = Graph(3, [(1, 2), (2, 3), (1, 3)])
    with pytest.raises(InputError, match="independent"):
        validate(Graph(3, [(1, 2)]), [(1, 2), (3,), ()])
    with pytest.raises(InputError, match="at least 3"):
        validate(Graph(2, [(1, 2)]), [(1,), (2,)])
    with pytest.raises(InputError, match="cover"):
        validate(Graph(3), [(1,), (2,), ()])
    with pytest.raises(InputError, match="stray"):
        validate(Graph(4, [(1, 3)]), [(1,), (2,), (3,), (4,)])
    # 2K2 between consecutive bags
    with pytest.raises(InputError, match="non-chain"):
        validate(
            Graph(5, [(1, 3), (2, 4), (3, 5), (4, 5)]),
            [(1, 2), (3, 4), (5,)],
        )
    # wrong direction of the bag order
    with pytest.raises(InputError, match="order"):
        validate(
            Graph(4, [(1, 3), (2, 3), (2, 4), (3, 4)]),
            [(2, 1), (3,), (4,)],
        )


def test_generate_ckl_shape():
    for k, l in product((3, 4, 5), (1, 2, 3)):
        cc = generate_ckl(k, l)
        assert cc.graph.n == k * l
        assert cc.graph.edge_count() == k * l * (l + 1) // 2
        assert all(len(b) == l for b in cc.bags)
    with pytest.raises(InputError):
        generate_ckl(2, 1)


def test_cc_complement_involution():
    for k, l in ((3, 2), (4, 1), (4, 3)):
        cc = generate_ckl(k, l)
        back = cc_complement(cc_complement(cc))
        assert back.graph == cc.graph and back.bags == cc.bags


def test_conflict_arcs():
    cc = generate_ckl(3, 1)
    conf = conflict(cc)
    assert set(conf.arcs) == {(1, 2), (2, 3), (3, 1)}


def test_topological_order_and_cycles():
    assert topological_order([1, 2, 3], {(1, 2), (2, 3)}) == [1, 2, 3]
    assert topological_order([1, 2], {(1, 2), (2, 1)}) is None
    cyc = find_directed_cycle([1, 2, 3], {(1, 2), (2, 3), (3, 1)})
    assert sorted(cyc) == [1, 2, 3]
    assert find_directed_cycle([1, 2], {(1, 2)}) is None


def test_cyclic_word_positive():
    # path-shaped circuit: u in bag1, v in bag2, w in bag3, edges u-v, v-w
    cc = validate(Graph(3, [(1, 2), (2, 3)]), [(1,), (2,), (3,)])
    enc = cyclic_word(cc)
    assert enc is not None
    assert enc.decoder == cyclic_decoder(3)
    assert decode_matches(enc, cc.graph)
    # label-for-label: letter of each position names the vertex's bag
    for sym, v in zip(enc.word, enc.vertices):
        assert sym == f"a{cc.bag_of[v] + 1}"


def test_cyclic_word_negative_with_witness():
    cc = generate_ckl(4, 1)
    assert cyclic_word(cc) is None
    cyc = conflict_cycle(cc)
    assert cyc is not None and len(cyc) >= 3


def test_find_cycle_subgraph():
    cc = generate_ckl(4, 2)
    seed = find_cycle_subgraph(cc, 1)
    assert seed is not None and len(seed) == 4
    assert find_cycle_subgraph(cc, 3) is None
    hit = find_cycle_subgraph(cc, 2)
    assert hit is not None and len(hit) == 8


def test_red_blue_split_partitions():
    cc = generate_ckl(4, 3)
    seed = find_cycle_subgraph(cc, 1)
    left, middle, right, blue, red = red_blue_split(cc, sorted(seed))
    assert left.graph.n + middle.graph.n + right.graph.n == cc.graph.n
    assert len(blue) == cc.k and len(red) == cc.k
    with pytest.raises(InputError):
        red_blue_split(cc, [1, 2])


def test_encode_reference_families():
    for k, l in product((3, 4), (1, 2, 3)):
        cc = generate_ckl(k, l)
        enc = encode(cc)
        assert decode_matches(enc, cc.graph)
        enc2 = encode(cc_complement(cc))
        assert decode_matches(enc2, cc_complement(cc).graph)


def test_encode_acyclic_uses_k_letters():
    cc = validate(Graph(3, [(1, 2), (2, 3)]), [(1,), (2,), (3,)])
    assert encode(cc).letters_used <= 3


def test_encode_random_circuits():
    rng = random.Random(7)
    for _ in range(60):
        cc = random_chain_circuit(rng)
        enc = encode(cc)
        assert decode_matches(enc, cc.graph)


def test_random_circuits_are_valid():
    rng = random.Random(3)
    for _ in range(50):
        cc = random_chain_circuit(rng)
        # validate() already ran inside; re-validate from scratch
        validate(cc.graph, cc.bags)


def test_twisted_family():
    graph, bags, signs = generate_twisted(4, 2)
    assert graph.n == 8
    # twisted pair: both directions decreasing
    assert signs[(2, 3)] == -1 and signs[(3, 2)] == -1
    # normal pairs keep one increasing side
    assert signs[(1, 2)] == -1 and signs[(2, 1)] == 1
    # bags independent
    for bag in bags:
        for a in bag:
            for b in bag:
                assert a == b or not graph.has_edge(a, b)
    # the (2,3) chain follows the m+n <= l+1 rule
    assert graph.has_edge(bags[1][0], bags[2][0])
    assert graph.has_edge(bags[1][0], bags[2][1])
    assert graph.has_edge(bags[1][1], bags[2][0])
    assert not graph.has_edge(bags[1][1], bags[2][1])


def test_parse_format_round_trip():
    cc = generate_ckl(4, 2)
    back = parse_chain_circuit(format_chain_circuit(cc))
    assert back.graph == cc.graph and back.bags == cc.bags
    with pytest.raises(InputError):
        parse_chain_circuit("graph 3\nbag 1 : 1\nbag 3 : 2 3\n")
