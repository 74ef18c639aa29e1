import random
from itertools import combinations

import pytest

from lettergrid.circuits import (
    conflict as cc_conflict,
    generate_ckl,
    random_chain_circuit,
    validate as cc_validate,
)
from lettergrid.errors import BudgetExhausted, InputError
from lettergrid.graphs import Graph
from lettergrid.loh import (
    cells,
    conflict,
    consistency_witness_cycle,
    format_loh,
    from_chain_circuit,
    global_inconsistency,
    is_globally_consistent,
    parse_loh,
    split,
    validate,
)

TRIANGLE = validate(
    {"u", "v", "w"},
    {"e1": ("u", "v"), "e2": ("v", "w"), "e3": ("w", "u")},
)


def test_validate_rejects_bad_input():
    with pytest.raises(InputError, match="empty"):
        validate({"x"}, {"e": (), "f": ("x",)})
    with pytest.raises(InputError, match="unknown"):
        validate({"x"}, {"e": ("x", "y")})
    with pytest.raises(InputError, match="isolated"):
        validate({"x", "y"}, {"e": ("x",)})
    with pytest.raises(InputError, match="repeats"):
        validate({"x", "y"}, {"e": ("x", "y", "x")})
    with pytest.raises(InputError, match="ordered differently"):
        validate({"1", "2"}, {"e1": ("1", "2"), "e2": ("2", "1")})


def test_cells_by_membership_signature():
    h = validate({1, 2, 3, 4}, {"e1": (1, 2, 3), "e2": (2, 3, 4)})
    assert cells(h) == [frozenset({1}), frozenset({2, 3}), frozenset({4})]
    # the circuit Loh of C_{3,1} has three singleton cells
    h3 = from_chain_circuit(generate_ckl(3, 1))
    assert all(len(c) == 1 for c in cells(h3))


def test_conflict_arcs():
    h = validate({1, 2}, {"e1": (1, 2)})
    assert set(conflict(h).arcs) == {(1, 2)}
    tri = from_chain_circuit(generate_ckl(3, 1))
    assert set(conflict(tri).arcs) == {(1, 2), (2, 3), (3, 1)}
    # disjoint hyperedges give disjoint chains
    h2 = validate({1, 2, 3, 4}, {"e1": (1, 2), "e2": (3, 4)})
    assert set(conflict(h2).arcs) == {(1, 2), (3, 4)}


def test_global_consistency():
    h = validate({1, 2, 3, 4}, {"e1": (1, 2, 3), "e2": (2, 3, 4)})
    assert is_globally_consistent(h) == (1, 2, 3, 4)
    assert is_globally_consistent(TRIANGLE) is None
    cyc = consistency_witness_cycle(TRIANGLE)
    assert cyc is not None and len(cyc) == 3
    single = validate({1, 2}, {"e": (2, 1)})
    assert is_globally_consistent(single) == (2, 1)


def test_consistent_order_restricts_to_every_edge():
    rng = random.Random(5)
    for _ in range(50):
        cc = random_chain_circuit(rng)
        h = from_chain_circuit(cc)
        order = is_globally_consistent(h)
        if order is None:
            continue
        pos = {x: i for i, x in enumerate(order)}
        for members in h.edges.values():
            assert list(members) == sorted(members, key=pos.get)


def test_split_formula():
    h = validate({1, 2, 3}, {"e": (1, 2, 3)})
    out = split(h, 2)
    assert out.edges == {"e<": (1,), "e>": (3,)}
    # splitting the triangle at u leaves only the v -> w constraint
    out2 = split(TRIANGLE, "u")
    assert is_globally_consistent(out2) is not None
    assert set(out2.edges.values()) == {("v",), ("w",), ("v", "w")}
    # partner of a split vertex in a 2-edge survives in a singleton edge
    h2 = validate({1, 2}, {"e": (1, 2)})
    assert split(h2, 1).edges == {"e>": (2,)}
    with pytest.raises(InputError):
        split(h, 99)


def test_split_never_adds_conflict_arcs():
    rng = random.Random(11)
    for _ in range(30):
        cc = random_chain_circuit(rng)
        h = from_chain_circuit(cc)
        before = set(conflict(h).arcs)
        for x in sorted(h.elements)[:3]:
            after = set(conflict(split(h, x)).arcs)
            assert after <= before


def test_global_inconsistency():
    assert global_inconsistency(TRIANGLE) == 1
    consistent = validate({1, 2, 3}, {"e1": (1, 2), "e2": (2, 3)})
    assert global_inconsistency(consistent) == 0
    # C_{4,2}: BFS answer cross-checked by exhaustive shallow enumeration
    h = from_chain_circuit(generate_ckl(4, 2))
    val = global_inconsistency(h)
    assert val == 2
    assert all(
        is_globally_consistent(split(h, x)) is None for x in h.elements
    )
    assert any(
        is_globally_consistent(split(split(h, x), y)) is not None
        for x, y in combinations(sorted(h.elements), 2)
    )


def test_global_inconsistency_budget():
    with pytest.raises(BudgetExhausted) as exc:
        global_inconsistency(from_chain_circuit(generate_ckl(4, 2)), budget=1)
    assert exc.value.best == 2  # depth reached is a lower bound


def test_consistency_iff_zero_inconsistency():
    rng = random.Random(2)
    for _ in range(60):
        cc = random_chain_circuit(rng, rng.choice([3, 4]), 3)
        if cc.graph.n > 10:
            continue
        h = from_chain_circuit(cc)
        assert (is_globally_consistent(h) is not None) == (global_inconsistency(h) == 0)


def test_from_chain_circuit_structure():
    cc = generate_ckl(4, 1)
    h = from_chain_circuit(cc)
    assert len(h.edges) == 4
    assert h.elements == frozenset({1, 2, 3, 4})
    assert is_globally_consistent(h) is None  # directed 4-cycle in conflict
    # acyclic circuit gives a consistent Loh
    path = cc_validate(Graph(3, [(1, 2), (2, 3)]), [(1,), (2,), (3,)])
    assert is_globally_consistent(from_chain_circuit(path)) is not None


def test_from_chain_circuit_conflict_contains_circuit_conflict():
    rng = random.Random(9)
    for _ in range(50):
        cc = random_chain_circuit(rng)
        harcs = set(conflict(from_chain_circuit(cc)).arcs)
        for arc in cc_conflict(cc).arcs:
            assert arc in harcs


def test_parse_format_round_trip():
    text = format_loh(TRIANGLE)
    back = parse_loh(text)
    assert back.edges == {k: tuple(str(x) for x in v) for k, v in TRIANGLE.edges.items()}
    with pytest.raises(InputError):
        parse_loh("edge e1\n")
    with pytest.raises(InputError):
        parse_loh("elem x\nfoo\n")
    with pytest.raises(InputError):
        parse_loh("elem x y\nedge e : x y\nedge e : y x\n")
