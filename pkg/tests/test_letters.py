import pytest

from lettergrid.errors import BudgetExhausted, InputError
from lettergrid.graphs import (
    Graph,
    all_graphs,
    complement,
    generate,
    induced_subgraph,
    is_isomorphic,
)
from lettergrid.letters import (
    Decoder,
    certificate_from_word,
    cochromatic_number,
    decode,
    fits_letters,
    format_decoder,
    format_word,
    lettericity,
    lettericity_witness,
    minimal_obstructions,
    parse_decoder,
    parse_word,
    recognize,
    subword_leq,
    verify_certificate,
)

REF_DECODER = Decoder(
    "abcd",
    [("a", "a"), ("b", "b"), ("a", "b"), ("a", "c"), ("a", "d"),
     ("d", "a"), ("b", "d"), ("d", "c")],
)


def test_decode_reference_word():
    g = decode(REF_DECODER, "acdbad")
    assert g.edges == frozenset(
        {(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (3, 5), (4, 6), (5, 6)}
    )


def test_decode_rejects_unknown_symbol():
    with pytest.raises(InputError):
        decode(REF_DECODER, "axe")


def test_decoder_rejects_bad_input():
    with pytest.raises(InputError):
        Decoder("aa", [])
    with pytest.raises(InputError):
        Decoder("ab", [("a", "z")])


def test_p4_over_two_letters():
    d = Decoder("ab", [("a", "b")])
    assert is_isomorphic(decode(d, "abab"), generate("path", 4))


def test_certificates():
    w = tuple("acdbad")
    cert = certificate_from_word(w)
    g = decode(REF_DECODER, w)
    assert verify_certificate(g, cert, REF_DECODER)
    # wrong letter at one position breaks the exact match
    bad = dict(cert.assignment)
    bad[1] = "b"
    assert not verify_certificate(g, type(cert)(bad, cert.order), REF_DECODER)
    with pytest.raises(InputError):
        verify_certificate(Graph(3), cert, REF_DECODER)


def test_recognize_round_trip():
    for w in ("abab", "aabb", "abba"):
        d = Decoder("ab", [("a", "b")])
        g = decode(d, w)
        found = recognize(d, g)
        assert found is not None
        assert is_isomorphic(decode(d, found), g)


def test_recognize_negative():
    d = Decoder("a", [])  # decodes only edgeless graphs
    assert recognize(d, generate("path", 2)) is None


def test_cochromatic_number():
    assert cochromatic_number(Graph(0)) == 0
    assert cochromatic_number(generate("complete", 4)) == 1
    assert cochromatic_number(generate("edgeless", 4)) == 1
    assert cochromatic_number(generate("path", 4)) == 2
    assert cochromatic_number(generate("cycle", 5)) == 3


def test_cochromatic_lower_bounds_lettericity():
    for g in all_graphs(5):
        assert cochromatic_number(g) <= lettericity(g)


def test_lettericity_matching_family():
    for n in range(1, 4):
        assert lettericity(generate("matching", n)) == n


def test_lettericity_small_values():
    assert lettericity(Graph(0)) == 0
    assert lettericity(generate("complete", 5)) == 1
    assert lettericity(generate("path", 4)) == 2
    assert lettericity(generate("cycle", 5)) == 3


def test_lettericity_invariant_under_complement_small():
    # complement swaps arcs on the same alphabet, so lett is preserved
    for g in all_graphs(5):
        assert lettericity(g) == lettericity(complement(g))


def test_witness_decodes_back():
    for g in all_graphs(4) + [generate("cycle", 5), generate("matching", 3)]:
        k, d, w, cert = lettericity_witness(g)
        assert len(d.letters) == k
        assert len(set(w)) == k
        assert verify_certificate(g, cert, d)


def test_fits_letters_monotone_in_k():
    g = generate("cycle", 5)
    assert not fits_letters(g, 2)
    assert fits_letters(g, 3)
    assert fits_letters(g, 4)


def test_budget_exhaustion_reports_interval():
    g = generate("matching", 3)
    from lettergrid.errors import Budget

    with pytest.raises(BudgetExhausted) as exc:
        lettericity(g, Budget(20))
    # either the cochromatic stage or the fitting stage may run dry
    assert exc.value.best is None or exc.value.best[1] == g.n


def test_minimal_obstructions_one_letter():
    obs = minimal_obstructions(1, 3)
    assert len(obs) == 2
    targets = [generate("path", 3), Graph(3, [(1, 2)])]
    for t in targets:
        assert any(is_isomorphic(o, t) for o in obs)


def test_minimal_obstructions_properties():
    for k in (1, 2):
        for g in minimal_obstructions(k, 4):
            assert not fits_letters(g, k)
            assert lettericity(g) <= 2 * k + 1
            verts = set(range(1, g.n + 1))
            for v in verts:
                assert fits_letters(induced_subgraph(g, verts - {v}), k)


def test_subword_leq():
    assert subword_leq("ab", "aabb") == (1, 3)
    assert subword_leq("ba", "aabb") == (3, 2) or subword_leq("ba", "aabb") is None
    assert subword_leq("", "abc") == ()
    assert subword_leq("abc", "ab") is None


def test_decoder_parse_format_round_trip():
    text = format_decoder(REF_DECODER)
    d = parse_decoder(text)
    assert d == REF_DECODER
    with pytest.raises(InputError):
        parse_decoder("arc a b\n")
    assert parse_word(format_word(("a", "b"))) == ("a", "b")
