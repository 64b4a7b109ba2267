import random
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from wordrep.errors import CapacityError, InvalidArgumentsError
from wordrep.geometry import oracle_graph
from wordrep.graphs import LabeledGraph, is_isomorphic_small
from wordrep.letters import (
    LetterSpec, ThinRepresentation, decode_letter_graph, enumerate_letter_graphs,
    format_letter_spec, is_thin_representation, letter_to_thin, parse_letter_spec, thin_to_boxes,
)

SPLIT = LetterSpec(2, {(1, 1), (1, 2), (2, 1)}, (1, 1, 2, 2))
C4 = LabeledGraph.on(4, {(1, 2), (2, 3), (3, 4), (1, 4)})
P3 = LabeledGraph.on(3, {(1, 2), (2, 3)})
P4_EDGES = frozenset({(1, 2), (2, 3), (3, 4)})
P4 = LabeledGraph.on(4, P4_EDGES)


def complete(n):
    return frozenset(combinations(range(1, n + 1), 2))


def test_decode_examples():
    G = decode_letter_graph(SPLIT)
    assert G.edges == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)}
    assert decode_letter_graph(LetterSpec(1, {(1, 1)}, (1, 1, 1))).edges == complete(3)
    assert decode_letter_graph(LetterSpec(2, set(), (1, 2, 1, 2))).edges == frozenset()


def test_decoder_is_order_sensitive():
    G = decode_letter_graph(LetterSpec(2, {(1, 2)}, (2, 1, 1, 2)))
    assert G.edges == {(2, 4), (3, 4)}


def test_letter_to_thin_examples():
    rep = letter_to_thin(SPLIT)
    assert rep.ordering == (1, 2, 3, 4)
    assert {v for v, c in rep.partition.items() if c == 1} == {1, 2}
    assert is_thin_representation(decode_letter_graph(SPLIT), rep)
    one = LetterSpec(1, {(1, 1)}, (1,))
    assert letter_to_thin(one).classes == [1]
    alt = LetterSpec(2, {(1, 2), (2, 1)}, (1, 2, 1, 2))
    assert is_thin_representation(decode_letter_graph(alt), letter_to_thin(alt))


def test_thin_checker():
    for V in (C4, P3):
        singletons = ThinRepresentation(tuple(sorted(V.vertices)), {v: v for v in V.vertices})
        assert is_thin_representation(V, singletons)
    for order in permutations(range(1, 5)):
        assert not is_thin_representation(C4, ThinRepresentation(order, {v: 1 for v in order}))
    with pytest.raises(InvalidArgumentsError):
        is_thin_representation(C4, ThinRepresentation((1, 2), {1: 1, 2: 1}))


def test_thin_to_boxes_examples():
    rep = ThinRepresentation((1, 2, 3), {1: 1, 2: 1, 3: 1})
    assert is_thin_representation(P3, rep)
    B = thin_to_boxes(P3, rep)
    assert B.b == 1 and oracle_graph(B) == P3
    G = decode_letter_graph(SPLIT)
    B = thin_to_boxes(G, letter_to_thin(SPLIT))
    assert B.b == 2 and oracle_graph(B) == G
    with pytest.raises(InvalidArgumentsError):
        thin_to_boxes(C4, ThinRepresentation((1, 2, 3, 4), {v: 1 for v in range(1, 5)}))


def test_random_two_letter_boxes():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 8)
        dec = {p for p in product((1, 2), repeat=2) if rng.random() < 0.5}
        spec = LetterSpec(2, dec, tuple(rng.randint(1, 2) for _ in range(n)))
        G = decode_letter_graph(spec)
        assert oracle_graph(thin_to_boxes(G, letter_to_thin(spec))) == G


@settings(max_examples=200)
@given(st.integers(1, 3).flatmap(lambda k: st.tuples(
    st.just(k),
    st.sets(st.tuples(st.integers(1, k), st.integers(1, k))),
    st.lists(st.integers(1, k), min_size=1, max_size=8))))
def test_pipeline_property(args):
    k, dec, word = args
    spec = LetterSpec(k, dec, word)
    G = decode_letter_graph(spec)
    rep = letter_to_thin(spec)
    assert is_thin_representation(G, rep)
    assert oracle_graph(thin_to_boxes(G, rep)) == G


def test_thin_to_boxes_on_exhaustive_thin_reps():
    # every 2-class thin representation of every graph on 4 vertices (identity order)
    pairs = list(combinations(range(1, 5), 2))
    order = (1, 2, 3, 4)
    for bits in range(1 << len(pairs)):
        G = LabeledGraph.on(4, {p for i, p in enumerate(pairs) if bits >> i & 1})
        for classes in product((1, 2), repeat=4):
            rep = ThinRepresentation(order, dict(zip(order, classes)))
            if is_thin_representation(G, rep):
                assert oracle_graph(thin_to_boxes(G, rep)) == G


def test_letter_counts():
    for n in range(2, 8):
        assert enumerate_letter_graphs(1, n) == {complete(n), frozenset()}
    assert enumerate_letter_graphs(1, 1) == {frozenset()}  # K1 is also the null graph
    # positions are ordered, so P4 appears only in some labelings
    assert P4_EDGES not in enumerate_letter_graphs(2, 4)
    copies = {g for g in enumerate_letter_graphs(2, 4) if is_isomorphic_small(LabeledGraph.on(4, g), P4)}
    assert copies == {frozenset({(1, 2), (1, 4), (3, 4)}), frozenset({(1, 3), (2, 3), (2, 4)})}
    assert not any(is_isomorphic_small(LabeledGraph.on(4, g), P4) for g in enumerate_letter_graphs(1, 4))
    # frozen from an exhaustive run, each below 2^4 * 2^n
    expect = {1: 1, 2: 2, 3: 8, 4: 38, 5: 116, 6: 290}
    for n, c in expect.items():
        assert len(enumerate_letter_graphs(2, n)) == c <= 16 * 2 ** n


def test_complete_split_graphs_present():
    for n in range(1, 7):
        graphs = enumerate_letter_graphs(2, n)
        for word in product((1, 2), repeat=n):
            split = decode_letter_graph(LetterSpec(2, {(1, 1), (1, 2), (2, 1)}, word))
            assert split.edges in graphs


def test_guards():
    with pytest.raises(CapacityError):
        enumerate_letter_graphs(4, 3)
    with pytest.raises(CapacityError):
        enumerate_letter_graphs(2, 8)


def test_spec_text_round_trip():
    text = format_letter_spec(SPLIT)
    assert text == "2\n11,12,21\n1122\n"
    assert parse_letter_spec(text) == SPLIT
    with pytest.raises(InvalidArgumentsError):
        parse_letter_spec("2\n13\n12\n")
    with pytest.raises(InvalidArgumentsError):
        parse_letter_spec("x\n\n")
