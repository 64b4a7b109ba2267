from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from wordrep import languages as langs
from wordrep.errors import CapacityError, InvalidArgumentsError
from wordrep.graphs import (
    LabeledGraph, complement_graph, decode_graph, format_graph, graphs_equal,
    induced_subgraph, is_isomorphic_small, parse_graph, relabel,
)
from wordrep.words import erase_to, parse_vertex_word, project

C4_EDGES = {(1, 2), (1, 4), (2, 3), (3, 4)}
C4 = LabeledGraph.on(4, C4_EDGES)
P4 = LabeledGraph.on(4, {(1, 2), (2, 3), (3, 4)})


def test_graph_canonical_form():
    G = LabeledGraph.on(3, [(2, 1), (1, 2)])
    assert G.edges == {(1, 2)}
    with pytest.raises(InvalidArgumentsError):
        LabeledGraph.on(2, [(1, 1)])
    with pytest.raises(InvalidArgumentsError):
        LabeledGraph.on(2, [(1, 3)])
    assert not G.has_edge(1, 1) and G.has_edge(2, 1)


def test_known_decodes():
    L2 = langs.get_language("l-interval:2")
    assert decode_graph(L2, parse_vertex_word("abacbbbdcaddadcc")) == C4
    assert decode_graph(langs.get_language("int-en"), parse_vertex_word("aabdacccdbbd")) == C4
    P4_arc = LabeledGraph.on(4, {(1, 2), (2, 4), (3, 4)})
    assert decode_graph(langs.get_language("arc-cont"), parse_vertex_word("abacddbbca")) == P4_arc


def test_complement_graph():
    K3 = LabeledGraph.on(3, combinations(range(1, 4), 2))
    assert complement_graph(K3).edges == frozenset()
    assert complement_graph(complement_graph(P4)) == P4


def test_two_uniform_complement_duality_three_letters():
    iv, co = langs.base_two_uniform("interval"), langs.base_two_uniform("co_interval")
    base = (1, 1, 2, 2, 3, 3)
    words = set(permutations(base))
    assert len(words) == 90
    for w in words:
        assert decode_graph(co, w) == complement_graph(decode_graph(iv, w))


def test_induced_subgraph():
    assert induced_subgraph(C4, C4.vertices) == C4
    assert induced_subgraph(C4, {1, 2, 3}).edges == {(1, 2), (2, 3)}
    with pytest.raises(InvalidArgumentsError):
        induced_subgraph(C4, {5})
    L2 = langs.get_language("l-interval:2")
    w = parse_vertex_word("abacbbbdcaddadcc")
    assert decode_graph(L2, erase_to(w, {1, 2, 3})) == induced_subgraph(decode_graph(L2, w), {1, 2, 3})


def test_isomorphism():
    assert graphs_equal(C4, C4) and is_isomorphic_small(C4, C4)
    assert not is_isomorphic_small(C4, P4)
    other = relabel(C4, {1: 1, 2: 3, 3: 2, 4: 4})
    assert is_isomorphic_small(C4, other) and not graphs_equal(C4, other)
    with pytest.raises(CapacityError):
        is_isomorphic_small(LabeledGraph.on(9), LabeledGraph.on(9))


def test_graph_text_format():
    text = format_graph(C4)
    assert text == "4 4\n1 2\n1 4\n2 3\n3 4\n"
    assert parse_graph(text) == C4
    with pytest.raises(InvalidArgumentsError):
        parse_graph("3 2\n1 2\n")


def test_isolated_letters_have_no_edges():
    L = langs.base_two_uniform("interval")
    G = decode_graph(L, (1, 2, 1, 3, 2, 3, 3))
    assert G.vertices == {1, 2, 3} and G.edges == {(1, 2)}


LANGS = ["interval", "l-interval:2", "trap", "pi", "arc-cont", "c-int:1", "cmp:3", "split-wr"]


@pytest.mark.parametrize("name", LANGS)
@given(data=st.data())
def test_decode_matches_definition_and_is_hereditary(name, data):
    L = langs.get_language(name)
    counts = sorted(langs.count_set(L).counts | {langs.count_set(L).iso_count})
    k = data.draw(st.integers(1, 5))
    w = [a for a in range(1, k + 1) for _ in range(data.draw(st.sampled_from(counts)))]
    w = tuple(data.draw(st.permutations(w)))
    G = decode_graph(L, w)
    for u, v in combinations(range(1, k + 1), 2):
        assert G.has_edge(u, v) == (project(w, u, v) in L) == (project(w, v, u) in L)
    A = data.draw(st.sets(st.integers(1, k), min_size=1))
    assert decode_graph(L, erase_to(w, A)) == induced_subgraph(G, A)
