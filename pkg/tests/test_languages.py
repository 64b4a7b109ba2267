from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from wordrep import languages as langs
from wordrep.errors import CapacityError, InvalidArgumentsError
from wordrep.words import complement_word, deletion_op, enumerate_fixed_counts

ALL_NAMES = [
    "interval", "circle", "permutation", "co-interval", "l-interval:2", "l-track:2",
    "box:2", "ovlp:2", "trap", "d-trap:3", "pi", "pi-star", "gon-circle:3", "circle-gon:2",
    "c-int:1", "c-int:2", "int-en", "arc-cont", "cmp:3", "idim:2", "split-wr",
]


def words_of(L):
    return set(L.words)


def test_symmetric_closure():
    assert words_of(langs.symmetric_closure({"0101"})) == {"0101", "1010"}
    assert words_of(langs.symmetric_closure({"0011", "1100"})) == {"0011", "1100"}
    assert len(langs.symmetric_closure(langs.dyck_words(3))) == 10
    L = langs.symmetric_closure({"011"})
    assert langs.symmetric_closure(L.words).words == L.words


def test_language_rejects_asymmetric_or_empty():
    with pytest.raises(InvalidArgumentsError):
        langs.FiniteLanguage({"0101"})
    with pytest.raises(InvalidArgumentsError):
        langs.FiniteLanguage(set())


def test_base_languages():
    assert words_of(langs.base_two_uniform("interval")) == {"0101", "1010", "0110", "1001"}
    assert words_of(langs.base_two_uniform("co_interval")) == {"0011", "1100"}
    assert words_of(langs.base_two_uniform("circle")) == {"0101", "1010"}
    assert words_of(langs.base_two_uniform("permutation")) == {"0110", "1001"}


@pytest.mark.parametrize("mode", langs.MODES)
@pytest.mark.parametrize("base", ["interval", "circle", "permutation", "co_interval"])
def test_projection_with_one_is_identity(mode, base):
    B = langs.base_two_uniform(base)
    assert langs.projection_language(1, mode, B).words == B.words


def test_projection_language_two():
    interval = langs.base_two_uniform("interval")
    L2 = langs.projection_language(2, "exists_any_pair", interval)
    assert "00101011" in L2
    box = langs.projection_language(2, "forall_diagonal", interval)
    # independent filter over all 4-uniform words
    expect = {w for w in enumerate_fixed_counts(4, 4)
              if deletion_op(w, 1, 1) in interval and deletion_op(w, 2, 2) in interval}
    assert box.words == expect
    track = langs.projection_language(2, "exists_diagonal", interval)
    assert box.words <= track.words <= L2.words
    with pytest.raises(InvalidArgumentsError):
        langs.projection_language(2, "forall_diagonal", langs.pi_language())


def test_trapezoid():
    T = langs.trapezoid_language()
    assert "00111100" in T and "11000011" in T
    assert "00110011" not in T
    assert "01011100" in T
    assert langs.d_trapezoid_language(1).words == langs.base_two_uniform("interval").words
    assert langs.d_trapezoid_language(2).words == T.words
    assert "000111111000" in langs.d_trapezoid_language(3)


def test_pi_languages():
    P = langs.pi_language()
    assert "010110" in P and "000111" not in P and len(P) == 14
    S = langs.pi_star_language()
    assert P.words <= S.words
    assert "1000111" not in S
    assert "10011010" in S  # flags 1,0 then the reversed generator 010110


def test_gon_circle():
    assert "0101" in langs.gon_circle_language(2)
    assert "0110" not in langs.gon_circle_language(2)
    assert langs.gon_circle_language(2).words == langs.base_two_uniform("circle").words
    with pytest.raises(InvalidArgumentsError):
        langs.gon_circle_language(1)


def test_circle_gon():
    L = langs.circle_gon_language(2)
    assert "001111000" not in L
    assert "0101" in L
    odd = [w for zs, os in product((3, 5), repeat=2) for w in enumerate_fixed_counts(zs, os)]
    assert all(w in L for w in odd)


def test_circular_interval_one():
    L = langs.circular_interval_language(1)
    explicit = set(enumerate_fixed_counts(3, 3)) | set(langs.base_two_uniform("interval").words)
    block = {w for w in langs.shuffle("00", "111") if w != "11001"}
    explicit |= block | {complement_word(w) for w in block}
    assert L.words == explicit
    assert "11001" not in L
    assert "000111" in L


def test_interval_enumerable():
    L = langs.interval_enumerable_language()
    assert L.words == {"100011", "010011", "001011", "011100", "101100", "110100"}
    assert "000111" not in L


def test_arc_containment():
    L = langs.arc_containment_language()
    for u in ("101001", "01100", "0110"):
        assert u in L
    assert "00110" not in L
    literal = langs.arc_containment_language(literal=True)
    assert len(literal) == 12
    assert L.words - literal.words == {"00011", "11100", "001110", "110001"}
    assert langs.count_set(L).counts == {2, 3}
    assert langs.max_word_length(L) == 6


def catalan(d):
    return comb(2 * d, d) // (d + 1)


def test_dyck():
    assert langs.dyck_words(3) == {"000111", "001011", "001101", "010011", "010101"}
    assert langs.dyck_words(1) == {"01"}
    for d in range(1, 7):
        ws = langs.dyck_words(d)
        assert len(ws) == catalan(d)
        assert ws == {w for w in enumerate_fixed_counts(d, d) if langs.is_dyck(w)}
    with pytest.raises(CapacityError):
        langs.dyck_words(11)


def test_comparability_and_idim():
    assert len(langs.comparability_language(3)) == 10
    assert langs.comparability_language(2).words == {"0011", "0101", "1100", "1010"}
    assert "010101" in langs.comparability_language(3)
    assert langs.interval_dim_language(1).words == {"0011", "1100"}
    assert "00110011" in langs.interval_dim_language(2)
    for d in (1, 2, 3):
        everything = enumerate_fixed_counts(2 * d, 2 * d)
        a, b = langs.interval_dim_language(d).words, langs.d_trapezoid_language(d).words
        assert a == everything - b and not a & b


def test_split_wr():
    L = langs.split_wr_language()
    assert "0101" in L and "101010" in L and len(L) == 6


def test_count_set_and_length():
    cs = langs.count_set(langs.base_two_uniform("interval"))
    assert cs.counts == {2} and cs.iso_count == 1
    assert langs.count_set(langs.arc_containment_language()).iso_count == 1
    assert langs.count_set(langs.get_language("l-interval:2")).counts == {4}
    assert langs.max_word_length(langs.base_two_uniform("interval")) == 4
    assert langs.max_word_length(langs.pi_language()) == 6


def test_two_uniform_partition():
    two = enumerate_fixed_counts(2, 2)
    co = langs.base_two_uniform("co_interval").words
    iv = langs.base_two_uniform("interval").words
    assert all((w in co) != (w in iv) for w in two)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_every_language_is_symmetric_and_uniform_when_tagged(name):
    L = langs.get_language(name)
    assert all(complement_word(u) in L for u in L.words)
    k = L.uniformity
    if k is not None:
        assert all(u.count("0") == u.count("1") == k for u in L.words)


def test_language_names():
    assert langs.parse_language_name("box:2") == ("box", 2)
    assert langs.parse_language_name("trap") == ("trap", None)
    for bad in ("box", "nope", "box:x", "trap:2"):
        with pytest.raises(InvalidArgumentsError):
            langs.parse_language_name(bad)
    assert langs.get_language("cmp:3").label == "cmp:3"


def test_language_file_round_trip(tmp_path):
    path = tmp_path / "l.txt"
    langs.write_language(langs.pi_language(), path)
    assert langs.read_language(path).words == langs.pi_language().words
    path.write_text("# comment\n0101\n\n0110\n")
    assert langs.read_language(path, close=True).words == langs.base_two_uniform("interval").words
    with pytest.raises(InvalidArgumentsError):
        langs.read_language(path)


@given(st.sets(st.text("01", min_size=1, max_size=8), min_size=1, max_size=6))
def test_closure_idempotent(ws):
    L = langs.symmetric_closure(ws)
    assert set(ws) <= L.words
    assert langs.symmetric_closure(L.words).words == L.words
