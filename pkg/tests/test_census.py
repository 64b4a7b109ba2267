from itertools import combinations

import pytest

from wordrep import census, languages as langs
from wordrep.census import brute_force_graphs, brute_force_speed, recognize_interval, speed
from wordrep.errors import CapacityError, InvalidArgumentsError
from wordrep.graphs import LabeledGraph, is_isomorphic_small

G = langs.get_language
C4 = LabeledGraph.on(4, {(1, 2), (2, 3), (3, 4), (1, 4)})
P4 = LabeledGraph.on(4, {(1, 2), (2, 3), (3, 4)})

# frozen from the brute-force recognizers (independent of the word machinery)
INTERVAL_COUNTS = {1: 1, 2: 2, 3: 8, 4: 61, 5: 822}
PERMUTATION_COUNTS = {1: 1, 2: 2, 3: 8, 4: 64, 5: 1012}


def test_small_speeds():
    assert speed(G("interval"), 1).labeled == 1
    assert speed(G("interval"), 3).labeled == 8


@pytest.mark.parametrize("n", range(1, 6))
def test_interval_census_matches_recognizer(n):
    assert brute_force_speed(n, "interval") == INTERVAL_COUNTS[n]
    rep = speed(G("interval"), n)
    assert rep.labeled == INTERVAL_COUNTS[n]
    assert rep.graphs == brute_force_graphs(n, "interval")


@pytest.mark.parametrize("n", range(1, 6))
def test_complement_pair_speeds(n):
    assert speed(G("co-interval"), n).labeled == speed(G("interval"), n).labeled
    assert speed(G("co-interval"), n).graphs == brute_force_graphs(n, "co-interval")


@pytest.mark.parametrize("n", range(1, 5))
def test_cmp2_equals_permutation(n):
    a, b = speed(G("cmp:2"), n), speed(G("permutation"), n)
    assert a.graphs == b.graphs
    assert a.labeled == PERMUTATION_COUNTS[n]
    assert b.graphs == brute_force_graphs(n, "permutation")


def test_permutation_census_n5():
    assert speed(G("permutation"), 5).labeled == PERMUTATION_COUNTS[5]
    assert brute_force_speed(5, "permutation") == PERMUTATION_COUNTS[5]


@pytest.mark.parametrize("n", range(1, 5))
def test_monotone_under_inclusion(n):
    assert speed(G("permutation"), n).graphs <= speed(G("trap"), n).graphs
    assert speed(G("interval"), n).graphs <= speed(G("l-interval:2"), n).graphs


@pytest.mark.parametrize("name", ["interval", "pi", "int-en", "cmp:3", "arc-cont", "c-int:1", "split-wr", "circle"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_engines_agree(name, n):
    L = G(name)
    a = speed(L, n, method="words")
    b = speed(L, n, method="automaton")
    assert a.graphs == b.graphs


@pytest.mark.parametrize("name", ["pi", "int-en", "cmp:3", "arc-cont"])
def test_engines_agree_n4(name):
    assert speed(G(name), 4, method="words").graphs == speed(G(name), 4, method="automaton").graphs


def test_workers_do_not_change_counts():
    assert speed(G("pi"), 4, workers=2).graphs == speed(G("pi"), 4, workers=1).graphs


def test_unlabeled_counts_match_isomorphism_dedup():
    for name, n in (("interval", 4), ("permutation", 4), ("cmp:3", 4)):
        rep = speed(G(name), n, unlabeled=True)
        reps = []
        for m in rep.graphs:
            g = census.mask_to_graph(m, n)
            if not any(is_isomorphic_small(g, h) for h in reps):
                reps.append(g)
        assert rep.unlabeled == len(reps)
    assert speed(G("interval"), 4, unlabeled=True).unlabeled == 10


def test_report_and_bound():
    rep = speed(G("interval"), 3)
    assert rep.labeled <= 2 ** 3
    assert rep.words_examined >= rep.labeled
    assert rep.bound_length == 15
    assert rep.info_bound == sum(3 ** j for j in range(3, 16))
    parts = rep.line().split()
    assert parts[:3] == ["interval", "3", "8"] and len(parts) == 5
    assert "information bound" in rep.table()
    assert len(speed(G("interval"), 3, unlabeled=True).line().split()) == 6


def test_budget():
    with pytest.raises(CapacityError) as exc:
        speed(G("interval"), 5, budget=10, method="words")
    assert exc.value.bound > 10
    with pytest.raises(CapacityError):
        speed(G("l-interval:3"), 5, budget=1000, method="automaton")
    with pytest.raises(InvalidArgumentsError):
        speed(G("interval"), 3, method="magic")


def test_recognize_interval():
    assert recognize_interval(P4)
    assert not recognize_interval(C4)
    assert recognize_interval(LabeledGraph.on(5, combinations(range(1, 6), 2)))
    with pytest.raises(CapacityError):
        recognize_interval(LabeledGraph.on(9))


def test_brute_force():
    assert brute_force_speed(3, "interval") == 8
    for rec in census.RECOGNIZERS:
        assert brute_force_speed(2, rec) == 2
    with pytest.raises(InvalidArgumentsError):
        brute_force_speed(3, "nope")
    with pytest.raises(CapacityError):
        brute_force_speed(6, "interval")


def test_single_letter_language_counts():
    # cmp:1 represents exactly the complete graphs plus isolated vertices
    for n in range(1, 5):
        assert speed(G("cmp:1"), n).labeled == 2 ** n - n
