from wordrep import languages as langs
from wordrep.verify import (
    canonical_word_total, canonical_words, check_hereditary, round_trip_models,
    round_trip_words, verify_suite, VerifyReport,
)


def test_zero_trials_is_vacuous():
    report = verify_suite(5, 0)
    assert report.ok
    assert all(r.checked == 0 and r.failures == 0 for r in report.results)


def test_small_suite_passes():
    report = verify_suite(42, 3, cap=0)
    assert report.ok, [l for l in report.lines() if l.startswith("FAIL")]
    names = {r.name for r in report.results}
    assert "round-trip-A trapezoids:2" in names and "round-trip-B pi-star" in names
    assert "hereditary arc-cont" in names and "letters-thin-boxes" in names


def test_mutated_trapezoid_language_is_caught():
    T = langs.trapezoid_language()
    broken = langs.FiniteLanguage(T.words - {"00111100", "11000011"}, "trap-broken")
    words = round_trip_words(0, 5, {"trapezoids:2": broken}, cap=0)
    bad = [r for r in words if not r.ok]
    assert [r.name for r in bad] == ["round-trip-B trapezoids:2"]
    w = bad[0].counterexample
    assert isinstance(w, tuple) and w
    models = round_trip_models(0, 200, {"trapezoids:2": broken})
    assert [r.name for r in models if not r.ok] == ["round-trip-A trapezoids:2"]


def test_failure_lines_carry_counterexample():
    broken = langs.FiniteLanguage({"0101", "1010"}, "circle")
    report = VerifyReport(0, 1, round_trip_words(0, 1, {"intervals:1": broken}, cap=0))
    assert not report.ok
    line = next(l for l in report.lines() if l.startswith("FAIL"))
    assert line.startswith("FAIL round-trip-B intervals:1") and "counterexample=(" in line


def test_canonical_words_are_complete_up_to_renaming():
    for counts, k in (([2], 3), ([1, 2], 3), ([3], 2)):
        ws = list(canonical_words(counts, k))
        assert len(ws) == len(set(ws)) == canonical_word_total(counts, k)
        for w in ws:
            firsts = []
            for x in w:
                if x not in firsts:
                    firsts.append(x)
            assert firsts == list(range(1, k + 1))


def test_check_hereditary_on_example_words():
    assert check_hereditary(langs.get_language("l-interval:2"), tuple(b"abacbbbdcaddadcc"))
    assert check_hereditary(langs.get_language("int-en"), tuple(b"aabdacccdbbd"))
