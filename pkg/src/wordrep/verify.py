"""Cross-module property suite.

Each property is checked a number of times that scales with ``trials``;
``trials=0`` checks nothing.  Word-side checks are exhaustive where the
space is small (every two-letter word, and every word over three or four
letters up to renaming when under a cap) and sampled otherwise.
"""

import random
from dataclasses import dataclass, field
from itertools import chain, combinations, product
from math import factorial

from . import languages as langs
from .geometry import FAMILIES, decode_model, encode_model, oracle_graph
from .graphs import complement_graph, decode_graph, induced_subgraph
from .letters import LetterSpec, decode_letter_graph, is_thin_representation, letter_to_thin, thin_to_boxes
from .words import enumerate_fixed_counts, erase_to

EXHAUSTIVE_CAP = 20_000


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failures: int = 0
    counterexample: object = None

    @property
    def ok(self):
        return self.failures == 0

    def record(self, passed, example=None):
        self.checked += 1
        if not passed:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = example


@dataclass
class VerifyReport:
    seed: int
    trials: int
    results: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    def get(self, name):
        return next(r for r in self.results if r.name == name)

    def lines(self):
        out = []
        for r in self.results:
            status = "PASS" if r.ok else "FAIL"
            line = f"{status} {r.name} checked={r.checked} failures={r.failures}"
            if not r.ok:
                line += f" counterexample={r.counterexample!r}"
            out.append(line)
        return out


# --- word generators ----------------------------------------------------------------

def admissible_counts(L):
    cs = langs.count_set(L)
    return sorted(cs.counts | {cs.iso_count})


def canonical_word_total(counts, k):
    """Words over letters 1..k, each used with a multiplicity from ``counts``, up to renaming."""
    total = 0
    for vec in product(counts, repeat=k):
        m = factorial(sum(vec))
        for c in vec:
            m //= factorial(c)
        total += m
    return total // factorial(k)


def canonical_words(counts, k):
    """Words whose letters first appear in the order 1, 2, ..., k."""
    for vec in product(counts, repeat=k):
        rem = list(vec)
        word = []
        length = sum(vec)

        def rec(started):
            if len(word) == length:
                yield tuple(word)
                return
            for a in range(1, min(started + 1, k) + 1):
                if not rem[a - 1]:
                    continue
                rem[a - 1] -= 1
                word.append(a)
                yield from rec(max(started, a))
                word.pop()
                rem[a - 1] += 1

        yield from rec(0)


def random_word(rng, counts, k):
    w = [a for a in range(1, k + 1) for _ in range(rng.choice(counts))]
    rng.shuffle(w)
    return tuple(w)


def two_letter_words(counts):
    for z, o in product(counts, repeat=2):
        for u in enumerate_fixed_counts(z, o):
            yield tuple(1 if c == "0" else 2 for c in u)


def word_pool(L, rng, samples, max_letters=4, cap=EXHAUSTIVE_CAP):
    """Every two-letter word, then words over 3..max_letters letters: all of them
    up to renaming when fewer than ``cap``, otherwise ``samples`` random ones."""
    counts = admissible_counts(L)
    pools = [two_letter_words(counts)]
    for k in range(3, max_letters + 1):
        if canonical_word_total(counts, k) <= cap:
            pools.append(canonical_words(counts, k))
        else:
            pools.append(random_word(rng, counts, k) for _ in range(samples))
    return chain(*pools)


# --- individual properties ------------------------------------------------------------------

def _family_runs(overrides):
    for name, fam in FAMILIES.items():
        for p in fam.params:
            key = name if p is None else f"{name}:{p}"
            L = overrides.get(key) or fam.lang(p)
            yield key, name, p, fam, L


def round_trip_models(seed, trials, overrides=None, max_n=8):
    out = []
    for key, name, p, fam, L in _family_runs(overrides or {}):
        res = PropertyResult(f"round-trip-A {key}")
        for i in range(trials):
            rng = random.Random(f"{seed}:{key}:{i}")
            model = fam.sample(rng, rng.randint(1, max_n), p)
            w = encode_model(model)
            res.record(decode_graph(L, w) == oracle_graph(model), model)
        out.append(res)
    return out


def round_trip_words(seed, trials, overrides=None, cap=EXHAUSTIVE_CAP):
    out = []
    for key, name, p, fam, L in _family_runs(overrides or {}):
        if name == "comparability" and p == 1:
            continue  # one linear order has no room for incomparable elements
        res = PropertyResult(f"round-trip-B {key}")
        if trials:
            rng = random.Random(f"{seed}:{key}")
            for w in word_pool(L, rng, trials, cap=cap):
                res.record(oracle_graph(decode_model(w, name, p)) == decode_graph(L, w), w)
        out.append(res)
    return out


HEREDITY_LANGUAGES = (
    "interval", "circle", "permutation", "co-interval",
    "l-interval:1", "l-interval:2", "l-interval:3", "l-track:2", "l-track:3",
    "box:2", "box:3", "ovlp:2", "ovlp:3", "trap", "d-trap:1", "d-trap:3",
    "pi", "pi-star", "gon-circle:2", "gon-circle:3", "circle-gon:1", "circle-gon:2",
    "c-int:1", "c-int:2", "int-en", "arc-cont", "cmp:1", "cmp:2", "cmp:3",
    "idim:1", "idim:2", "idim:3", "split-wr",
)


def check_hereditary(L, w):
    G = decode_graph(L, w)
    letters = sorted(G.vertices)
    for r in range(1, len(letters)):
        for A in combinations(letters, r):
            if decode_graph(L, erase_to(w, A)) != induced_subgraph(G, A):
                return False
    return True


def hereditary(seed, trials, names=HEREDITY_LANGUAGES, cap=EXHAUSTIVE_CAP):
    out = []
    for name in names:
        res = PropertyResult(f"hereditary {name}")
        if trials:
            L = langs.get_language(name)
            rng = random.Random(f"{seed}:{name}")
            for w in word_pool(L, rng, trials, cap=cap):
                res.record(check_hereditary(L, w), w)
        out.append(res)
    return out


def complement_duality(seed, trials):
    out = []
    for d in (1, 2, 3):
        res = PropertyResult(f"complement-duality d={d}")
        idim, trap = langs.interval_dim_language(d), langs.d_trapezoid_language(d)
        rng = random.Random(f"{seed}:dual:{d}")
        for _ in range(trials):
            w = random_word(rng, [2 * d], rng.randint(2, 4))
            res.record(decode_graph(idim, w) == complement_graph(decode_graph(trap, w)), w)
        out.append(res)
    return out


def random_letter_spec(rng, max_k=3, max_n=8):
    k, n = rng.randint(1, max_k), rng.randint(1, max_n)
    dec = {(a, b) for a in range(1, k + 1) for b in range(1, k + 1) if rng.random() < 0.5}
    return LetterSpec(k, dec, tuple(rng.randint(1, k) for _ in range(n)))


def letter_pipeline(seed, trials):
    res = PropertyResult("letters-thin-boxes")
    rng = random.Random(f"{seed}:letters")
    for _ in range(trials):
        spec = random_letter_spec(rng)
        G = decode_letter_graph(spec)
        rep = letter_to_thin(spec)
        ok = is_thin_representation(G, rep) and oracle_graph(thin_to_boxes(G, rep)) == G
        res.record(ok, spec)
    return [res]


def language_identities(trials):
    res = PropertyResult("language-identities")
    if not trials:
        return [res]
    interval = langs.base_two_uniform("interval")
    checks = [
        langs.get_language("l-interval:1").words == interval.words,
        langs.get_language("l-track:1").words == interval.words,
        langs.get_language("box:1").words == interval.words,
        langs.d_trapezoid_language(1).words == interval.words,
        langs.d_trapezoid_language(2).words == langs.trapezoid_language().words,
        langs.interval_dim_language(1).words == langs.base_two_uniform("co_interval").words,
        langs.gon_circle_language(2).words == langs.base_two_uniform("circle").words,
        len(langs.interval_enumerable_language()) == 6,
    ]
    for d in (1, 2, 3):
        everything = enumerate_fixed_counts(2 * d, 2 * d)
        a, b = langs.interval_dim_language(d).words, langs.d_trapezoid_language(d).words
        checks.append(not (a & b) and (a | b) == everything)
    for i, ok in enumerate(checks):
        res.record(ok, f"identity #{i + 1}")
    return [res]


def verify_suite(seed=0, trials=100, overrides=None, cap=EXHAUSTIVE_CAP):
    """Run every property; ``overrides`` maps ``family[:param]`` to a replacement language.

    ``cap`` bounds the exhaustive word sweeps; ``cap=0`` samples every
    alphabet size above two.
    """
    report = VerifyReport(seed, trials)
    report.results += language_identities(trials)
    report.results += round_trip_models(seed, trials, overrides)
    report.results += round_trip_words(seed, trials, overrides, cap)
    report.results += complement_duality(seed, trials)
    report.results += letter_pipeline(seed, trials)
    report.results += hereditary(seed, trials, cap=cap)
    return report
