"""Exhaustive speed measurement at small n, plus independent recognizers.

Two engines count the labeled graphs G(L, w) over words on [n]:

``words``
    enumerates every word in which each letter's multiplicity comes from the
    count set (letters with the isolated multiplicity are left out, they
    never get edges) and decodes it.  Multiplicity vectors are taken sorted,
    letters of equal multiplicity first appear in increasing order, and the
    resulting graph set is closed under relabeling afterwards.

``automaton``
    runs the same enumeration as a search over states.  A state keeps, per
    pair of letters, only the set of suffixes that would still put the
    pair's projection into L.  Words reaching the same state have the same
    future, so they are explored once.

Both give exact labeled counts; the tests run them against each other.
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations
from math import comb, factorial

from .errors import CapacityError, InvalidArgumentsError
from .graphs import LabeledGraph, _merge, complement_graph
from .languages import count_set, max_word_length

DEFAULT_BUDGET = 10 ** 8
AUTO_WORD_LIMIT = 200_000
WORKERS_ENV = "WORDREP_WORKERS"


@dataclass(frozen=True)
class SpeedReport:
    language: str
    n: int
    labeled: int
    unlabeled: object
    words_examined: int
    elapsed_ms: int
    method: str = "words"
    bound_length: int = 0
    info_bound: int = 0
    graphs: frozenset = field(default=frozenset(), repr=False, compare=False)

    def line(self):
        parts = [self.language, str(self.n), str(self.labeled)]
        if self.unlabeled is not None:
            parts.append(str(self.unlabeled))
        parts += [str(self.words_examined), str(self.elapsed_ms)]
        return " ".join(parts)

    def table(self):
        rows = [
            ("language", self.language), ("n", self.n), ("labeled", self.labeled),
            ("unlabeled", "-" if self.unlabeled is None else self.unlabeled),
            ("method", self.method), ("words/states examined", self.words_examined),
            ("max word length bound", self.bound_length),
            ("information bound", self.info_bound), ("elapsed ms", self.elapsed_ms),
        ]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


# --- bitmask helpers ----------------------------------------------------------------

def pair_bits(n):
    """(i, j) with 1 <= i < j <= n  ->  bit index, lexicographic."""
    return {p: b for b, p in enumerate(combinations(range(1, n + 1), 2))}


def mask_to_graph(mask, n):
    return LabeledGraph.on(n, [p for p, b in pair_bits(n).items() if mask >> b & 1])


def graph_to_mask(G, n):
    bits = pair_bits(n)
    m = 0
    for e in G.edges:
        m |= 1 << bits[e]
    return m


def relabel_closure(masks, n):
    """Close a set of edge masks under all permutations of [n]; also count orbits."""
    bits = pair_bits(n)
    pairs = list(bits)
    perm_maps = []
    for p in permutations(range(1, n + 1)):
        perm_maps.append([bits[tuple(sorted((p[i - 1], p[j - 1])))] for i, j in pairs])
    closed, orbits = set(), 0
    for m in masks:
        if m in closed:
            continue
        orbits += 1
        on = [b for b in range(len(pairs)) if m >> b & 1]
        for pm in perm_maps:
            img = 0
            for b in on:
                img |= 1 << pm[b]
            closed.add(img)
    return closed, orbits


def information_bound(L, n):
    """Words of length at most (ml(L)+1)*n, each over an alphabet of exactly n letters, n^j per length j."""
    length = (max_word_length(L) + 1) * n
    return length, sum(n ** j for j in range(n, length + 1))


# --- enumeration space ---------------------------------------------------------------

def multiplicity_vectors(L, n):
    cs = count_set(L)
    return list(combinations_with_replacement(sorted(cs.counts | {cs.iso_count}), n))


def _groups(vector, counts):
    """Active letters (1-based) with, for each, the previous letter of equal multiplicity."""
    active = [i + 1 for i, m in enumerate(vector) if m in counts]
    prev = {}
    for a, b in zip(active, active[1:]):
        if vector[a - 1] == vector[b - 1]:
            prev[b] = a
    return active, prev


def canonical_word_count(vector, counts):
    active, _ = _groups(vector, counts)
    num = factorial(sum(vector[a - 1] for a in active))
    for a in active:
        num //= factorial(vector[a - 1])
    sizes = {}
    for a in active:
        sizes[vector[a - 1]] = sizes.get(vector[a - 1], 0) + 1
    for s in sizes.values():
        num //= factorial(s)
    return num


def estimate_words(L, n):
    counts = count_set(L).counts
    return sum(canonical_word_count(v, counts) for v in multiplicity_vectors(L, n))


# --- words engine ---------------------------------------------------------------------

def _vector_words(args):
    words, counts, vector, n = args
    active, prev = _groups(vector, counts)
    bits = pair_bits(n)
    remaining = {a: vector[a - 1] for a in active}
    occ = {a: [] for a in active}
    pairs = [(u, v, 1 << bits[(u, v)]) for u, v in combinations(active, 2)]
    found, examined = set(), 0
    length = sum(remaining.values())

    def rec(pos):
        nonlocal examined
        if pos == length:
            examined += 1
            m = 0
            for u, v, bit in pairs:
                if _merge(occ[u], occ[v]) in words:
                    m |= bit
            found.add(m)
            return
        for a in active:
            if not remaining[a]:
                continue
            p = prev.get(a)
            if p is not None and not occ[p] and not occ[a]:
                continue
            remaining[a] -= 1
            occ[a].append(pos)
            rec(pos + 1)
            occ[a].pop()
            remaining[a] += 1

    rec(0)
    return found, examined


# --- automaton engine -------------------------------------------------------------------

class _Residuals:
    """Interned suffix sets for one language, with two absorbing summaries."""

    EMPTY, FULL = 0, 1

    def __init__(self, words):
        self.words = words
        self.ids = {}
        self.sets = [None, None]
        self.step = [(0, 0), (1, 1)]
        self.accept = [False, True]

    def intern(self, suffixes):
        if not suffixes:
            return self.EMPTY
        some = next(iter(suffixes))
        if len(suffixes) == comb(len(some), some.count("0")):
            return self.FULL
        key = frozenset(suffixes)
        rid = self.ids.get(key)
        if rid is None:
            rid = len(self.sets)
            self.ids[key] = rid
            self.sets.append(key)
            self.step.append(None)
            self.accept.append("" in key)
        return rid

    def initial(self, zeros, ones):
        return self.intern({u for u in self.words if u.count("0") == zeros and len(u) - zeros == ones})

    def next(self, rid, bit):
        st = self.step[rid]
        if st is None:
            s = self.sets[rid]
            st = (self.intern({x[1:] for x in s if x[0] == "0"}),
                  self.intern({x[1:] for x in s if x[0] == "1"}))
            self.step[rid] = st
        return st[bit]


def _vector_automaton(args):
    words, counts, vector, n, budget = args
    active, prev = _groups(vector, counts)
    bits = pair_bits(n)
    res = _Residuals(words)
    k = len(active)
    idx = {a: i for i, a in enumerate(active)}
    pair_list = list(combinations(range(k), 2))
    pair_bit = [1 << bits[(active[i], active[j])] for i, j in pair_list]
    touching = [[(p, 0 if i == x else 1) for p, (i, j) in enumerate(pair_list) if x in (i, j)]
                for x in range(k)]
    mult = [vector[a - 1] for a in active]
    prev_idx = [idx[prev[a]] if a in prev else -1 for a in active]
    start = (tuple(mult), tuple(res.initial(mult[i], mult[j]) for i, j in pair_list))

    seen = {start}
    stack = [start]
    found = set()
    while stack:
        rem, rs = stack.pop()
        if not any(rem):
            m = 0
            for p, r in enumerate(rs):
                if res.accept[r]:
                    m |= pair_bit[p]
            found.add(m)
            continue
        for x in range(k):
            if not rem[x]:
                continue
            q = prev_idx[x]
            if q >= 0 and rem[q] == mult[q] and rem[x] == mult[x]:
                continue
            nrs = list(rs)
            for p, bit in touching[x]:
                nrs[p] = res.next(nrs[p], bit)
            nrem = list(rem)
            nrem[x] -= 1
            # a letter whose pairs are all settled no longer matters
            for y in range(k):
                if nrem[y] and all(nrs[p] <= 1 for p, _ in touching[y]):
                    nrem[y] = 0
            state = (tuple(nrem), tuple(nrs))
            if state not in seen:
                seen.add(state)
                if len(seen) > budget:
                    raise CapacityError(f"automaton census exceeded {budget} states", bound=budget)
                stack.append(state)
    return found, len(seen)


# --- driver ---------------------------------------------------------------------------------

def _workers(workers):
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    return max(1, workers)


def census_masks(L, n, budget=DEFAULT_BUDGET, method="auto", workers=None):
    """Labeled edge masks of all graphs in the class on [n]; returns (masks, orbits, examined, method)."""
    if n < 1:
        raise InvalidArgumentsError("n must be positive")
    counts = count_set(L).counts
    vectors = multiplicity_vectors(L, n)
    estimate = sum(canonical_word_count(v, counts) for v in vectors)
    if method == "auto":
        method = "words" if estimate <= AUTO_WORD_LIMIT else "automaton"
    if method == "words":
        if estimate > budget:
            raise CapacityError(f"{estimate} words exceed budget {budget}", bound=estimate)
        jobs = [(L.words, counts, v, n) for v in vectors]
        fn = _vector_words
    elif method == "automaton":
        jobs = [(L.words, counts, v, n, budget) for v in vectors]
        fn = _vector_automaton
    else:
        raise InvalidArgumentsError(f"unknown census method {method!r}")

    workers = _workers(workers)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(fn, jobs))
    else:
        results = [fn(j) for j in jobs]
    found, examined = set(), 0
    for f, e in results:
        found |= f
        examined += e
    closed, orbits = relabel_closure(found, n)
    return closed, orbits, examined, method


def speed(L, n, budget=DEFAULT_BUDGET, method="auto", unlabeled=False, workers=None):
    t0 = time.perf_counter()
    masks, orbits, examined, used = census_masks(L, n, budget, method, workers)
    length, bound = information_bound(L, n)
    return SpeedReport(
        language=L.label, n=n, labeled=len(masks),
        unlabeled=orbits if unlabeled else None,
        words_examined=examined,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
        method=used, bound_length=length, info_bound=bound,
        graphs=frozenset(masks),
    )


# --- independent recognizers ----------------------------------------------------------------

INTERVAL_GUARD = 8


def maximal_cliques(G):
    vs = sorted(G.vertices)
    cliques = []
    for r in range(len(vs), 0, -1):
        for c in combinations(vs, r):
            if all(G.has_edge(a, b) for a, b in combinations(c, 2)):
                s = frozenset(c)
                if not any(s < big for big in cliques):
                    cliques.append(s)
    return cliques


def recognize_interval(G):
    """Some ordering of the maximal cliques lists every vertex's cliques consecutively."""
    if len(G) > INTERVAL_GUARD:
        raise CapacityError(f"interval recognition limited to {INTERVAL_GUARD} vertices")
    if not G.vertices:
        return True
    cliques = maximal_cliques(G)
    if len(cliques) > len(G):
        return False

    def place(used, open_, closed):
        if len(used) == len(cliques):
            return True
        for i, c in enumerate(cliques):
            if i in used or c & closed:
                continue
            # vertices open so far but missing from c are finished
            if place(used | {i}, c, closed | (open_ - c)):
                return True
        return False

    return place(frozenset(), frozenset(), frozenset())


_PERM_CACHE = {}


def permutation_graph_masks(n):
    """All labeled graphs on [n] whose edges are the pairs two linear orders disagree on."""
    if n not in _PERM_CACHE:
        bits = pair_bits(n)
        out = set()
        orders = list(permutations(range(1, n + 1)))
        for a in orders:
            ra = {v: i for i, v in enumerate(a)}
            for b in orders:
                rb = {v: i for i, v in enumerate(b)}
                m = 0
                for (u, v), bit in bits.items():
                    if (ra[u] < ra[v]) != (rb[u] < rb[v]):
                        m |= 1 << bit
                out.add(m)
        _PERM_CACHE[n] = frozenset(out)
    return _PERM_CACHE[n]


def _is_permutation(G):
    n = len(G)
    return graph_to_mask(G, n) in permutation_graph_masks(n)


RECOGNIZERS = {
    "interval": recognize_interval,
    "co-interval": lambda G: recognize_interval(complement_graph(G)),
    "permutation": _is_permutation,
    "complete-or-null": lambda G: not G.edges or not complement_graph(G).edges,
    "all": lambda G: True,
}

BRUTE_GUARD = 5


def brute_force_graphs(n, recognizer):
    if recognizer not in RECOGNIZERS:
        raise InvalidArgumentsError(f"unknown recognizer {recognizer!r}; choose from {', '.join(RECOGNIZERS)}")
    if n > BRUTE_GUARD or n < 1:
        raise CapacityError(f"brute-force sweep limited to 1 <= n <= {BRUTE_GUARD}")
    accept = RECOGNIZERS[recognizer]
    m = n * (n - 1) // 2
    return {mask for mask in range(1 << m) if accept(mask_to_graph(mask, n))}


def brute_force_speed(n, recognizer):
    return len(brute_force_graphs(n, recognizer))
