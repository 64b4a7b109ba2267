"""Finite 0-1-symmetric languages and their constructors.

Constructors that are defined by a predicate build the language by filtering
all words with the admissible symbol counts.  Languages given as a short list
of generators are expanded from that list, and the tests check them against
the predicates from the geometric side.
"""

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .errors import InvalidArgumentsError
from .words import (
    check_binary,
    complement_word,
    delete_first,
    deletion_op,
    enumerate_fixed_counts,
    shuffle,
    uniformity,
)


@dataclass(frozen=True)
class CountSet:
    counts: frozenset
    iso_count: int


@dataclass(frozen=True)
class FiniteLanguage:
    words: frozenset
    name: str = "custom"
    params: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(self.words))
        if not self.words:
            raise InvalidArgumentsError("a language must be non-empty")
        for u in self.words:
            check_binary(u)
        missing = [u for u in self.words if complement_word(u) not in self.words]
        if missing:
            raise InvalidArgumentsError(f"language is not 0-1-symmetric, e.g. {min(missing)!r}")

    def __contains__(self, u):
        return u in self.words

    def __iter__(self):
        return iter(sorted(self.words, key=lambda u: (len(u), u)))

    def __len__(self):
        return len(self.words)

    @property
    def label(self):
        if not self.params:
            return self.name
        return self.name + ":" + ":".join(str(p) for p in self.params)

    @property
    def uniformity(self):
        """k if every word is k-uniform, otherwise None."""
        ks = {uniformity(u) for u in self.words}
        if len(ks) == 1:
            return ks.pop()
        return None

    def renamed(self, name, params=()):
        return FiniteLanguage(self.words, name, tuple(params))


def symmetric_closure(ws, name="custom", params=()):
    ws = set(ws)
    return FiniteLanguage(ws | {complement_word(u) for u in ws}, name, tuple(params))


def count_set(L):
    counts = frozenset(u.count("0") for u in L.words)
    iso = 1
    while iso in counts:
        iso += 1
    return CountSet(counts, iso)


def max_word_length(L):
    if not L.words:
        raise InvalidArgumentsError("empty language")
    return max(len(u) for u in L.words)


def _filter(zeros, ones, pred):
    return {u for u in enumerate_fixed_counts(zeros, ones) if pred(u)}


def _all_counts(lo, hi):
    for z, o in product(range(lo, hi + 1), repeat=2):
        yield z, o


# --- the four 2-uniform base languages --------------------------------------

_BASE = {
    "circle": ("0101",),
    "permutation": ("0110",),
    "interval": ("0101", "0110"),
    "co_interval": ("0011",),
}


def base_two_uniform(which):
    key = which.replace("-", "_")
    if key not in _BASE:
        raise InvalidArgumentsError(f"unknown base language {which!r}")
    return symmetric_closure(_BASE[key], name=key.replace("_", "-"))


# --- projection languages ----------------------------------------------------

MODES = ("exists_any_pair", "exists_diagonal", "forall_diagonal")
_MODE_NAMES = {
    ("exists_any_pair", "interval"): "l-interval",
    ("exists_diagonal", "interval"): "l-track",
    ("forall_diagonal", "interval"): "box",
    ("forall_diagonal", "circle"): "ovlp",
}


def projection_language(ell, mode, base):
    if mode not in MODES:
        raise InvalidArgumentsError(f"unknown mode {mode!r}")
    if base.uniformity != 2:
        raise InvalidArgumentsError("base language must be 2-uniform")
    if ell < 1:
        raise InvalidArgumentsError("ell must be positive")
    idx = range(1, ell + 1)
    bw = base.words

    if mode == "exists_any_pair":
        def pred(w):
            return any(deletion_op(w, k, m) in bw for k in idx for m in idx)
    elif mode == "exists_diagonal":
        def pred(w):
            return any(deletion_op(w, k, k) in bw for k in idx)
    else:
        def pred(w):
            return all(deletion_op(w, k, k) in bw for k in idx)

    name = _MODE_NAMES.get((mode, base.name), f"proj-{mode}")
    return FiniteLanguage(_filter(2 * ell, 2 * ell, pred), name, (ell,))


# --- trapezoids ---------------------------------------------------------------

_INTERVAL_WORDS = frozenset({"0101", "1010", "0110", "1001"})
_CROSSING = frozenset({"00111100", "11000011"})


def trapezoid_language():
    def pred(w):
        return (deletion_op(w, 1, 1) in _INTERVAL_WORDS
                or deletion_op(w, 2, 2) in _INTERVAL_WORDS
                or w in _CROSSING)
    return FiniteLanguage(_filter(4, 4, pred), "trap")


def d_trapezoid_language(d):
    if d < 1:
        raise InvalidArgumentsError("d must be positive")

    def pred(w):
        if any(deletion_op(w, i, i) in _INTERVAL_WORDS for i in range(1, d + 1)):
            return True
        return any(deletion_op(w, i, i, 2) in _CROSSING for i in range(1, d))
    return FiniteLanguage(_filter(2 * d, 2 * d, pred), "d-trap", (d,))


# --- point-interval triangles ----------------------------------------------------

PI_GENERATORS = ("001101", "001110", "010101", "010110", "011001", "011010", "011100")


def pi_language():
    return symmetric_closure(PI_GENERATORS, name="pi")


@lru_cache(maxsize=None)
def _pi_star_excluded():
    # the two left/right disjointness patterns after dropping the flag
    left = {"0" + s + "1" for s in shuffle("00", "11")}
    right = {"11" + s + "00" for s in shuffle("0", "1")}
    return frozenset(left | right)


def pi_star_language():
    pi = pi_language().words
    excluded = _pi_star_excluded()

    def four(w):
        return delete_first(delete_first(w, "1"), "0")[::-1] in pi

    def three_four(w):
        return delete_first(w, "1") not in excluded

    words = set(pi) | _filter(4, 4, four)
    block = _filter(3, 4, three_four)
    words |= block | {complement_word(u) for u in block}
    return FiniteLanguage(words, "pi-star")


# --- circle families -------------------------------------------------------------

_ZERO_ONE_ZERO = re.compile(r"0*1*0*")
_ONE_ZERO_ONE = re.compile(r"1*0*1*")


def gon_circle_language(k):
    if k < 2:
        raise InvalidArgumentsError("k must be at least 2")
    words = set()
    for z, o in _all_counts(2, k):
        words |= _filter(z, o, lambda w: not _ZERO_ONE_ZERO.fullmatch(w)
                         and not _ONE_ZERO_ONE.fullmatch(w))
    return FiniteLanguage(words, "gon-circle", (k,))


_EVEN_SEP = (re.compile(r"(00)+1*0*"), re.compile(r"(11)+0*1*"))
_ODD_EVEN_SEP = re.compile(r"(00)+(11)*0+")
_EVEN_ODD_SEP = re.compile(r"(11)+(00)*1+")


def circle_gon_member(w):
    """Edge test for two filament regions, split by the parity of the counts."""
    z, o = w.count("0") % 2, w.count("1") % 2
    if z and o:
        return True
    if not z and not o:
        return not any(p.fullmatch(w) for p in _EVEN_SEP)
    if z:
        return not _ODD_EVEN_SEP.fullmatch(w)
    return not _EVEN_ODD_SEP.fullmatch(w)


def circle_gon_language(k):
    if k < 1:
        raise InvalidArgumentsError("k must be positive")
    words = set()
    for z, o in _all_counts(2, 2 * k + 1):
        words |= _filter(z, o, circle_gon_member)
    return FiniteLanguage(words, "circle-gon", (k,))


def _some_pair_interval(w, t):
    return any(deletion_op(w, i, j) in _INTERVAL_WORDS
               for i in range(1, t + 1) for j in range(1, t + 1))


def circular_interval_language(t):
    if t < 1:
        raise InvalidArgumentsError("t must be positive")
    words = set(enumerate_fixed_counts(2 * t + 1, 2 * t + 1))
    words |= _filter(2 * t, 2 * t, lambda w: _some_pair_interval(w, t))
    # one wrapping letter: drop its flag, pad to a 2(t+1)-uniform word
    mixed = _filter(2 * t, 2 * t + 1,
                    lambda w: _some_pair_interval("1" + delete_first(w, "1") + "100", t + 1))
    words |= mixed | {complement_word(u) for u in mixed}
    return FiniteLanguage(words, "c-int", (t,))


# --- enumeration, containment, orders ------------------------------------------------

def interval_enumerable_language():
    return symmetric_closure({s + "011" for s in shuffle("00", "1")}, name="int-en")


ARC_GENERATORS = ("0110", "100110", "010110", "01100", "01011", "00111")


def arc_containment_member(w):
    """Containment test for two arcs decoded from a projection.

    A letter seen three times has its first occurrence as a flag and owns an
    arc through the cut point; the remaining two occurrences bound the gap.
    """
    z, o = w.count("0"), w.count("1")
    if not {z, o} <= {2, 3}:
        return False
    if z == 2 and o == 2:
        return w in ("0110", "1001")
    if z == 3 and o == 3:
        return delete_first(delete_first(w, "0"), "1") in ("0110", "1001")
    if z == 3:
        return delete_first(w, "0") in ("0011", "1100")
    return delete_first(w, "1") in ("0011", "1100")


def arc_containment_language(literal=False):
    """Arc containment language.

    ``literal=True`` gives the closure of the six published generators.  The
    default is the language defined by :func:`arc_containment_member`, which
    adds the two words 00011 and 11100 missing from that list and allows the
    flags of two wrapping arcs to appear in either order.
    """
    if literal:
        return symmetric_closure(ARC_GENERATORS, name="arc-cont", params=("literal",))
    words = set()
    for z, o in _all_counts(2, 3):
        words |= _filter(z, o, arc_containment_member)
    return FiniteLanguage(words, "arc-cont")


DYCK_GUARD = 10


def dyck_words(d):
    """Binary images of well-parenthesized words with d pairs, built by the grammar."""
    from .errors import CapacityError
    if d > DYCK_GUARD:
        raise CapacityError(f"d={d} exceeds guard {DYCK_GUARD}")
    if d < 0:
        raise InvalidArgumentsError("d must be non-negative")

    @lru_cache(maxsize=None)
    def gen(n):
        if n == 0:
            return frozenset({""})
        out = set()
        # every non-empty wpw is (x)y with x, y wpw
        for i in range(n):
            for x in gen(i):
                for y in gen(n - 1 - i):
                    out.add("0" + x + "1" + y)
        return frozenset(out)

    return set(gen(d))


def is_dyck(u):
    h = 0
    for c in u:
        h += 1 if c == "0" else -1
        if h < 0:
            return False
    return h == 0


def comparability_language(d):
    if d < 1:
        raise InvalidArgumentsError("d must be positive")
    return symmetric_closure(dyck_words(d), name="cmp", params=(d,))


def interval_dim_language(d):
    if d < 1:
        raise InvalidArgumentsError("d must be positive")

    def pred(w):
        first = deletion_op(w, 1, 1)
        if first not in ("0011", "1100"):
            return False
        return all(deletion_op(w, k, k) == first for k in range(2, d + 1))
    return FiniteLanguage(_filter(2 * d, 2 * d, pred), "idim", (d,))


def split_wr_language():
    return symmetric_closure({"01", "0101", "010101"}, name="split-wr")


# --- names ---------------------------------------------------------------------

LANGUAGE_NAMES = (
    "interval", "circle", "permutation", "co-interval",
    "l-interval:l", "l-track:l", "box:b", "ovlp:b", "trap", "d-trap:d",
    "pi", "pi-star", "gon-circle:k", "circle-gon:k", "c-int:t", "int-en",
    "arc-cont", "cmp:d", "idim:d", "split-wr",
)

_PLAIN = {
    "interval": lambda: base_two_uniform("interval"),
    "circle": lambda: base_two_uniform("circle"),
    "permutation": lambda: base_two_uniform("permutation"),
    "co-interval": lambda: base_two_uniform("co_interval"),
    "trap": trapezoid_language,
    "pi": pi_language,
    "pi-star": pi_star_language,
    "int-en": interval_enumerable_language,
    "arc-cont": arc_containment_language,
    "split-wr": split_wr_language,
}

_PARAM = {
    "l-interval": lambda p: projection_language(p, "exists_any_pair", base_two_uniform("interval")),
    "l-track": lambda p: projection_language(p, "exists_diagonal", base_two_uniform("interval")),
    "box": lambda p: projection_language(p, "forall_diagonal", base_two_uniform("interval")),
    "ovlp": lambda p: projection_language(p, "forall_diagonal", base_two_uniform("circle")),
    "d-trap": d_trapezoid_language,
    "gon-circle": gon_circle_language,
    "circle-gon": circle_gon_language,
    "c-int": circular_interval_language,
    "cmp": comparability_language,
    "idim": interval_dim_language,
}


def parse_language_name(text):
    """Split ``"box:2"`` into ``("box", 2)``; plain names give ``(name, None)``."""
    name, sep, arg = text.strip().partition(":")
    if name in _PLAIN and not sep:
        return name, None
    if name in _PARAM:
        if not sep:
            raise InvalidArgumentsError(f"language {name!r} needs a parameter, e.g. {name}:2")
        try:
            p = int(arg)
        except ValueError:
            raise InvalidArgumentsError(f"bad parameter in {text!r}") from None
        return name, p
    raise InvalidArgumentsError(f"unknown language {text!r}")


@lru_cache(maxsize=None)
def get_language(text):
    name, p = parse_language_name(text)
    if p is None:
        L = _PLAIN[name]()
        return L.renamed(name)
    return _PARAM[name](p).renamed(name, (p,))


def read_language(path, close=False, name="file"):
    words = set()
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            words.add(check_binary(line))
    if close:
        return symmetric_closure(words, name=name)
    return FiniteLanguage(words, name)


def format_language(L):
    return "".join(u + "\n" for u in L)


def write_language(L, path):
    with open(path, "w") as fh:
        fh.write(f"# {L.label}\n")
        fh.write(format_language(L))
