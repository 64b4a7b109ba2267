"""Words over {0,1} and over vertex alphabets.

Binary words are plain ``str`` objects made of ``'0'`` and ``'1'``.  Vertex
words are tuples of positive integers.  Most helpers accept either kind, and
all positions are 1-based.
"""

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import CapacityError, InvalidArgumentsError, OutOfRangeError

SHUFFLE_GUARD = 20
FIXED_COUNT_GUARD = 24

_FLIP = str.maketrans("01", "10")


def is_binary(u):
    return isinstance(u, str) and all(c in "01" for c in u)


def check_binary(u):
    if not is_binary(u):
        raise InvalidArgumentsError(f"not a binary word: {u!r}")
    return u


def alphabet(w):
    return frozenset(w)


def letter_counts(w):
    return Counter(w)


def project(w, a, b):
    """Map ``a`` to 0, ``b`` to 1 and erase every other letter."""
    if a == b:
        raise InvalidArgumentsError("projection needs two distinct letters")
    return "".join("0" if x == a else "1" for x in w if x == a or x == b)


def erase_to(w, keep):
    """Erase every letter outside ``keep``; the result has the type of ``w``."""
    keep = set(keep)
    kept = [x for x in w if x in keep]
    return "".join(kept) if isinstance(w, str) else tuple(kept)


def complement_word(u):
    return check_binary(u).translate(_FLIP)


def occurrence_index(w, a, ell):
    """Position of the ``ell``-th occurrence of ``a`` in ``w``."""
    if ell < 1:
        raise OutOfRangeError(f"occurrence number must be positive, got {ell}")
    seen = 0
    for j, x in enumerate(w, start=1):
        if x == a:
            seen += 1
            if seen == ell:
                return j
    raise OutOfRangeError(f"{a!r} occurs {seen} times, fewer than {ell}")


def positions(w, a):
    return [j for j, x in enumerate(w, start=1) if x == a]


def delete_first(w, a):
    for j, x in enumerate(w):
        if x == a:
            return w[:j] + w[j + 1:]
    return w


def shuffle(u, v):
    """All interleavings of ``u`` and ``v`` that keep each word's own order."""
    if len(u) + len(v) > SHUFFLE_GUARD:
        raise CapacityError(
            f"shuffle of lengths {len(u)}+{len(v)} exceeds guard {SHUFFLE_GUARD}",
            bound=comb(len(u) + len(v), len(u)),
        )
    as_str = isinstance(u, str) and isinstance(v, str)
    u, v = tuple(u), tuple(v)

    @lru_cache(maxsize=None)
    def rec(i, j):
        if i == len(u):
            return {v[j:]}
        if j == len(v):
            return {u[i:]}
        out = {(u[i],) + s for s in rec(i + 1, j)}
        out |= {(v[j],) + s for s in rec(i, j + 1)}
        return out

    result = rec(0, 0)
    if as_str:
        return {"".join(s) for s in result}
    return set(result)


def uniformity(u):
    """Return k if ``u`` has exactly k zeros and k ones, else None."""
    z = u.count("0")
    if z == u.count("1"):
        return z
    return None


def deletion_op(w, k, m, d=1):
    """Keep 0-occurrences 2k-1..2(k-1+d) and 1-occurrences 2m-1..2(m-1+d)."""
    check_binary(w)
    half = uniformity(w)
    if half is None or half % 2:
        raise InvalidArgumentsError(f"deletion operator needs an even-uniform word, got {w!r}")
    ell = half // 2
    if min(k, m, d) < 1 or k - 1 + d > ell or m - 1 + d > ell:
        raise InvalidArgumentsError(f"indices k={k} m={m} d={d} out of range for {2 * ell}-uniform word")
    lo = {"0": 2 * k - 1, "1": 2 * m - 1}
    hi = {"0": 2 * (k - 1 + d), "1": 2 * (m - 1 + d)}
    seen = {"0": 0, "1": 0}
    out = []
    for c in w:
        seen[c] += 1
        if lo[c] <= seen[c] <= hi[c]:
            out.append(c)
    return "".join(out)


def enumerate_fixed_counts(zeros, ones):
    n = zeros + ones
    if zeros < 0 or ones < 0:
        raise InvalidArgumentsError("counts must be non-negative")
    if n > FIXED_COUNT_GUARD:
        raise CapacityError(f"length {n} exceeds guard {FIXED_COUNT_GUARD}", bound=comb(n, zeros))
    out = set()
    for zs in combinations(range(n), zeros):
        bits = ["1"] * n
        for i in zs:
            bits[i] = "0"
        out.add("".join(bits))
    return out


def is_alternating(u):
    return all(u[i] != u[i + 1] for i in range(len(u) - 1))


def letter_to_int(c):
    if len(c) == 1 and "a" <= c <= "z":
        return ord(c) - ord("a") + 1
    raise InvalidArgumentsError(f"not a lowercase letter: {c!r}")


def parse_vertex_word(text):
    """Parse ``"abac"`` (letters a-z as 1-26) or ``"1,2,1,3"``."""
    text = text.strip()
    if not text:
        return ()
    if "," in text or text.isdigit():
        parts = [p.strip() for p in text.split(",")] if "," in text else [text]
        try:
            letters = tuple(int(p) for p in parts)
        except ValueError:
            raise InvalidArgumentsError(f"bad vertex word: {text!r}") from None
        if any(x < 1 for x in letters):
            raise InvalidArgumentsError("vertex identifiers must be positive")
        return letters
    return tuple(letter_to_int(c) for c in text)


def format_vertex_word(w, letters=None):
    """Render a vertex word; uses a-z when every identifier fits and ``letters`` is not False."""
    if letters is None:
        letters = all(1 <= x <= 26 for x in w)
    if letters:
        return "".join(chr(ord("a") + x - 1) for x in w)
    return ",".join(str(x) for x in w)
