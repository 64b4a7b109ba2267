"""k-letter graphs, thin representations and boxes built from them."""

from dataclasses import dataclass
from itertools import combinations, product

from .errors import CapacityError, InvalidArgumentsError
from .geometry.models import BoxSystem
from .graphs import LabeledGraph

LETTER_K_GUARD = 3
LETTER_N_GUARD = 7


@dataclass(frozen=True)
class LetterSpec:
    k: int
    decoder: frozenset
    word: tuple

    def __post_init__(self):
        object.__setattr__(self, "decoder", frozenset(tuple(p) for p in self.decoder))
        object.__setattr__(self, "word", tuple(self.word))
        ok = range(1, self.k + 1)
        if any(a not in ok or b not in ok for a, b in self.decoder):
            raise InvalidArgumentsError("decoder pairs must use letters 1..k")
        if any(x not in ok for x in self.word):
            raise InvalidArgumentsError("word letters must lie in 1..k")


@dataclass(frozen=True)
class ThinRepresentation:
    ordering: tuple
    partition: dict

    def __post_init__(self):
        object.__setattr__(self, "ordering", tuple(self.ordering))
        if set(self.ordering) != set(self.partition) or len(set(self.ordering)) != len(self.ordering):
            raise InvalidArgumentsError("partition and ordering must cover the same vertices once")

    @property
    def classes(self):
        return sorted(set(self.partition.values()))


def decode_letter_graph(spec):
    w = spec.word
    edges = {(i + 1, j + 1) for i, j in combinations(range(len(w)), 2) if (w[i], w[j]) in spec.decoder}
    return LabeledGraph.on(len(w), edges)


def letter_to_thin(spec):
    n = len(spec.word)
    return ThinRepresentation(tuple(range(1, n + 1)), {i + 1: x for i, x in enumerate(spec.word)})


def is_thin_representation(G, rep):
    if set(rep.ordering) != set(G.vertices):
        raise InvalidArgumentsError("representation does not cover the graph's vertices")
    order, cls = rep.ordering, rep.partition
    for a, b, c in combinations(range(len(order)), 3):
        va, vb, vc = order[a], order[b], order[c]
        if cls[va] == cls[vb] and G.has_edge(va, vc) and not G.has_edge(vb, vc):
            return False
    return True


def thin_to_boxes(G, rep):
    """Boxes, one axis per class, whose intersection graph is ``G``.

    On axis i the right endpoints come first for the vertices of class i and
    then for the rest, each group in the thin ordering.  A left endpoint sits
    directly left of the right endpoint of the vertex's earliest class-i
    neighbour; vertices without one fall back to their own right endpoint
    (class-i vertices) or to the first right endpoint outside class i.
    """
    if not is_thin_representation(G, rep):
        raise InvalidArgumentsError("representation is not thin for this graph")
    order = rep.ordering
    pos = {v: i for i, v in enumerate(order)}
    boxes = {v: [] for v in order}
    for c in rep.classes:
        inside = [v for v in order if rep.partition[v] == c]
        outside = [v for v in order if rep.partition[v] != c]
        right_rank = {v: r for r, v in enumerate(inside + outside)}
        tokens = []
        for v in order:
            tokens.append(((right_rank[v], 1, 0), v, "R"))
            nbrs = [u for u in inside if G.has_edge(u, v)]
            if rep.partition[v] == c:
                earlier = [u for u in nbrs if pos[u] < pos[v]]
                anchor = min(earlier, key=pos.get) if earlier else v
            else:
                anchor = min(nbrs, key=pos.get) if nbrs else (outside[0] if outside else v)
            tokens.append(((right_rank[anchor], 0, pos[v]), v, "L"))
        coord = {}
        for x, (_, v, side) in enumerate(sorted(tokens), start=1):
            coord[v, side] = x
        for v in order:
            boxes[v].append((coord[v, "L"], coord[v, "R"]))
    return BoxSystem(len(rep.classes), {v: tuple(b) for v, b in boxes.items()}, "intersect")


def _pair_index(n):
    return {(i, j): b for b, (i, j) in enumerate(combinations(range(n), 2))}


def mask_to_edges(mask, n):
    return frozenset((i + 1, j + 1) for (i, j), b in _pair_index(n).items() if mask >> b & 1)


def enumerate_letter_masks(k, n):
    """Edge bitmasks (pair (i,j) of positions, i<j, in lexicographic order)."""
    if k > LETTER_K_GUARD or n > LETTER_N_GUARD or k < 1 or n < 1:
        raise CapacityError(f"letter census limited to k<={LETTER_K_GUARD}, n<={LETTER_N_GUARD}")
    idx = _pair_index(n)
    letter_pairs = [(a, b) for a in range(1, k + 1) for b in range(1, k + 1)]
    out = set()
    for word in product(range(1, k + 1), repeat=n):
        by_pair = [0] * len(letter_pairs)
        for (i, j), bit in idx.items():
            by_pair[letter_pairs.index((word[i], word[j]))] |= 1 << bit
        # OR over every decoder subset, built from smaller subsets
        masks = [0] * (1 << len(letter_pairs))
        for s in range(1, len(masks)):
            low = s & -s
            masks[s] = masks[s ^ low] | by_pair[low.bit_length() - 1]
        out.update(masks)
    return out


def enumerate_letter_graphs(k, n):
    return {mask_to_edges(m, n) for m in enumerate_letter_masks(k, n)}


def format_letter_spec(spec):
    pairs = ",".join(f"{a}{b}" for a, b in sorted(spec.decoder))
    return f"{spec.k}\n{pairs}\n{''.join(str(x) for x in spec.word)}\n"


def parse_letter_spec(text):
    lines = text.strip("\n").split("\n")
    if len(lines) < 3:
        lines += [""] * (3 - len(lines))
    try:
        k = int(lines[0].strip())
        pairs = [p.strip() for p in lines[1].split(",") if p.strip()]
        decoder = {(int(p[0]), int(p[1])) for p in pairs if len(p) == 2}
        if len(decoder) != len(set(pairs)):
            raise ValueError
        word = tuple(int(c) for c in lines[2].strip())
    except (ValueError, IndexError):
        raise InvalidArgumentsError("bad letter spec; expected k, pairs like 11,12, and a digit word") from None
    return LetterSpec(k, decoder, word)
