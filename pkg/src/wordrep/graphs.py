"""Labeled graphs and the decoding of vertex words into graphs."""

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import CapacityError, InvalidArgumentsError
from .words import alphabet

ISO_GUARD = 8


def _pair(u, v):
    if u == v:
        raise InvalidArgumentsError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    vertices: frozenset
    edges: frozenset

    def __post_init__(self):
        vs = frozenset(self.vertices)
        es = frozenset(_pair(u, v) for u, v in self.edges)
        for u, v in es:
            if u not in vs or v not in vs:
                raise InvalidArgumentsError(f"edge {(u, v)} leaves the vertex set")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)

    @classmethod
    def on(cls, n, edges=()):
        return cls(frozenset(range(1, n + 1)), frozenset(edges))

    def has_edge(self, u, v):
        if u == v:
            return False
        return _pair(u, v) in self.edges

    def neighbors(self, v):
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def __len__(self):
        return len(self.vertices)


def complement_graph(G):
    vs = sorted(G.vertices)
    return LabeledGraph(G.vertices, {e for e in combinations(vs, 2) if e not in G.edges})


def induced_subgraph(G, A):
    A = frozenset(A)
    if not A <= G.vertices:
        raise InvalidArgumentsError("induced_subgraph needs a subset of the vertices")
    return LabeledGraph(A, {e for e in G.edges if e[0] in A and e[1] in A})


def relabel(G, mapping):
    return LabeledGraph({mapping[v] for v in G.vertices},
                        {(mapping[u], mapping[v]) for u, v in G.edges})


def graphs_equal(G, H):
    return G.vertices == H.vertices and G.edges == H.edges


def is_isomorphic_small(G, H):
    if max(len(G), len(H)) > ISO_GUARD:
        raise CapacityError(f"isomorphism search limited to {ISO_GUARD} vertices")
    if len(G) != len(H) or len(G.edges) != len(H.edges):
        return False
    gv, hv = sorted(G.vertices), sorted(H.vertices)
    gdeg = {v: G.degree(v) for v in gv}
    hdeg = {v: H.degree(v) for v in hv}
    if sorted(gdeg.values()) != sorted(hdeg.values()):
        return False
    for image in permutations(hv):
        if any(gdeg[a] != hdeg[b] for a, b in zip(gv, image)):
            continue
        m = dict(zip(gv, image))
        if all(_pair(m[u], m[v]) in H.edges for u, v in G.edges):
            return True
    return False


def _occurrences(w):
    occ = {}
    for j, x in enumerate(w):
        occ.setdefault(x, []).append(j)
    return occ


def _merge(pa, pb):
    # binary projection from two sorted position lists
    out = []
    i = j = 0
    while i < len(pa) and j < len(pb):
        if pa[i] < pb[j]:
            out.append("0")
            i += 1
        else:
            out.append("1")
            j += 1
    out.extend("0" * (len(pa) - i))
    out.extend("1" * (len(pb) - j))
    return "".join(out)


def decode_graph(L, w):
    """The graph on alphabet(w) with {u,v} an edge iff project(w,u,v) is in L."""
    words = L.words
    counts = {len(u) - u.count("1") for u in words}
    occ = _occurrences(w)
    active = sorted(v for v, p in occ.items() if len(p) in counts)
    edges = set()
    for u, v in combinations(active, 2):
        if _merge(occ[u], occ[v]) in words:
            edges.add((u, v))
    return LabeledGraph(alphabet(w), edges)


def format_graph(G):
    lines = [f"{len(G.vertices)} {len(G.edges)}"]
    lines += [f"{u} {v}" for u, v in sorted(G.edges)]
    return "\n".join(lines) + "\n"


def parse_graph(text):
    """Read the graph text format; vertices are 1..n."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise InvalidArgumentsError("graph text must start with 'n m'")
    n, m = map(int, lines[0])
    edges = [tuple(map(int, ln)) for ln in lines[1:]]
    if len(edges) != m:
        raise InvalidArgumentsError(f"expected {m} edges, found {len(edges)}")
    return LabeledGraph.on(n, edges)
