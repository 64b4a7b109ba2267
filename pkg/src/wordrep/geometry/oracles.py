"""Direct graph oracles, computed from coordinates only.

Intervals are closed, so touching endpoints count as meeting.  The word
machinery is deliberately not used here.
"""

from functools import singledispatch
from itertools import combinations

from ..graphs import LabeledGraph
from .models import (
    BoxSystem,
    CircleGonSystem,
    CircularArcSystem,
    EnumerationScheme,
    IntervalSystem,
    LinearOrderFamily,
    PITriangleSystem,
    TrackSystem,
    TrapezoidSystem,
)


def meets(a, b):
    return a[0] <= b[1] and b[0] <= a[1]


def contains(a, b):
    """Closed interval a contains b."""
    return a[0] <= b[0] and b[1] <= a[1]


def overlaps(a, b):
    return meets(a, b) and not contains(a, b) and not contains(b, a)


def trapezoids_meet(top1, bot1, top2, bot2):
    """Two trapezoids spanned between a pair of parallel lines."""
    if meets(top1, top2) or meets(bot1, bot2):
        return True
    # disjoint on both lines: the trapezoids meet iff their sides cross
    return (top1[1] < top2[0] and bot2[1] < bot1[0]) or (top2[1] < top1[0] and bot1[1] < bot2[0])


def _graph(vertices, adjacent):
    vs = sorted(vertices)
    return LabeledGraph(frozenset(vs), {(u, v) for u, v in combinations(vs, 2) if adjacent(u, v)})


@singledispatch
def oracle_graph(model):
    raise TypeError(f"no oracle for {type(model).__name__}")


@oracle_graph.register
def _(model: IntervalSystem):
    a = model.assignment
    return _graph(a, lambda u, v: any(meets(i, j) for i in a[u] for j in a[v]))


@oracle_graph.register
def _(model: TrackSystem):
    a = model.assignment
    return _graph(a, lambda u, v: any(meets(i, j) for i, j in zip(a[u], a[v])))


_BOX_RULES = {
    "intersect": lambda p, q: all(meets(i, j) for i, j in zip(p, q)),
    "overlap": lambda p, q: all(overlaps(i, j) for i, j in zip(p, q)),
    "order": lambda p, q: (all(i[1] <= j[0] for i, j in zip(p, q))
                           or all(j[1] <= i[0] for i, j in zip(p, q))),
    "contain": lambda p, q: (all(contains(i, j) for i, j in zip(p, q))
                             or all(contains(j, i) for i, j in zip(p, q))),
}


@oracle_graph.register
def _(model: BoxSystem):
    a = model.assignment
    rule = _BOX_RULES[model.relation]
    return _graph(a, lambda u, v: rule(a[u], a[v]))


@oracle_graph.register
def _(model: TrapezoidSystem):
    a = model.assignment
    if model.d == 1:
        return _graph(a, lambda u, v: meets(a[u][0], a[v][0]))

    def adj(u, v):
        p, q = a[u], a[v]
        return any(trapezoids_meet(p[i], p[i + 1], q[i], q[i + 1]) for i in range(model.d - 1))
    return _graph(a, adj)


@oracle_graph.register
def _(model: PITriangleSystem):
    a = model.assignment
    return _graph(a, lambda u, v: trapezoids_meet(a[u].top, a[u].bottom, a[v].top, a[v].bottom))


def arc_length(arc, circumference):
    x, y = arc
    return (y - x) % circumference


def arc_within(inner, outer, circumference):
    """Closed arc ``inner`` lies inside closed arc ``outer``."""
    offset = (inner[0] - outer[0]) % circumference
    return offset + arc_length(inner, circumference) <= arc_length(outer, circumference)


@oracle_graph.register
def _(model: CircularArcSystem):
    a, c = model.assignment, model.circumference

    def adj(u, v):
        if a[u] is None or a[v] is None:
            return False
        return arc_within(a[u], a[v], c) or arc_within(a[v], a[u], c)
    return _graph(a, adj)


def arc_points(arc, circumference):
    """Integer positions covered by a closed arc with integer endpoints."""
    x, y = arc
    return {(x + i) % circumference for i in range(arc_length(arc, circumference) + 1)}


def _gap_labels(covered, circumference):
    # cyclic runs of uncovered positions, scanned from just after a covered one
    start = next(iter(covered))
    labels = {}
    label = -1
    prev_covered = True
    for i in range(1, circumference + 1):
        p = (start + i) % circumference
        if p in covered:
            prev_covered = True
            continue
        if prev_covered:
            label += 1
        labels[p] = label
        prev_covered = False
    return labels


def hulls_meet(arcs_u, arcs_v, circumference):
    """Convex hulls of two arc sets on a circle intersect.

    With integer endpoints, two closed arcs meet iff they share an integer
    position.  Disjoint hulls means all arcs of v sit in one gap of u.
    """
    cover_u = set().union(*(arc_points(x, circumference) for x in arcs_u))
    gaps = _gap_labels(cover_u, circumference)
    seen = set()
    for arc in arcs_v:
        pts = arc_points(arc, circumference)
        if pts & cover_u:
            return True
        seen |= {gaps[p] for p in pts}
    return len(seen) > 1


@oracle_graph.register
def _(model: CircleGonSystem):
    a, c = model.assignment, model.circumference
    pts = {v: [arc_points(x, c) for x in arcs] for v, arcs in a.items() if arcs is not None}

    if model.relation == "intersect":
        def adj(u, v):
            return u in pts and v in pts and any(p & q for p in pts[u] for q in pts[v])
    else:
        def adj(u, v):
            return a[u] is not None and a[v] is not None and hulls_meet(a[u], a[v], c)
    return _graph(a, adj)


@oracle_graph.register
def _(model: LinearOrderFamily):
    ranks = [{v: i for i, v in enumerate(o)} for o in model.orders]

    def adj(u, v):
        before = [r[u] < r[v] for r in ranks]
        return all(before) or not any(before)
    return _graph(model.vertices, adj)


@oracle_graph.register
def _(model: EnumerationScheme):
    edges = set()
    for v in model.ordering:
        bd = model.bounds.get(v)
        if bd is None:
            continue
        for j in range(bd[0], bd[1] + 1):
            edges.add((model.ordering[j - 1], v))
    return LabeledGraph(frozenset(model.ordering), edges)
