"""Turning models into words and words back into models.

Encoders need distinct coordinates wherever a sweep orders them
(per line for the multi-line families).  Decoders read coordinates off
occurrence positions.  Letters whose multiplicity the family does not use
become isolated vertices.
"""

from functools import singledispatch

from ..errors import DegenerateModelError, InvalidArgumentsError
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
    Triangle,
)


def _sweep(tokens, what="endpoints"):
    coords = [c for c, _ in tokens]
    if len(set(coords)) != len(coords):
        raise DegenerateModelError(f"coincident {what}; perturb the model first")
    return tuple(v for _, v in sorted(tokens))


def _axis_major(assignment, axes):
    word = ()
    for i in range(axes):
        tokens = []
        for v, ivs in assignment.items():
            tokens += [(ivs[i][0], v), (ivs[i][1], v)]
        word += _sweep(tokens, f"endpoints on axis {i + 1}")
    return word


@singledispatch
def encode_model(model):
    raise TypeError(f"no encoder for {type(model).__name__}")


@encode_model.register
def _(model: IntervalSystem):
    tokens = [(c, v) for v, ivs in model.assignment.items() for iv in ivs for c in iv]
    return _sweep(tokens)


@encode_model.register
def _(model: TrackSystem):
    # sweeping track by track is the same as shifting each track past the previous one
    return _axis_major(model.assignment, model.ell)


@encode_model.register
def _(model: BoxSystem):
    return _axis_major(model.assignment, model.b)


@encode_model.register
def _(model: TrapezoidSystem):
    return _axis_major(model.assignment, model.d)


@encode_model.register
def _(model: PITriangleSystem):
    top, bottom = [], []
    for v, t in model.assignment.items():
        if t.flipped:
            top += [(t.lo, v), (t.hi, v)]
            bottom.append((t.apex, v))
        else:
            top.append((t.apex, v))
            bottom += [(t.lo, v), (t.hi, v)]
    flags = tuple(sorted(v for v, t in model.assignment.items() if t.flipped))
    return flags + _sweep(top, "corners on the top line") + _sweep(bottom, "corners on the bottom line")


@encode_model.register
def _(model: CircularArcSystem):
    arcs = {v: a for v, a in model.assignment.items() if a is not None}
    flags = tuple(sorted(v for v, (x, y) in arcs.items() if x > y))
    tokens = [(c, v) for v, a in arcs.items() for c in a]
    isolated = tuple(sorted(v for v, a in model.assignment.items() if a is None))
    return flags + _sweep(tokens, "arc endpoints") + isolated


@encode_model.register
def _(model: CircleGonSystem):
    present = {v: arcs for v, arcs in model.assignment.items() if arcs is not None}
    flags = tuple(sorted(v for v, arcs in present.items() if any(x > y for x, y in arcs)))
    tokens = [(c, v) for v, arcs in present.items() for a in arcs for c in a]
    isolated = tuple(sorted(v for v, arcs in model.assignment.items() if arcs is None))
    _check_disjoint_arcs(model)
    return flags + _sweep(tokens, "arc endpoints") + isolated


def _check_disjoint_arcs(model):
    from .oracles import arc_points
    for v, arcs in model.assignment.items():
        if arcs is None:
            continue
        pts = [arc_points(a, model.circumference) for a in arcs]
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if pts[i] & pts[j]:
                    raise DegenerateModelError(f"arcs of vertex {v} overlap")


@encode_model.register
def _(model: LinearOrderFamily):
    return tuple(v for order in model.orders for v in order)


def _third(word, v):
    seen = 0
    for j, x in enumerate(word):
        if x == v:
            seen += 1
            if seen == 3:
                return j
    raise DegenerateModelError(f"vertex {v} has not been inserted yet")


@encode_model.register
def _(model: EnumerationScheme):
    word = []
    for v in model.ordering:
        bd = model.bounds.get(v)
        if bd is None:
            word += [v, v, v]
            continue
        a = _third(word, model.ordering[bd[0] - 1])
        b = _third(word, model.ordering[bd[1] - 1])
        # u1 v u2 v u3 v, with u2 running from the third copy of v_l to that of v_r
        word = word[:a] + [v] + word[a:b + 1] + [v] + word[b + 1:] + [v]
    return tuple(word)


# --- decoding ------------------------------------------------------------------

def _occ(w):
    occ = {}
    for j, x in enumerate(w, start=1):
        occ.setdefault(x, []).append(j)
    return occ


def _split(w, keep):
    occ = _occ(w)
    regular = {v: p for v, p in occ.items() if keep(len(p))}
    isolated = sorted(v for v in occ if v not in regular)
    return regular, isolated


def _pairs(p):
    return tuple((p[2 * i], p[2 * i + 1]) for i in range(len(p) // 2))


def _decode_intervals(w, ell):
    reg, iso = _split(w, lambda c: c == 2 * ell)
    a = {v: _pairs(p) for v, p in reg.items()}
    base = len(w) + 1
    for j, v in enumerate(iso):
        start = base + 2 * ell * j
        a[v] = tuple((start + 2 * i, start + 2 * i + 1) for i in range(ell))
    return IntervalSystem(ell, a)


def _per_axis(w, axes):
    """Occurrence intervals per axis; isolated letters go past the end, pairwise disjoint."""
    reg, iso = _split(w, lambda c: c == 2 * axes)
    a = {v: _pairs(p) for v, p in reg.items()}
    base = len(w) + 1
    for j, v in enumerate(iso):
        a[v] = tuple((base + 2 * j, base + 2 * j + 1) for _ in range(axes))
    return a


def _decode_order_boxes(w, d):
    # isolated letters get huge nested boxes, which are incomparable to everything
    reg, iso = _split(w, lambda c: c == 2 * d)
    m = len(iso)
    a = {v: tuple((x + m, y + m) for x, y in _pairs(p)) for v, p in reg.items()}
    for j, v in enumerate(iso):
        a[v] = tuple((m - j, len(w) + m + 1 + j) for _ in range(d))
    return BoxSystem(d, a, "order")


def _decode_pi(w, star):
    counts = {3, 4} if star else {3}
    reg, iso = _split(w, lambda c: c in counts)
    a = {}
    for v, p in reg.items():
        if len(p) == 3:
            a[v] = Triangle(p[0], p[1], p[2])
        else:
            # first copy is the orientation flag
            a[v] = Triangle(p[3], p[1], p[2], True)
    base = len(w) + 1
    for j, v in enumerate(iso):
        a[v] = Triangle(base + 3 * j, base + 3 * j + 1, base + 3 * j + 2)
    return PITriangleSystem(a, star)


def _decode_arcs(w):
    reg, iso = _split(w, lambda c: c in (2, 3))
    a = {}
    for v, p in reg.items():
        a[v] = (p[0], p[1]) if len(p) == 2 else (p[2], p[1])
    for v in iso:
        a[v] = None
    return CircularArcSystem(len(w) + 1, a)


def _filament(p):
    if len(p) % 2 == 0:
        return _pairs(p)
    q = p[1:]
    return ((q[-1], q[0]),) + tuple((q[2 * i + 1], q[2 * i + 2]) for i in range((len(q) - 2) // 2))


def _decode_circle_gon(w, k):
    reg, iso = _split(w, lambda c: 2 <= c <= 2 * k + 1)
    a = {v: _filament(p) for v, p in reg.items()}
    a.update({v: None for v in iso})
    return CircleGonSystem(k, len(w) + 1, a, "hull")


def _decode_circular_intervals(w, t):
    reg, iso = _split(w, lambda c: c in (2 * t, 2 * t + 1))
    a = {v: _filament(p) for v, p in reg.items()}
    a.update({v: None for v in iso})
    return CircleGonSystem(t, len(w) + 1, a, "intersect")


def _decode_orders(w, d):
    reg, iso = _split(w, lambda c: c == d)
    orders = [sorted(reg, key=lambda v: reg[v][i]) for i in range(d)]
    if iso:
        if d < 2:
            raise DegenerateModelError("a single linear order cannot hold isolated elements")
        orders[0] = iso + orders[0]
        orders[1] = orders[1] + iso[::-1]
        for i in range(2, d):
            orders[i] = orders[i] + iso
    return LinearOrderFamily(tuple(tuple(o) for o in orders))


def _decode_enumeration(w):
    reg, iso = _split(w, lambda c: c == 3)
    ordering = sorted(reg, key=lambda v: reg[v][2])
    rank = {v: i for i, v in enumerate(ordering, start=1)}
    bounds = {}
    for v in ordering:
        first, second = reg[v][0], reg[v][1]
        earlier = [rank[x] for x in ordering if first < reg[x][2] < second]
        bounds[v] = (min(earlier), max(earlier)) if earlier else None
    return EnumerationScheme(tuple(ordering) + tuple(iso), bounds)


DECODERS = {
    "intervals": _decode_intervals,
    "tracks": lambda w, p: TrackSystem(p, _per_axis(w, p)),
    "boxes": lambda w, p: BoxSystem(p, _per_axis(w, p), "intersect"),
    "overlap": lambda w, p: BoxSystem(p, _per_axis(w, p), "overlap"),
    "interval-dim": _decode_order_boxes,
    "containment": lambda w, p: BoxSystem(1, _per_axis(w, 1), "contain"),
    "trapezoids": lambda w, p: TrapezoidSystem(p, _per_axis(w, p)),
    "pi": lambda w, p: _decode_pi(w, False),
    "pi-star": lambda w, p: _decode_pi(w, True),
    "arcs": lambda w, p: _decode_arcs(w),
    "circle-gon": _decode_circle_gon,
    "c-int": _decode_circular_intervals,
    "comparability": _decode_orders,
    "int-enum": lambda w, p: _decode_enumeration(w),
}


def decode_model(w, family, param=None):
    """Rebuild a model of ``family`` from the occurrence positions of ``w``."""
    if family not in DECODERS:
        raise InvalidArgumentsError(f"unknown family {family!r}")
    return DECODERS[family](tuple(w), param)


def is_interval_enumeration(G, ordering):
    """Every vertex's earlier neighbours form a contiguous block of ``ordering``."""
    rank = {v: i for i, v in enumerate(ordering)}
    if set(rank) != set(G.vertices):
        raise InvalidArgumentsError("ordering must list every vertex once")
    for v in ordering:
        earlier = sorted(rank[u] for u in G.neighbors(v) if rank[u] < rank[v])
        if earlier and earlier[-1] - earlier[0] + 1 != len(earlier):
            return False
    return True

