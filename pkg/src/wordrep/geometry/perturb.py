"""Re-spacing coordinates into general position.

Every line (axis, track, circle) is re-ranked independently.  Tied
coordinates are separated by a fixed rule so that closed-interval touching is
kept as meeting: at a tie, left endpoints come first, then single points,
then right endpoints; within one kind, by vertex id and then by index.
Interval orders count touching as comparable, so there rights come first.
Arcs sharing a start put the longer arc first, arcs sharing an end put the
shorter first, which keeps closed containment.
"""

from functools import singledispatch

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

LEFT, POINT, RIGHT = 0, 1, 2


def _rerank(tokens, start=1):
    """tokens: (coord, tiebreak, key). Returns key -> new coordinate."""
    ordered = sorted(tokens, key=lambda t: (t[0], t[1]))
    return {t[2]: start + i for i, t in enumerate(ordered)}


def _interval_tokens(ivs_by_vertex, axis, rights_first=False):
    lk, rk = (RIGHT, LEFT) if rights_first else (LEFT, RIGHT)
    out = []
    for v, ivs in ivs_by_vertex.items():
        lo, hi = ivs[axis]
        out.append((lo, (lk, v), (v, axis, 0)))
        out.append((hi, (rk, v), (v, axis, 1)))
    return out


def _respace_axes(assignment, axes, rights_first=False):
    new = {v: [[0, 0] for _ in range(axes)] for v in assignment}
    for axis in range(axes):
        for (v, ax, side), c in _rerank(_interval_tokens(assignment, axis, rights_first)).items():
            new[v][ax][side] = c
    return {v: tuple(tuple(iv) for iv in ivs) for v, ivs in new.items()}


@singledispatch
def perturb_general_position(model):
    raise TypeError(f"cannot perturb {type(model).__name__}")


@perturb_general_position.register
def _(model: IntervalSystem):
    tokens = []
    for v, ivs in model.assignment.items():
        for i, (lo, hi) in enumerate(ivs):
            tokens.append((lo, (LEFT, v, i), (v, i, 0)))
            tokens.append((hi, (RIGHT, v, i), (v, i, 1)))
    new = {v: [[0, 0] for _ in ivs] for v, ivs in model.assignment.items()}
    for (v, i, side), c in _rerank(tokens).items():
        new[v][i][side] = c
    return IntervalSystem(model.ell, {v: tuple(tuple(iv) for iv in ivs) for v, ivs in new.items()})


@perturb_general_position.register
def _(model: TrackSystem):
    return TrackSystem(model.ell, _respace_axes(model.assignment, model.ell))


@perturb_general_position.register
def _(model: BoxSystem):
    rights_first = model.relation == "order"
    return BoxSystem(model.b, _respace_axes(model.assignment, model.b, rights_first), model.relation)


@perturb_general_position.register
def _(model: TrapezoidSystem):
    return TrapezoidSystem(model.d, _respace_axes(model.assignment, model.d))


@perturb_general_position.register
def _(model: PITriangleSystem):
    top, bottom = [], []
    for v, t in model.assignment.items():
        side, point = (top, bottom) if t.flipped else (bottom, top)
        side.append((t.lo, (LEFT, v), (v, "lo")))
        side.append((t.hi, (RIGHT, v), (v, "hi")))
        point.append((t.apex, (POINT, v), (v, "apex")))
    coords = _rerank(top)
    coords.update(_rerank(bottom))
    a = {v: Triangle(coords[(v, "apex")], coords[(v, "lo")], coords[(v, "hi")], t.flipped)
         for v, t in model.assignment.items()}
    return PITriangleSystem(a, model.star)


@perturb_general_position.register
def _(model: CircularArcSystem):
    c = model.circumference
    tokens = []
    for v, arc in model.assignment.items():
        if arc is None:
            continue
        length = (arc[1] - arc[0]) % c
        tokens.append((arc[0], (LEFT, -length, v), (v, 0)))
        tokens.append((arc[1], (RIGHT, length, -v), (v, 1)))
    coords = _rerank(tokens)
    a = {v: None if arc is None else (coords[(v, 0)], coords[(v, 1)])
         for v, arc in model.assignment.items()}
    return CircularArcSystem(len(tokens) + 1, a)


@perturb_general_position.register
def _(model: CircleGonSystem):
    tokens = []
    for v, arcs in model.assignment.items():
        for i, (x, y) in enumerate(arcs or ()):
            tokens.append((x, (LEFT, v, i), (v, i, 0)))
            tokens.append((y, (RIGHT, v, i), (v, i, 1)))
    coords = _rerank(tokens)
    a = {}
    for v, arcs in model.assignment.items():
        a[v] = None if arcs is None else tuple(
            (coords[(v, i, 0)], coords[(v, i, 1)]) for i in range(len(arcs)))
    return CircleGonSystem(model.k, len(tokens) + 1, a, model.relation)


@perturb_general_position.register
def _(model: LinearOrderFamily):
    return model


@perturb_general_position.register
def _(model: EnumerationScheme):
    return model
