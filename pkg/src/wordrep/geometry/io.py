"""Plain-text geometry files.

The header is ``family n [params]`` and each following line is
``id role coords...``.  Roles per family:

* intervals, tracks, boxes, overlap, interval-dim, containment, trapezoids:
  role is the interval/track/axis/line number, coords ``left right``.
* pi, pi-star: role 1 has the apex on the top line, role 2 the apex on the
  bottom line; coords ``apex lo hi``.
* arcs: header params ``C``; role 1 with coords ``x y``, or role 0 alone
  for a vertex without an arc.
* circle-gon, c-int: header params ``k C``; role j is the j-th arc, role 0
  marks a vertex without arcs.
* comparability: header params ``d``; role i is the order, coord the
  1-based position in it.
* int-enum: role is the position in the ordering, coords ``l r`` or
  ``0 0`` for no earlier neighbour.
"""

from ..errors import InvalidArgumentsError
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
    model_vertices,
)

_AXIS_FAMILIES = {
    "intervals": lambda p, a: IntervalSystem(p, a),
    "tracks": lambda p, a: TrackSystem(p, a),
    "boxes": lambda p, a: BoxSystem(p, a, "intersect"),
    "overlap": lambda p, a: BoxSystem(p, a, "overlap"),
    "interval-dim": lambda p, a: BoxSystem(p, a, "order"),
    "containment": lambda p, a: BoxSystem(p, a, "contain"),
    "trapezoids": lambda p, a: TrapezoidSystem(p, a),
}
_BOX_FAMILY = {"intersect": "boxes", "overlap": "overlap", "order": "interval-dim", "contain": "containment"}


def family_of(model):
    if isinstance(model, IntervalSystem):
        return "intervals", model.ell
    if isinstance(model, TrackSystem):
        return "tracks", model.ell
    if isinstance(model, BoxSystem):
        return _BOX_FAMILY[model.relation], model.b
    if isinstance(model, TrapezoidSystem):
        return "trapezoids", model.d
    if isinstance(model, PITriangleSystem):
        return ("pi-star" if model.star else "pi"), None
    if isinstance(model, CircularArcSystem):
        return "arcs", None
    if isinstance(model, CircleGonSystem):
        return ("circle-gon" if model.relation == "hull" else "c-int"), model.k
    if isinstance(model, LinearOrderFamily):
        return "comparability", model.d
    if isinstance(model, EnumerationScheme):
        return "int-enum", None
    raise TypeError(f"unknown model type {type(model).__name__}")


def format_model(model):
    fam, p = family_of(model)
    lines = []
    if fam in _AXIS_FAMILIES:
        a = model.assignment
        head = [fam, len(a), p]
        for v in sorted(a):
            for i, (lo, hi) in enumerate(a[v], start=1):
                lines.append((v, i, lo, hi))
    elif fam in ("pi", "pi-star"):
        a = model.assignment
        head = [fam, len(a)]
        for v in sorted(a):
            t = a[v]
            lines.append((v, 2 if t.flipped else 1, t.apex, t.lo, t.hi))
    elif fam == "arcs":
        a = model.assignment
        head = [fam, len(a), model.circumference]
        for v in sorted(a):
            lines.append((v, 0) if a[v] is None else (v, 1) + tuple(a[v]))
    elif fam in ("circle-gon", "c-int"):
        a = model.assignment
        head = [fam, len(a), p, model.circumference]
        for v in sorted(a):
            if a[v] is None:
                lines.append((v, 0))
            else:
                lines += [(v, j) + tuple(arc) for j, arc in enumerate(a[v], start=1)]
    elif fam == "comparability":
        head = [fam, len(model.vertices), p]
        ranks = [{v: i for i, v in enumerate(o, start=1)} for o in model.orders]
        for v in sorted(model.vertices):
            lines += [(v, i, r[v]) for i, r in enumerate(ranks, start=1)]
    else:
        head = [fam, len(model.ordering)]
        for i, v in enumerate(model.ordering, start=1):
            bd = model.bounds.get(v)
            lines.append((v, i) + (bd if bd else (0, 0)))
    out = [" ".join(str(x) for x in head)]
    out += [" ".join(str(x) for x in ln) for ln in lines]
    return "\n".join(out) + "\n"


def parse_model(text, family=None):
    rows = []
    for raw in text.splitlines():
        raw = raw.split("#", 1)[0].strip()
        if raw:
            rows.append(raw.split())
    if not rows:
        raise InvalidArgumentsError("empty geometry file")
    head, body = rows[0], rows[1:]
    fam = head[0]
    if family is not None and family != fam:
        raise InvalidArgumentsError(f"file holds a {fam!r} model, expected {family!r}")
    try:
        n = int(head[1])
        params = [int(x) for x in head[2:]]
        body = [[int(x) for x in r] for r in body]
    except (ValueError, IndexError):
        raise InvalidArgumentsError("geometry file must contain integers after the family name") from None

    if fam in _AXIS_FAMILIES:
        p = params[0]
        a = {}
        for v, i, lo, hi in body:
            a.setdefault(v, {})[i] = (lo, hi)
        model = _AXIS_FAMILIES[fam](p, {v: tuple(ivs[i] for i in sorted(ivs)) for v, ivs in a.items()})
    elif fam in ("pi", "pi-star"):
        a = {v: Triangle(apex, lo, hi, role == 2) for v, role, apex, lo, hi in body}
        model = PITriangleSystem(a, fam == "pi-star")
    elif fam == "arcs":
        a = {r[0]: None if r[1] == 0 else (r[2], r[3]) for r in body}
        model = CircularArcSystem(params[0], a)
    elif fam in ("circle-gon", "c-int"):
        k, c = params
        a = {}
        for r in body:
            if r[1] == 0:
                a[r[0]] = None
            else:
                a.setdefault(r[0], []).append((r[1], (r[2], r[3])))
        a = {v: None if arcs is None else tuple(arc for _, arc in sorted(arcs)) for v, arcs in a.items()}
        model = CircleGonSystem(k, c, a, "hull" if fam == "circle-gon" else "intersect")
    elif fam == "comparability":
        d = params[0]
        orders = [[] for _ in range(d)]
        for v, i, pos in body:
            orders[i - 1].append((pos, v))
        model = LinearOrderFamily(tuple(tuple(v for _, v in sorted(o)) for o in orders))
    elif fam == "int-enum":
        ordering = [v for v, _, _, _ in sorted(body, key=lambda r: r[1])]
        bounds = {v: None if lo == 0 else (lo, hi) for v, _, lo, hi in body}
        model = EnumerationScheme(tuple(ordering), bounds)
    else:
        raise InvalidArgumentsError(f"unknown family {fam!r}")
    if len(model_vertices(model)) != n:
        raise InvalidArgumentsError(f"header says {n} vertices, file lists {len(model_vertices(model))}")
    return model
