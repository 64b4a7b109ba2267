"""Registry tying each model family to its language, decoder and sampler."""

from dataclasses import dataclass
from typing import Callable

from .. import languages as langs
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
)


def _interval_lang(p):
    return langs.projection_language(p, "exists_any_pair", langs.base_two_uniform("interval"))


def _trapezoid_lang(d):
    if d == 1:
        return langs.base_two_uniform("interval")
    if d == 2:
        return langs.trapezoid_language()
    return langs.d_trapezoid_language(d)


# --- samplers: general-position models with vertex ids 1..n -----------------------

def _pairs_from(sample):
    s = sorted(sample)
    return tuple((s[2 * i], s[2 * i + 1]) for i in range(len(s) // 2))


def _line(rng, n, per_vertex):
    """Distinct coordinates on one line, ``per_vertex`` of them for every vertex."""
    coords = rng.sample(range(1, 3 * n * per_vertex + 2), n * per_vertex)
    return [coords[i * per_vertex:(i + 1) * per_vertex] for i in range(n)]


def random_intervals(rng, n, ell):
    chunks = _line(rng, n, 2 * ell)
    return IntervalSystem(ell, {v + 1: _pairs_from(c) for v, c in enumerate(chunks)})


def _axes(rng, n, axes):
    lines = [_line(rng, n, 2) for _ in range(axes)]
    return {v + 1: tuple(tuple(sorted(lines[i][v])) for i in range(axes)) for v in range(n)}


def random_tracks(rng, n, ell):
    return TrackSystem(ell, _axes(rng, n, ell))


def random_boxes(rng, n, b, relation="intersect"):
    return BoxSystem(b, _axes(rng, n, b), relation)


def random_trapezoids(rng, n, d):
    return TrapezoidSystem(d, _axes(rng, n, d))


def random_triangles(rng, n, star=False):
    flipped = [star and rng.random() < 0.5 for _ in range(n)]
    top = iter(rng.sample(range(1, 6 * n + 2), 3 * n))
    bottom = iter(rng.sample(range(1, 6 * n + 2), 3 * n))
    a = {}
    for v in range(n):
        if flipped[v]:
            lo, hi = sorted((next(top), next(top)))
            a[v + 1] = Triangle(next(bottom), lo, hi, True)
        else:
            lo, hi = sorted((next(bottom), next(bottom)))
            a[v + 1] = Triangle(next(top), lo, hi)
    return PITriangleSystem(a, star)


def random_arcs(rng, n, _param=None):
    c = 4 * n + 2
    pts = rng.sample(range(1, c), 2 * n)
    a = {}
    for v in range(n):
        x, y = pts[2 * v], pts[2 * v + 1]
        a[v + 1] = (x, y)
    return CircularArcSystem(c, a)


def _filaments(rng, n, sizes, relation, k):
    total = 2 * sum(s for s in sizes if s)
    c = 2 * total + 2
    pool = iter(rng.sample(range(1, c), total))
    a = {}
    for v, s in enumerate(sizes, start=1):
        if not s:
            a[v] = None
            continue
        p = sorted(next(pool) for _ in range(2 * s))
        if rng.random() < 0.5:
            a[v] = _pairs_from(p)
        else:
            a[v] = ((p[-1], p[0]),) + tuple((p[2 * i + 1], p[2 * i + 2]) for i in range(s - 1))
    return CircleGonSystem(k, c, a, relation)


def random_circle_gons(rng, n, k):
    sizes = [0 if rng.random() < 0.1 else rng.randint(1, k) for _ in range(n)]
    return _filaments(rng, n, sizes, "hull", k)


def random_circular_intervals(rng, n, t):
    sizes = [0 if rng.random() < 0.1 else t for _ in range(n)]
    return _filaments(rng, n, sizes, "intersect", t)


def random_orders(rng, n, d):
    orders = []
    for _ in range(d):
        o = list(range(1, n + 1))
        rng.shuffle(o)
        orders.append(tuple(o))
    return LinearOrderFamily(tuple(orders))


def random_enumeration(rng, n, _param=None):
    ordering = list(range(1, n + 1))
    rng.shuffle(ordering)
    bounds = {}
    for i, v in enumerate(ordering, start=1):
        if i == 1 or rng.random() < 0.25:
            bounds[v] = None
            continue
        lo = rng.randint(1, i - 1)
        bounds[v] = (lo, rng.randint(lo, i - 1))
    return EnumerationScheme(tuple(ordering), bounds)


@dataclass(frozen=True)
class Family:
    name: str
    language: Callable
    sample: Callable
    params: tuple        # parameter values exercised by the test suites
    language_name: Callable

    def lang(self, param=None):
        return self.language(param)


FAMILIES = {
    "intervals": Family("intervals", _interval_lang, random_intervals, (1, 2, 3),
                        lambda p: f"l-interval:{p}"),
    "tracks": Family("tracks", lambda p: langs.projection_language(
        p, "exists_diagonal", langs.base_two_uniform("interval")), random_tracks, (1, 2, 3),
        lambda p: f"l-track:{p}"),
    "boxes": Family("boxes", lambda p: langs.projection_language(
        p, "forall_diagonal", langs.base_two_uniform("interval")), random_boxes, (1, 2, 3),
        lambda p: f"box:{p}"),
    "overlap": Family("overlap", lambda p: langs.projection_language(
        p, "forall_diagonal", langs.base_two_uniform("circle")),
        lambda rng, n, p: random_boxes(rng, n, p, "overlap"), (1, 2, 3), lambda p: f"ovlp:{p}"),
    "interval-dim": Family("interval-dim", langs.interval_dim_language,
                           lambda rng, n, p: random_boxes(rng, n, p, "order"), (1, 2, 3),
                           lambda p: f"idim:{p}"),
    "containment": Family("containment", lambda p: langs.base_two_uniform("permutation"),
                          lambda rng, n, p: random_boxes(rng, n, 1, "contain"), (1,),
                          lambda p: "permutation"),
    "trapezoids": Family("trapezoids", _trapezoid_lang, random_trapezoids, (1, 2, 3),
                         lambda p: {1: "interval", 2: "trap"}.get(p, f"d-trap:{p}")),
    "pi": Family("pi", lambda p: langs.pi_language(),
                 lambda rng, n, p: random_triangles(rng, n, False), (None,), lambda p: "pi"),
    "pi-star": Family("pi-star", lambda p: langs.pi_star_language(),
                      lambda rng, n, p: random_triangles(rng, n, True), (None,), lambda p: "pi-star"),
    "arcs": Family("arcs", lambda p: langs.arc_containment_language(), random_arcs, (None,),
                   lambda p: "arc-cont"),
    "circle-gon": Family("circle-gon", langs.circle_gon_language, random_circle_gons, (1, 2),
                         lambda p: f"circle-gon:{p}"),
    "c-int": Family("c-int", langs.circular_interval_language, random_circular_intervals, (1, 2),
                    lambda p: f"c-int:{p}"),
    "comparability": Family("comparability", langs.comparability_language, random_orders, (1, 2, 3),
                            lambda p: f"cmp:{p}"),
    "int-enum": Family("int-enum", lambda p: langs.interval_enumerable_language(),
                       random_enumeration, (None,), lambda p: "int-en"),
}


def get_family(name):
    if name not in FAMILIES:
        raise InvalidArgumentsError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    return FAMILIES[name]


# language name -> (family, parameter) used by the ``model`` command
def family_for_language(text):
    name, p = langs.parse_language_name(text)
    table = {
        "interval": ("intervals", 1), "circle": ("overlap", 1),
        "permutation": ("containment", 1), "co-interval": ("interval-dim", 1),
        "l-interval": ("intervals", p), "l-track": ("tracks", p), "box": ("boxes", p),
        "ovlp": ("overlap", p), "trap": ("trapezoids", 2), "d-trap": ("trapezoids", p),
        "pi": ("pi", None), "pi-star": ("pi-star", None), "circle-gon": ("circle-gon", p),
        "c-int": ("c-int", p), "int-en": ("int-enum", None), "arc-cont": ("arcs", None),
        "cmp": ("comparability", p), "idim": ("interval-dim", p),
    }
    if name not in table:
        raise InvalidArgumentsError(f"language {text!r} has no geometric model")
    return table[name]
