"""Geometric models with integer coordinates.

Intervals are closed pairs ``(left, right)`` with ``left <= right``.  All
systems are frozen; the assignment maps are not meant to be mutated.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

from ..errors import DegenerateModelError

Interval = tuple  # (left, right)


def _check_interval(iv):
    if len(iv) != 2 or iv[0] > iv[1]:
        raise DegenerateModelError(f"bad interval {iv!r}")


@dataclass(frozen=True)
class IntervalSystem:
    """Each vertex owns ``ell`` pairwise disjoint intervals on one line."""
    ell: int
    assignment: dict

    def __post_init__(self):
        for v, ivs in self.assignment.items():
            if len(ivs) != self.ell:
                raise DegenerateModelError(f"vertex {v} has {len(ivs)} intervals, expected {self.ell}")
            for iv in ivs:
                _check_interval(iv)


@dataclass(frozen=True)
class TrackSystem:
    """Vertex v owns interval ``assignment[v][i]`` on track i."""
    ell: int
    assignment: dict

    def __post_init__(self):
        for v, ivs in self.assignment.items():
            if len(ivs) != self.ell:
                raise DegenerateModelError(f"vertex {v} needs one interval per track")
            for iv in ivs:
                _check_interval(iv)


BOX_RELATIONS = ("intersect", "overlap", "order", "contain")


@dataclass(frozen=True)
class BoxSystem:
    """Axis-parallel boxes, one interval per axis.

    ``relation`` selects the edge rule: boxes intersect, projections overlap
    on every axis, the boxes are comparable in the product interval order, or
    (one axis only) one interval contains the other.
    """
    b: int
    assignment: dict
    relation: str = "intersect"

    def __post_init__(self):
        if self.relation not in BOX_RELATIONS:
            raise DegenerateModelError(f"unknown box relation {self.relation!r}")
        for v, ivs in self.assignment.items():
            if len(ivs) != self.b:
                raise DegenerateModelError(f"vertex {v} needs one interval per axis")
            for iv in ivs:
                _check_interval(iv)


@dataclass(frozen=True)
class TrapezoidSystem:
    """Vertex v spans intervals ``assignment[v][i]`` on lines 1..d, top to bottom."""
    d: int
    assignment: dict

    def __post_init__(self):
        for v, ivs in self.assignment.items():
            if len(ivs) != self.d:
                raise DegenerateModelError(f"vertex {v} needs one interval per line")
            for iv in ivs:
                _check_interval(iv)


class Triangle(NamedTuple):
    """A corner ``apex`` on one line and a side ``[lo, hi]`` on the other.

    Unflipped triangles have the apex on the top line; flipped ones have the
    side on the top line and the apex on the bottom line.
    """
    apex: int
    lo: int
    hi: int
    flipped: bool = False

    @property
    def top(self):
        return (self.lo, self.hi) if self.flipped else (self.apex, self.apex)

    @property
    def bottom(self):
        return (self.apex, self.apex) if self.flipped else (self.lo, self.hi)


@dataclass(frozen=True)
class PITriangleSystem:
    assignment: dict
    star: bool = False

    def __post_init__(self):
        tris = {v: t if isinstance(t, Triangle) else Triangle(*t)
                for v, t in self.assignment.items()}
        object.__setattr__(self, "assignment", tris)
        for v, t in tris.items():
            if t.lo > t.hi:
                raise DegenerateModelError(f"triangle side of {v} is reversed")
            if t.flipped and not self.star:
                raise DegenerateModelError("flipped triangles need the PI* variant")


@dataclass(frozen=True)
class CircularArcSystem:
    """Arcs on a circle of positions 0..circumference-1, cut point at 0.

    ``(x, y)`` with ``x < y`` runs counterclockwise from x to y without
    crossing the cut; ``x > y`` runs from x through the cut to y.  ``None``
    marks a vertex with no arc, which is isolated.
    """
    circumference: int
    assignment: dict

    def __post_init__(self):
        for v, arc in self.assignment.items():
            if arc is None:
                continue
            x, y = arc
            if x == y or not (0 < x < self.circumference and 0 < y < self.circumference):
                raise DegenerateModelError(f"bad arc {arc!r} for vertex {v}")


@dataclass(frozen=True)
class CircleGonSystem:
    """Each vertex owns up to ``k`` disjoint arcs of a circle.

    Arcs use the same direction convention as :class:`CircularArcSystem`, and
    at most one arc of a vertex may wrap the cut point.  With relation
    ``"hull"`` two vertices are adjacent when the convex hulls of their arcs
    meet, and with ``"intersect"`` when two of their arcs meet.
    """
    k: int
    circumference: int
    assignment: dict
    relation: str = "hull"

    def __post_init__(self):
        if self.relation not in ("hull", "intersect"):
            raise DegenerateModelError(f"unknown relation {self.relation!r}")
        for v, arcs in self.assignment.items():
            if arcs is None:
                continue
            if not 1 <= len(arcs) <= self.k:
                raise DegenerateModelError(f"vertex {v} has {len(arcs)} arcs, limit {self.k}")
            if sum(1 for x, y in arcs if x > y) > 1:
                raise DegenerateModelError(f"vertex {v} has two arcs through the cut")
            for x, y in arcs:
                if x == y or not (0 < x < self.circumference and 0 < y < self.circumference):
                    raise DegenerateModelError(f"bad arc {(x, y)!r} for vertex {v}")


@dataclass(frozen=True)
class LinearOrderFamily:
    orders: tuple

    def __post_init__(self):
        orders = tuple(tuple(o) for o in self.orders)
        object.__setattr__(self, "orders", orders)
        if not orders:
            raise DegenerateModelError("need at least one order")
        base = set(orders[0])
        for o in orders:
            if len(set(o)) != len(o) or set(o) != base:
                raise DegenerateModelError("orders must be permutations of one vertex set")

    @property
    def d(self):
        return len(self.orders)

    @property
    def vertices(self):
        return frozenset(self.orders[0])


@dataclass(frozen=True)
class EnumerationScheme:
    """Vertex ordering with, per vertex, the block of earlier neighbours.

    ``bounds[v] = (l, r)`` means v is adjacent to the l-th through r-th
    vertices of ``ordering`` (1-based).  ``None`` means no earlier neighbour.
    """
    ordering: tuple
    bounds: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "ordering", tuple(self.ordering))
        for i, v in enumerate(self.ordering, start=1):
            bd = self.bounds.get(v)
            if bd is None:
                continue
            lo, hi = bd
            if not 1 <= lo <= hi <= i - 1:
                raise DegenerateModelError(f"bounds {bd} invalid for the vertex at position {i}")


def model_vertices(model):
    if isinstance(model, LinearOrderFamily):
        return model.vertices
    if isinstance(model, EnumerationScheme):
        return frozenset(model.ordering)
    return frozenset(model.assignment)

