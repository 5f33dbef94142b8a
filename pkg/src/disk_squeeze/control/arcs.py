"""Directed circular arcs, arc-polygons and circle intersections."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ..geometry import Circle, Line

TWO_PI = 2.0 * math.pi
TANGENCY_TOL = 1e-10

UNIT_CIRCLE = Circle(0j, 1.0)


def _cx(p) -> list:
    return [p.real, p.imag]


@dataclass(frozen=True)
class Arc:
    """Piece of ``carrier`` from ``start`` to ``end``; ``ccw`` gives the sense on circles."""

    carrier: Circle | Line
    start: complex
    end: complex
    ccw: bool = True

    def sweep(self) -> float:
        """Signed angle swept about the carrier center (0 for segments)."""
        if isinstance(self.carrier, Line):
            return 0.0
        a0 = self.carrier.angle_of(self.start)
        a1 = self.carrier.angle_of(self.end)
        if self.ccw:
            return (a1 - a0) % TWO_PI
        return -((a0 - a1) % TWO_PI)

    def point_at(self, s: float) -> complex:
        """Point at fraction ``s`` in [0, 1] along the arc."""
        if isinstance(self.carrier, Line):
            return self.start + s * (self.end - self.start)
        a0 = self.carrier.angle_of(self.start)
        return self.carrier.point_at(a0 + s * self.sweep())

    def points(self, n: int) -> list[complex]:
        return [self.point_at(j / (n - 1)) for j in range(n)]

    def tangent(self, at_start: bool = True) -> complex:
        """Unit direction of travel at the start (or end) of the arc."""
        if isinstance(self.carrier, Line):
            u = self.end - self.start
            return u / abs(u)
        p = self.start if at_start else self.end
        radial = (p - self.carrier.center) / self.carrier.radius
        return radial * (1j if self.sweep() >= 0 else -1j)

    def reversed(self) -> "Arc":
        return Arc(self.carrier, self.end, self.start, not self.ccw)

    def winding_angle(self, z: complex) -> float:
        """Angle swept by ``p - z`` as ``p`` runs along the arc (exact).

        The arc is cut into pieces of at most a quarter turn.  The chord angle
        of a piece is off by a full turn exactly when ``z`` sits in the
        circular segment between that piece and its chord.
        """
        chord = cmath.phase((self.end - z) / (self.start - z))
        if isinstance(self.carrier, Line):
            return chord
        sweep = self.sweep()
        pieces = max(1, math.ceil(abs(sweep) / (math.pi / 2)))
        pts = self.points(pieces + 1)
        c, r = self.carrier.center, self.carrier.radius
        inside = abs(z - c) < r
        total = 0.0
        for j, (a, b) in enumerate(zip(pts, pts[1:])):
            total += cmath.phase((b - z) / (a - z))
            if inside:
                mid = self.point_at((j + 0.5) / pieces)
                side_z = ((b - a).conjugate() * (z - a)).imag
                side_m = ((b - a).conjugate() * (mid - a)).imag
                if side_z * side_m > 0:
                    total += math.copysign(TWO_PI, sweep)
        return total

    def distance(self, z: complex, pieces: int = 256) -> float:
        """Distance from ``z`` to the arc (exact on the carrier, sampled at the ends)."""
        if isinstance(self.carrier, Line):
            u = self.end - self.start
            s = ((z - self.start) * u.conjugate()).real / abs(u) ** 2
            return abs(z - (self.start + min(1.0, max(0.0, s)) * u))
        c = self.carrier.center
        sw = self.sweep()
        a0 = self.carrier.angle_of(self.start)
        rel = (cmath.phase(z - c) - a0) % TWO_PI if sw >= 0 else (a0 - cmath.phase(z - c)) % TWO_PI
        if rel <= abs(sw):
            return self.carrier.distance(z)
        return min(abs(z - self.start), abs(z - self.end))

    def to_json(self) -> dict:
        return {
            "carrier": self.carrier.to_json(),
            "from": _cx(self.start),
            "to": _cx(self.end),
            "ccw": bool(self.ccw),
        }


@dataclass(frozen=True)
class ArcPolygon:
    """Region bounded by circular arcs; a single edge denotes a degenerate (curve) polygon."""

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(complex(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(self.edges) > 1:
            for e, f in zip(self.edges, self.edges[1:] + self.edges[:1]):
                if abs(e.end - f.start) > 1e-9:
                    raise ValueError("arc-polygon edges do not form a closed chain")

    @property
    def degenerate(self) -> bool:
        return len(self.edges) < 2

    def winding_number(self, z: complex) -> int:
        if self.degenerate:
            return 0
        total = sum(e.winding_angle(z) for e in self.edges)
        return int(round(total / TWO_PI))

    def contains(self, z: complex) -> bool:
        return self.winding_number(complex(z)) != 0

    def boundary_distance(self, z: complex) -> float:
        return min(e.distance(complex(z)) for e in self.edges)

    def internal_angles(self) -> list[float]:
        """Interior angle at each vertex, from the arc tangents (closed polygons only)."""
        if self.degenerate:
            return []
        orient = 1.0 if sum(e.winding_angle(self._interior_probe()) for e in self.edges) > 0 else -1.0
        angles = []
        for prev, nxt in zip(self.edges[-1:] + self.edges[:-1], self.edges):
            incoming = -prev.tangent(at_start=False)
            outgoing = nxt.tangent(at_start=True)
            turn = cmath.phase(incoming / outgoing) * orient
            angles.append(turn % TWO_PI)
        return angles

    def _interior_probe(self) -> complex:
        pts = [p for e in self.edges for p in e.points(9)[:-1]]
        return sum(pts) / len(pts)

    def to_json(self) -> dict:
        return {
            "result": "arc_polygon",
            "vertices": [_cx(v) for v in self.vertices],
            "edges": [e.to_json() for e in self.edges],
        }


@dataclass(frozen=True)
class EntireDisk:
    """The whole open disk, with a witness ordering of Hamiltonian indices."""

    witness: tuple = (0, 1, 0)

    def contains(self, z: complex) -> bool:
        return abs(z) < 1.0

    def to_json(self) -> dict:
        return {"result": "entire_disk", "witness": list(self.witness)}


def circle_intersections(c1: Circle, c2: Circle, tol: float = TANGENCY_TOL) -> list[complex]:
    """Intersection points of two circles; one point when tangent within ``tol``."""
    d = abs(c2.center - c1.center)
    if d == 0:
        return []
    r1, r2 = c1.radius, c2.radius
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h2 = r1 * r1 - a * a
    u = (c2.center - c1.center) / d
    base = c1.center + a * u
    if abs(h2) <= tol * max(1.0, r1 * r1):
        return [base]
    if h2 < 0:
        return []
    h = math.sqrt(h2)
    return [base + 1j * h * u, base - 1j * h * u]


def horocycle_through(z: complex, xi: complex) -> Circle:
    """Circle through ``z`` tangent to the unit circle at ``|xi| = 1``."""
    diff = z - xi
    rho = abs(diff) ** 2 / (2.0 * (1.0 - (z.conjugate() * xi).real))
    return Circle((1.0 - rho) * xi, rho)


def on_open_arc(p: complex, a: complex, b: complex) -> bool:
    """True when ``p`` lies strictly inside the counterclockwise unit-circle arc from ``a`` to ``b``."""
    ta = cmath.phase(a)
    span = (cmath.phase(b) - ta) % TWO_PI
    rel = (cmath.phase(p) - ta) % TWO_PI
    return 0.0 < rel < span


def chords_cross(p1: complex, p2: complex, q1: complex, q2: complex) -> bool:
    """Do chords ``p1 p2`` and ``q1 q2`` of the unit circle cross inside the disk?"""
    return on_open_arc(q1, p1, p2) != on_open_arc(q2, p1, p2)
