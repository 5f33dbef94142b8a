"""Reachable sets of two-Hamiltonian pulse sequences in the free and unstable cases."""

from __future__ import annotations

import math

import numpy as np

from .. import geometry as geo
from .. import kernels
from ..dynamics import FREE, UNSTABLE, QuadraticHamiltonian, classify, evolve, fixed_points_of, trajectory_curve
from ..geometry import Line
from .arcs import UNIT_CIRCLE, Arc, ArcPolygon, EntireDisk, chords_cross, horocycle_through, on_open_arc
from .bangbang import ControlError


def _require(H: QuadraticHamiltonian, kind: str, name: str):
    got = classify(H).kind
    if got != kind:
        raise ControlError(f"{name} must be {kind}, got {got}")


def _orbit_ccw(H: QuadraticHamiltonian, z0: complex, carrier) -> bool:
    """Sense in which the forward flow moves ``z0`` around ``carrier``."""
    if isinstance(carrier, Line):
        return True
    eps = 1e-6
    z1 = evolve(H, z0, eps)
    cross = ((z0 - carrier.center).conjugate() * (z1 - z0)).imag
    return cross > 0


def _flow_arc(H: QuadraticHamiltonian, z0: complex, end: complex, carrier=None) -> Arc:
    """Arc of the forward orbit of ``z0`` ending at ``end`` (a fixed point)."""
    if carrier is None:
        carrier, _ = trajectory_curve(H, z0)
    return Arc(carrier, z0, end, _orbit_ccw(H, z0, carrier))


def _free_time(H: QuadraticHamiltonian, z_from: complex, z_to: complex) -> float:
    """Flow time from ``z_from`` to ``z_to`` on the same free orbit.

    In the chart ``w = 1/(z - xi)`` the free flow is ``w -> w - i alpha t``.
    """
    xi = fixed_points_of(H)[0]
    dw = 1.0 / (z_to - xi) - 1.0 / (z_from - xi)
    return (dw / (-1j * H.alpha)).real


def free_reachable_set(z0, H0: QuadraticHamiltonian, H1: QuadraticHamiltonian, steps: int):
    """States reachable from ``z0`` by ``steps`` alternating pulses ``H0, H1, H0``."""
    z0 = geo.disk_point(z0)
    _require(H0, FREE, "H0")
    _require(H1, FREE, "H1")
    xi0 = fixed_points_of(H0)[0]
    xi1 = fixed_points_of(H1)[0]
    if abs(xi0 - xi1) <= geo.EPS_GEO:
        raise ControlError("degenerate pair: H0 and H1 share their fixed point")
    if steps not in (1, 2, 3):
        raise ControlError("steps must be 1, 2 or 3")
    if steps == 3:
        return EntireDisk((0, 1, 0))

    h0 = horocycle_through(z0, xi0)
    if steps == 1:
        return ArcPolygon((z0, xi0), (_flow_arc(H0, z0, xi0, h0),))

    vertex = third_vertex_free(z0, H0, H1)
    h1 = horocycle_through(vertex, xi1)
    edges = (
        _flow_arc(H0, vertex, xi0, h0),
        Arc(UNIT_CIRCLE, xi0, xi1, ccw=False),
        _flow_arc(H1, vertex, xi1, h1).reversed(),
    )
    return ArcPolygon((vertex, xi0, xi1), edges)


def third_vertex_free(z0, H0: QuadraticHamiltonian, H1: QuadraticHamiltonian) -> complex:
    """Tangency point of the ``H0`` orbit with the ``H1`` horocycle family, or ``z0``.

    The tangency point is used when the forward ``H0`` flow reaches it.
    """
    z0 = geo.disk_point(z0)
    xi0 = fixed_points_of(H0)[0]
    xi1 = fixed_points_of(H1)[0]
    h0 = horocycle_through(z0, xi0)
    rho0 = h0.radius
    u = (1.0 - rho0) * (xi0.conjugate() * xi1).real
    # horocycle at xi1 with radius s externally tangent to h0
    s = (1.0 - rho0 - u) / (1.0 + rho0 - u)
    c1 = (1.0 - s) * xi1
    direction = (c1 - h0.center) / abs(c1 - h0.center)
    v = h0.center + rho0 * direction
    if _free_time(H0, z0, v) >= 0.0:
        return v
    return z0


def reachable_in_two_free(z0, H0: QuadraticHamiltonian, H1: QuadraticHamiltonian, w) -> tuple | None:
    """Durations ``(t0, t1) >= 0`` with ``H1(t1) H0(t0) z0 = w``, or None.

    Solves exactly: the backward ``H1`` orbit of ``w`` is a ray in the chart
    ``1/(z - xi1)`` and the ``H0`` orbit of ``z0`` is a circle there.
    """
    z0, w = geo.disk_point(z0), geo.disk_point(w)
    xi0 = fixed_points_of(H0)[0]
    xi1 = fixed_points_of(H1)[0]
    h0 = horocycle_through(z0, xi0)
    chart = geo.MoebiusMap(0, 1, 1, -xi1)
    image = geo.circle_through(*(chart(h0.point_at(a)) for a in (0.3, 2.3, 4.3)))
    A = chart(w)
    B = 1j * H1.alpha  # backward H1 motion in the chart
    if isinstance(image, Line):
        return None
    C, r = image.center, image.radius
    qa = abs(B) ** 2
    qb = 2.0 * (B.conjugate() * (A - C)).real
    qc = abs(A - C) ** 2 - r * r
    disc = qb * qb - 4.0 * qa * qc
    if disc < 0:
        if disc < -1e-12 * max(1.0, qb * qb):
            return None
        disc = 0.0
    best = None
    for t1 in ((-qb - math.sqrt(disc)) / (2 * qa), (-qb + math.sqrt(disc)) / (2 * qa)):
        if t1 < -1e-12:
            continue
        t1 = max(t1, 0.0)
        p = chart.inverse()(A + B * t1)
        t0 = _free_time(H0, z0, p)
        if t0 >= -1e-12:
            best = (max(t0, 0.0), t1)
            break
    return best


def _unstable_fixed_points(H: QuadraticHamiltonian):
    xm, xp = fixed_points_of(H)
    return complex(xm), complex(xp)


def _hyperbolic_chart(H: QuadraticHamiltonian) -> geo.MoebiusMap:
    """``(z - xi_-)/(z - xi_+)``: orbits become rays, the forward flow moves outward."""
    xm, xp = _unstable_fixed_points(H)
    return geo.MoebiusMap(1, -xm, 1, -xp)


def _image_circle(chart: geo.MoebiusMap, carrier):
    if isinstance(carrier, Line):
        pts = [carrier.point + s * carrier.direction for s in (-0.3, 0.1, 0.5)]
    else:
        pts = [carrier.point_at(a) for a in (0.3, 2.3, 4.3)]
    return geo.circle_through(*(chart(p) for p in pts))


def reachable_in_two_unstable(z0, H0: QuadraticHamiltonian, H1: QuadraticHamiltonian, w) -> tuple | None:
    """Durations ``(t0, t1) >= 0`` with ``H1(t1) H0(t0) z0 = w``, or None.

    The backward ``H1`` orbit of ``w`` is a ray segment toward 0 in the ``H1``
    chart; it is intersected with the image of the ``H0`` orbit of ``z0``.
    """
    z0, w = geo.disk_point(z0), geo.disk_point(w)
    c0, c1 = _hyperbolic_chart(H0), _hyperbolic_chart(H1)
    g0, g1 = classify(H0).rate, classify(H1).rate
    carrier, _ = trajectory_curve(H0, z0)
    image = _image_circle(c1, carrier)
    W = c1(w)
    u = W / abs(W)
    if isinstance(image, Line):
        cands = []
        d = image.direction
        den = (u.conjugate() * d).imag
        if den != 0:
            s = ((image.point.conjugate() * d).imag) / den
            cands.append(s)
    else:
        C, r = image.center, image.radius
        b = (u.conjugate() * C).real
        disc = b * b - (abs(C) ** 2 - r * r)
        if disc < -1e-12 * max(1.0, b * b):
            return None
        disc = max(disc, 0.0)
        cands = [b - math.sqrt(disc), b + math.sqrt(disc)]
    m0 = abs(c0(z0))
    for s in sorted(cands, reverse=True):
        if s <= 0 or s > abs(W) * (1 + 1e-12):
            continue
        q = c1.inverse()(s * u)
        if abs(q) >= 1.0:
            continue
        mq = abs(c0(q))
        if mq < m0 * (1 - 1e-12):
            continue
        # forward flows scale the chart modulus by exp(2 gamma t)
        t0 = max(0.0, 0.5 * math.log(mq / m0) / g0) if m0 > 0 else 0.0
        t1 = max(0.0, 0.5 * math.log(abs(W) / s) / g1)
        return t0, t1
    return None


def unstable_reachable_set(z0, H0: QuadraticHamiltonian, H1: QuadraticHamiltonian):
    """Reachable set for two unstable Hamiltonians.

    When the fixed-point pairs do not interleave on the unit circle the two
    flows circulate around the disk and ``H0, H1, H0`` reaches every point.
    When they interleave (the chords cross) both flows drain toward their
    ``xi_+`` and no number of pulses leaves the arc-polygon with vertices
    ``z0``, ``xi_+^0``, ``xi_+^1``: the forward orbits of ``z0`` and the
    boundary arc between the attractors that avoids both repellers.
    """
    z0 = geo.disk_point(z0)
    _require(H0, UNSTABLE, "H0")
    _require(H1, UNSTABLE, "H1")
    m0, p0 = _unstable_fixed_points(H0)
    m1, p1 = _unstable_fixed_points(H1)
    if abs(m0 - m1) <= geo.EPS_GEO and abs(p0 - p1) <= geo.EPS_GEO:
        return ArcPolygon((z0, p0), (_flow_arc(H0, z0, p0),))
    if not chords_cross(m0, p0, m1, p1):
        return EntireDisk((0, 1, 0))
    ccw = not on_open_arc(m1, p0, p1)
    edges = (
        _flow_arc(H0, z0, p0),
        Arc(UNIT_CIRCLE, p0, p1, ccw=ccw),
        _flow_arc(H1, z0, p1).reversed(),
    )
    return ArcPolygon((z0, p0, p1), edges)


def sample_reachable(z0, hamiltonians, indices, n: int, rng: np.random.Generator, scale: float = 1.0):
    """End points of ``n`` random pulse sequences (exponentially distributed durations)."""
    indices = np.asarray(indices, dtype=np.int64)
    durations = rng.exponential(scale, size=(n, len(indices)))
    z = np.full(n, complex(z0), dtype=np.complex128)
    return kernels.simulate_sequence(z, durations, indices, *kernels.hamiltonian_params(hamiltonians))
