import cmath
import math

import numpy as np
import pytest

from disk_squeeze.control import ControlError, EntireDisk, arcs
from disk_squeeze.control import reachable as rs
from disk_squeeze.dynamics import QuadraticHamiltonian as H, evolve

from conftest import unstable_from_fixed_points


def e(t):
    return cmath.exp(1j * t)


def free(xi, omega=1.0):
    # xi = omega / alpha
    return H(omega, omega / xi)


def disk_grid(n=41, rmax=0.97):
    xs = np.linspace(-rmax, rmax, n)
    return [complex(x, y) for x in xs for y in xs if abs(complex(x, y)) < rmax]


def random_disk(rng, n, rmax=0.98):
    return rmax * np.sqrt(rng.uniform(size=n)) * np.exp(2j * np.pi * rng.uniform(size=n))


# -- arcs -------------------------------------------------------------------


def test_arc_sweep_and_points():
    a = arcs.Arc(arcs.UNIT_CIRCLE, 1, 1j, ccw=True)
    assert a.sweep() == pytest.approx(math.pi / 2)
    assert a.reversed().sweep() == pytest.approx(-math.pi / 2)
    assert arcs.Arc(arcs.UNIT_CIRCLE, 1, 1j, ccw=False).sweep() == pytest.approx(-1.5 * math.pi)
    assert a.point_at(0.5) == pytest.approx(e(math.pi / 4))


def test_polygon_winding_exact_near_arcs():
    # upper half disk: unit arc 1 -> -1 ccw, then the diameter back
    poly = arcs.ArcPolygon(
        (1, -1),
        (arcs.Arc(arcs.UNIT_CIRCLE, 1, -1, True), arcs.Arc(arcs.Line(0, 1), -1, 1)),
    )
    assert poly.contains(0.5j)
    assert poly.contains(0.999999 * e(1.0))  # inside the circular segment of a piece
    assert not poly.contains(-0.5j)
    assert not poly.contains(1.000001 * e(1.0))


def test_polygon_must_close():
    with pytest.raises(ValueError):
        arcs.ArcPolygon((0, 1), (arcs.Arc(arcs.Line(0, 1), 0, 0.5), arcs.Arc(arcs.Line(0, 1), 0.6, 0)))


def test_circle_intersections_and_tangency():
    pts = arcs.circle_intersections(arcs.Circle(0, 1), arcs.Circle(1, 1))
    assert sorted(p.imag for p in pts) == pytest.approx([-math.sqrt(3) / 2, math.sqrt(3) / 2])
    assert arcs.circle_intersections(arcs.Circle(0, 1), arcs.Circle(2, 1)) == [pytest.approx(1)]
    assert arcs.circle_intersections(arcs.Circle(0, 1), arcs.Circle(3, 1)) == []


def test_horocycle_through():
    c = arcs.horocycle_through(0, 1)
    assert c.center == pytest.approx(0.5) and c.radius == pytest.approx(0.5)
    c = arcs.horocycle_through(0.3 + 0.2j, 1j)
    assert c.distance(0.3 + 0.2j) <= 1e-14
    assert abs(c.center) + c.radius == pytest.approx(1.0)


def test_chords_cross():
    assert arcs.chords_cross(-1j, 1j, -1, 1)
    assert not arcs.chords_cross(e(-0.4), e(0.4), e(0.8), e(1.2))


# -- free case ----------------------------------------------------------------


def test_free_examples():
    assert isinstance(rs.free_reachable_set(0, free(1), free(-1), 3), EntireDisk)
    one = rs.free_reachable_set(0, free(1), free(-1), 1)
    assert one.degenerate
    c = one.edges[0].carrier
    assert c.center == pytest.approx(0.5) and c.radius == pytest.approx(0.5)
    tri = rs.free_reachable_set(0, free(1), free(-1), 2)
    boundary = tri.edges[1]
    assert boundary.carrier == arcs.UNIT_CIRCLE
    assert boundary.start == pytest.approx(1) and boundary.end == pytest.approx(-1)
    assert not boundary.ccw
    assert tri.to_json()["result"] == "arc_polygon"


def test_free_errors():
    with pytest.raises(ControlError, match="degenerate pair"):
        rs.free_reachable_set(0, free(1), free(1, 2.0), 2)
    with pytest.raises(ControlError, match="free"):
        rs.free_reachable_set(0, H(2, 1), free(1), 2)
    with pytest.raises(ControlError):
        rs.free_reachable_set(0, free(1), free(-1), 4)


def test_free_vertex_angles():
    tri = rs.free_reachable_set(0.2 - 0.1j, free(e(0.3)), free(e(2.2)), 2)
    angles = tri.internal_angles()
    # xi_0 is an interior angle pi, xi_1 a cusp
    assert angles[1] == pytest.approx(math.pi, abs=1e-9)
    assert min(angles[2], 2 * math.pi - angles[2]) == pytest.approx(0, abs=1e-9)


FREE_CONFIGS = [
    (0, 1, -1),
    (0.3 - 0.2j, e(0.3), e(2.2)),
    (-0.5 + 0.4j, e(-1.0), e(0.5)),
    (0.6j, e(2.0), e(-2.5)),
]


@pytest.mark.parametrize("z0,x0,x1", FREE_CONFIGS)
def test_free_polygon_matches_sampling(z0, x0, x1, rng):
    H0, H1 = free(x0), free(x1, 1.7)
    poly = rs.free_reachable_set(z0, H0, H1, 2)
    pts = np.concatenate(
        [rs.sample_reachable(z0, [H0, H1], [0, 1], 5000, rng, s) for s in (0.3, 3.0)]
    )
    outside = [p for p in pts if not poly.contains(p) and poly.boundary_distance(p) > 1e-7]
    assert outside == []


@pytest.mark.parametrize("z0,x0,x1", FREE_CONFIGS)
def test_free_polygon_matches_exact_two_step_search(z0, x0, x1, rng):
    H0, H1 = free(x0), free(x1, 1.7)
    poly = rs.free_reachable_set(z0, H0, H1, 2)
    inside = outside = 0
    for w in random_disk(rng, 3000):
        w = complex(w)
        if poly.boundary_distance(w) < 1e-6:
            continue
        sol = rs.reachable_in_two_free(z0, H0, H1, w)
        if poly.contains(w):
            inside += 1
            assert sol is not None
            t0, t1 = sol
            assert abs(evolve(H1, evolve(H0, z0, t0), t1) - w) <= 1e-6
        else:
            outside += 1
            assert sol is None
    assert inside > 50 and outside > 50


# -- unstable case ------------------------------------------------------------


def test_unstable_examples():
    # pairs at -+1 and -+i interleave: bounded region with the quoted vertices
    poly = rs.unstable_reachable_set(0.3, H(0, 1j), H(0, 1))
    assert poly.vertices == (0.3, pytest.approx(1), pytest.approx(1j))
    assert len(poly.edges) == 3
    H0 = unstable_from_fixed_points(e(-math.pi / 8), e(math.pi / 8))
    H1 = unstable_from_fixed_points(e(math.pi / 4), e(3 * math.pi / 8))
    assert isinstance(rs.unstable_reachable_set(0, H0, H1), EntireDisk)
    same = rs.unstable_reachable_set(0.1, H0, H0)
    assert same.degenerate
    with pytest.raises(ControlError, match="unstable"):
        rs.unstable_reachable_set(0, H(2, 1), H1)


INTERLEAVED = [
    ((-1, 1), (-1j, 1j)),
    ((e(-0.5), e(1.0)), (e(0.3), e(2.0))),
    ((e(2.0), e(3.0)), (e(2.5), e(4.0))),
    ((e(0.1), e(2.9)), (e(-0.2), e(0.4))),
]


@pytest.mark.parametrize("a,b", INTERLEAVED)
@pytest.mark.parametrize("z0", [0.3, -0.2 + 0.4j, 0.5j, -0.6 - 0.3j])
def test_interleaved_polygon_is_exact(a, b, z0, rng):
    H0 = unstable_from_fixed_points(*a)
    H1 = unstable_from_fixed_points(*b, gamma=1.3)
    poly = rs.unstable_reachable_set(z0, H0, H1)
    assert poly.vertices[0] == z0
    # no sequence, however long, leaves the polygon
    for steps in (2, 3, 8):
        pts = rs.sample_reachable(z0, [H0, H1], [j % 2 for j in range(steps)], 3000, rng, 1.0)
        assert all(poly.contains(p) or poly.boundary_distance(p) <= 1e-7 for p in pts)
    # and two pulses already fill it
    for w in disk_grid(25):
        if poly.boundary_distance(w) < 1e-3:
            continue
        sol = rs.reachable_in_two_unstable(z0, H0, H1, w)
        assert (sol is not None) == poly.contains(w)
        if sol is not None:
            t0, t1 = sol
            assert abs(evolve(H1, evolve(H0, z0, t0), t1) - w) <= 1e-6


@pytest.mark.parametrize("z0", [0, 0.5 - 0.3j])
def test_non_interleaved_pairs_cover_disk_in_three_steps(z0, rng):
    H0 = unstable_from_fixed_points(e(-math.pi / 8), e(math.pi / 8))
    H1 = unstable_from_fixed_points(e(math.pi / 4), e(3 * math.pi / 8))
    pts = np.concatenate(
        [rs.sample_reachable(z0, [H0, H1], [0, 1, 0], 100_000, rng, s) for s in (0.3, 1.0, 3.0)]
    )
    targets = [complex(x, y) for x in np.linspace(-0.9, 0.9, 13) for y in np.linspace(-0.9, 0.9, 13)]
    gaps = [np.min(np.abs(pts - w)) for w in targets if abs(w) < 0.9]
    assert max(gaps) < 0.08
