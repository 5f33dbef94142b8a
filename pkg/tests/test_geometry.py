import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from disk_squeeze import geometry as geo
from disk_squeeze.geometry import INF, Circle, Line, MoebiusMap

from conftest import disk_points


def random_automorphism(rng):
    a = complex(*rng.normal(size=2))
    b = complex(*rng.normal(size=2))
    if abs(b) >= abs(a):
        a, b = b, a
    return MoebiusMap.disk_automorphism(a, b)


def test_disk_point_rejects_outside():
    with pytest.raises(geo.OutsideDiskError):
        geo.disk_point(1.0)
    with pytest.raises(geo.OutsideDiskError):
        geo.disk_point(INF)
    assert geo.disk_point(0.5j) == 0.5j


def test_distance_examples():
    assert geo.hyperbolic_distance(0, 0) == 0.0
    assert geo.hyperbolic_distance(0, 0.5) == pytest.approx(math.log(3), abs=1e-15)
    assert geo.hyperbolic_distance_arcosh(0, 0.5) == pytest.approx(math.log(3), abs=1e-15)
    assert geo.distance_from_origin(0.5) == pytest.approx(math.log(3), abs=1e-15)
    assert geo.modulus_at_distance(math.log(3)) == pytest.approx(0.5, abs=1e-15)


def test_distance_near_boundary_stays_finite():
    d = geo.hyperbolic_distance(0, 1 - 1e-15)
    assert math.isfinite(d) and d > 30


@given(disk_points(0.99), disk_points(0.99))
def test_distance_formulas_agree(z, w):
    d1 = geo.hyperbolic_distance(z, w)
    d2 = geo.hyperbolic_distance_arcosh(z, w)
    assert abs(d1 - d2) <= 1e-12 * max(1.0, d1)


@given(disk_points(0.9), disk_points(0.9), disk_points(0.9))
def test_triangle_inequality(z, w, u):
    d = geo.hyperbolic_distance
    assert d(z, u) <= d(z, w) + d(w, u) + 1e-12


def test_circle_inversion():
    assert geo.circle_inversion(0.5) == pytest.approx(2.0)
    assert geo.circle_inversion(0) is INF
    assert geo.circle_inversion(INF) == 0
    assert geo.circle_inversion(0.6 + 0.8j) == pytest.approx(0.6 + 0.8j)


def test_isometry_of_automorphisms(rng):
    for _ in range(300):
        M = random_automorphism(rng)
        z, w = (0.9 * complex(*rng.uniform(-0.7, 0.7, 2)) for _ in range(2))
        dz = geo.hyperbolic_distance(z, w)
        assert abs(geo.hyperbolic_distance(M(z), M(w)) - dz) <= 1e-12 * max(1.0, dz) * 10


def test_compose_matches_sequential_application(rng):
    for _ in range(200):
        M1, M2 = random_automorphism(rng), random_automorphism(rng)
        z = complex(*rng.uniform(-0.6, 0.6, 2))
        lhs = geo.mobius_apply(geo.mobius_compose(M1, M2), z)
        assert abs(lhs - M1(M2(z))) <= 1e-12 * max(1.0, abs(lhs))


def test_apply_at_infinity_and_pole():
    M = MoebiusMap(2, 1, 1, 0)
    assert M(INF) == 2
    assert M(0) is INF
    assert MoebiusMap(1, 1, 0, 1)(INF) is INF


def test_projective_equality():
    M = MoebiusMap(1 + 1j, 2, 3, 4)
    assert geo.maps_projectively_equal(M, MoebiusMap(*(5j * x for x in (M.a, M.b, M.c, M.d))))
    assert not geo.maps_projectively_equal(M, MoebiusMap.identity())
    assert geo.is_projective_identity(MoebiusMap(3, 0, 0, 3))


def test_fixed_points_examples():
    assert sorted(x.real for x in geo.fixed_points(MoebiusMap(2, 1, 1, 2))) == pytest.approx([-1, 1])
    xm, xp = geo.fixed_points(MoebiusMap(1 + 1j, -1j, 1j, 1 - 1j))
    assert xm == pytest.approx(1) and xp == pytest.approx(1)
    assert geo.fixed_points(MoebiusMap(2, 1, 0, 1)) == (pytest.approx(-1), INF)
    with pytest.raises(geo.GeometryError):
        geo.fixed_points(MoebiusMap.identity())


def test_fixed_points_are_fixed(rng):
    for _ in range(300):
        M = random_automorphism(rng)
        for xi in geo.fixed_points(M):
            if xi is not INF and abs(xi) < 1e6:
                assert abs(M(xi) - xi) <= 1e-10 * max(1.0, abs(xi) ** 2)


def test_elliptic_fixed_points_are_inverse(rng):
    seen = 0
    for _ in range(500):
        M = random_automorphism(rng)
        if geo.classify_automorphism(M) != geo.ELLIPTIC:
            continue
        xm, xp = geo.automorphism_fixed_points(M)
        assert abs(xm) < 1
        if xp is not INF:
            assert abs(xp - geo.circle_inversion(xm)) <= 1e-10 * max(1.0, abs(xp))
        seen += 1
    assert seen > 50


def test_classification_examples():
    assert geo.classify_automorphism(MoebiusMap(2, 1, 1, 2)) == geo.HYPERBOLIC
    assert geo.classify_automorphism(MoebiusMap(1 + 1j, -1j, 1j, 1 - 1j)) == geo.PARABOLIC
    assert geo.classify_automorphism(MoebiusMap.rotation(0.3)) == geo.ELLIPTIC
    assert geo.classify_automorphism(MoebiusMap.identity()) == geo.IDENTITY
    with pytest.raises(geo.GeometryError):
        geo.classify_automorphism(MoebiusMap(1, 2, 0, 1))


def test_normal_form_examples():
    nf = geo.normal_form(MoebiusMap(2, 1, 1, 2))
    assert nf.kind == "dilation"
    assert nf.parameter == pytest.approx(3.0) or nf.parameter == pytest.approx(1 / 3)
    nf = geo.normal_form(MoebiusMap(1 + 1j, -1j, 1j, 1 - 1j))
    assert nf.kind == "translation"
    assert nf.parameter == pytest.approx(1j)
    nf = geo.normal_form(MoebiusMap.rotation(0.7))
    assert nf.kind == "rotation" and nf.parameter == pytest.approx(0.7)


def test_normal_form_conjugates(rng):
    for _ in range(100):
        M = random_automorphism(rng)
        if geo.classify_automorphism(M) == geo.IDENTITY:
            continue
        nf = geo.normal_form(M)
        T, S = nf.model, nf.conjugator
        for z in 0.8 * np.exp(2j * np.pi * rng.uniform(size=20)) * np.sqrt(rng.uniform(size=20)):
            lhs, rhs = S(M(complex(z))), T(S(complex(z)))
            if lhs is INF or rhs is INF:
                continue
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


def test_classify_euclidean_circle_examples():
    assert geo.classify_euclidean_circle(Circle(0.25, 0.25)) == geo.HYPERBOLIC_CIRCLE
    assert geo.classify_euclidean_circle(Circle(0.5, 0.5)) == geo.HOROCYCLE
    assert geo.classify_euclidean_circle(Circle(math.sqrt(2), 1)) == geo.HYPERBOLIC_LINE
    assert geo.classify_euclidean_circle(Circle(1.5, 0.6)) == geo.HYPERCYCLE
    assert geo.classify_euclidean_circle(Circle(3, 0.5)) == geo.NOT_IN_DISK
    assert geo.classify_euclidean_circle(Line(0, 1j)) == geo.HYPERBOLIC_LINE
    assert geo.classify_euclidean_circle(Line(0.5, 1j)) == geo.HYPERCYCLE
    with pytest.raises(geo.GeometryError):
        Circle(0, 0)


def test_invariant_curve_examples():
    C, cls = geo.invariant_curve(MoebiusMap.rotation(0.4), 0.5)
    assert C.center == pytest.approx(0, abs=1e-12) and C.radius == pytest.approx(0.5)
    assert cls == geo.HYPERBOLIC_CIRCLE
    C, cls = geo.invariant_curve(MoebiusMap(2, 1, 1, 2), 0)
    assert cls == geo.HYPERBOLIC_LINE
    assert C.distance(0.5) <= 1e-12
    with pytest.raises(geo.GeometryError, match="degenerate orbit"):
        geo.invariant_curve(MoebiusMap.rotation(1.0), 0)


def test_invariant_curve_contains_orbit(rng):
    for _ in range(100):
        M = random_automorphism(rng)
        if geo.classify_automorphism(M) == geo.IDENTITY:
            continue
        z = complex(*rng.uniform(-0.5, 0.5, 2))
        try:
            C, cls = geo.invariant_curve(M, z)
        except geo.GeometryError:
            continue
        w = z
        for _ in range(10):
            w = M(w)
            assert C.distance(w) <= 1e-9
        assert cls in geo.CURVE_CLASSES


def test_circle_json_roundtrip():
    for C in (Circle(0.25 + 0.5j, 0.3), Line(0.1, 0.6 + 0.8j)):
        assert geo.circle_from_json(C.to_json()) == C


@given(st.floats(-10, 10), st.floats(0.05, 3.0))
def test_rotation_about_origin_preserves_modulus(theta, r):
    z = 0.9 * cmath.exp(1j * r) * 0.5
    assert abs(abs(MoebiusMap.rotation(theta)(z)) - abs(z)) <= 1e-15
