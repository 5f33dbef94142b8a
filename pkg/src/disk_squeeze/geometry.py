"""Computational Poincare-disk geometry.

Points of the open unit disk are plain Python ``complex`` values; the point at
infinity of the extended plane is the singleton :data:`INF`.  Moebius maps are
stored as unnormalized 2x2 coefficient matrices and compared projectively.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

EPS_GEO = 1e-10


class _Infinity:
    """The point at infinity of the extended complex plane."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

ExtendedComplex = Union[complex, _Infinity]


class GeometryError(ValueError):
    """Raised for degenerate geometric input (identity maps, fixed orbits, ...)."""


class OutsideDiskError(GeometryError):
    pass


def is_inf(z) -> bool:
    return z is INF


def disk_point(z) -> complex:
    """Validate and return ``z`` as a point of the open unit disk."""
    if z is INF:
        raise OutsideDiskError("infinity is not a point of the disk")
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise OutsideDiskError(f"non-finite point {z!r}")
    if abs(z) >= 1.0:
        raise OutsideDiskError(f"|z| = {abs(z):.17g} is not < 1")
    return z


def chordal_distance(z: ExtendedComplex, w: ExtendedComplex) -> float:
    """Distance on the Riemann sphere; finite for any pair including INF."""
    if z is INF and w is INF:
        return 0.0
    if z is INF:
        return 2.0 / math.sqrt(1.0 + abs(w) ** 2)
    if w is INF:
        return 2.0 / math.sqrt(1.0 + abs(z) ** 2)
    return 2.0 * abs(z - w) / math.sqrt((1.0 + abs(z) ** 2) * (1.0 + abs(w) ** 2))


# ---------------------------------------------------------------------------
# distances


def distance_delta(z: complex, w: complex) -> float:
    """|z - w|^2 / ((1 - |z|^2)(1 - |w|^2))."""
    return abs(z - w) ** 2 / ((1.0 - abs(z) ** 2) * (1.0 - abs(w) ** 2))


def hyperbolic_distance(z, w) -> float:
    """Hyperbolic distance in the disk, ``ln((|1 - conj(z)w| + |z-w|) / (|1 - conj(z)w| - |z-w|))``."""
    z, w = disk_point(z), disk_point(w)
    num = abs(z.conjugate() * w - 1.0)
    diff = abs(z - w)
    # ln((A + B)/(A - B)) = log1p(2B / (A - B))
    return math.log1p(2.0 * diff / (num - diff))


def hyperbolic_distance_arcosh(z, w) -> float:
    """Same distance through ``arcosh(1 + 2*delta)``, evaluated with log1p."""
    z, w = disk_point(z), disk_point(w)
    x = 2.0 * distance_delta(z, w)
    return math.log1p(x + math.sqrt(x * (x + 2.0)))


def distance_from_origin(z) -> float:
    r = abs(disk_point(z))
    return 2.0 * math.atanh(r)


def modulus_at_distance(d: float) -> float:
    """Inverse of :func:`distance_from_origin` on moduli."""
    return math.tanh(d / 2.0)


def circle_inversion(z: ExtendedComplex) -> ExtendedComplex:
    """Reflection in the unit circle, ``z -> 1/conj(z)``; swaps 0 and INF."""
    if z is INF:
        return 0j
    z = complex(z)
    if z == 0:
        return INF
    return 1.0 / z.conjugate()


# ---------------------------------------------------------------------------
# Moebius maps


@dataclass(frozen=True)
class MoebiusMap:
    """``z -> (a z + b) / (c z + d)`` with coefficients kept unnormalized."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.det == 0:
            raise GeometryError("degenerate Moebius map: ad - bc = 0")

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def rotation(cls, theta: float) -> "MoebiusMap":
        return cls(cmath.exp(1j * theta), 0, 0, 1)

    @classmethod
    def disk_automorphism(cls, a: complex, b: complex) -> "MoebiusMap":
        a, b = complex(a), complex(b)
        if abs(a) <= abs(b):
            raise GeometryError("disk automorphism needs |a| > |b|")
        return cls(a, b, b.conjugate(), a.conjugate())

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def scale(self) -> float:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def matrix(self):
        return ((self.a, self.b), (self.c, self.d))

    def __call__(self, z: ExtendedComplex) -> ExtendedComplex:
        return mobius_apply(self, z)

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        return mobius_compose(self, other)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def normalized(self) -> "MoebiusMap":
        """Scale to unit determinant (principal square root)."""
        s = cmath.sqrt(self.det)
        return MoebiusMap(self.a / s, self.b / s, self.c / s, self.d / s)

    def derivative_at(self, z: complex) -> complex:
        return self.det / (self.c * z + self.d) ** 2

    def is_disk_automorphism(self, tol: float = EPS_GEO) -> bool:
        """Projective test for ``[[a, b], [conj(b), conj(a)]]`` with ``|a| > |b|``."""
        a, b, c, d = self.a, self.b, self.c, self.d
        s2 = self.scale ** 2
        if abs(abs(a) - abs(d)) > tol * self.scale:
            return False
        if abs(a.conjugate() * c - d * b.conjugate()) > tol * s2:
            return False
        return abs(a) > abs(b)

    def canonical(self) -> tuple[complex, complex]:
        """Return ``(a, b)`` with the map projectively equal to ``[[a, b], [conj(b), conj(a)]]``.

        Only meaningful for disk automorphisms; the overall sign is arbitrary.
        """
        s = cmath.sqrt(self.a.conjugate() / self.d)
        s /= abs(s)
        return s * self.a, s * self.b

    def projectively_equal(self, other: "MoebiusMap", tol: float = 1e-9) -> bool:
        return maps_projectively_equal(self, other, tol)


def mobius_apply(M: MoebiusMap, z: ExtendedComplex) -> ExtendedComplex:
    """Evaluate ``M`` on the extended plane; poles go to INF and INF to ``a/c``."""
    if z is INF:
        if M.c == 0:
            return INF
        return M.a / M.c
    z = complex(z)
    den = M.c * z + M.d
    if den == 0:
        return INF
    return (M.a * z + M.b) / den


def mobius_compose(M1: MoebiusMap, M2: MoebiusMap) -> MoebiusMap:
    """Matrix of ``M1 o M2``."""
    return MoebiusMap(
        M1.a * M2.a + M1.b * M2.c,
        M1.a * M2.b + M1.b * M2.d,
        M1.c * M2.a + M1.d * M2.c,
        M1.c * M2.b + M1.d * M2.d,
    )


_PROBES = (0j, 1 + 0j, INF, 1j)


def maps_projectively_equal(M1: MoebiusMap, M2: MoebiusMap, tol: float = 1e-9) -> bool:
    """Two maps agreeing on 0, 1, INF and i are the same transformation."""
    return all(chordal_distance(M1(p), M2(p)) <= tol for p in _PROBES)


def is_projective_identity(M: MoebiusMap, tol: float = EPS_GEO) -> bool:
    scale = max(abs(M.a), abs(M.d))
    return (
        abs(M.b) <= tol * scale
        and abs(M.c) <= tol * scale
        and abs(M.a - M.d) <= tol * scale
    )


def fixed_points(M: MoebiusMap) -> tuple[ExtendedComplex, ExtendedComplex]:
    """Fixed points ``(xi_minus, xi_plus)`` of a non-identity map.

    The labels follow ``((a-d) -/+ sqrt((a-d)^2 + 4bc)) / (2c)`` with the
    principal root; the smaller root is recovered through the product of the
    roots to avoid cancellation.  When ``c == 0`` one fixed point is INF.
    """
    if is_projective_identity(M):
        raise GeometryError("identity map: every point fixed")
    a, b, c, d = M.a, M.b, M.c, M.d
    if c == 0:
        if abs(a - d) <= EPS_GEO * max(abs(a), abs(d)):
            return INF, INF
        return b / (d - a), INF
    amd = a - d
    disc = cmath.sqrt(amd * amd + 4.0 * b * c)
    q_plus, q_minus = amd + disc, amd - disc
    if abs(q_plus) >= abs(q_minus):
        q, plus_is_big = q_plus, True
    else:
        q, plus_is_big = q_minus, False
    if q == 0:
        root = amd / (2.0 * c)
        return root, root
    big = q / (2.0 * c)
    small = -2.0 * b / q
    if plus_is_big:
        return small, big
    return big, small


def _disc_ratio(M: MoebiusMap) -> tuple[float, float]:
    """Signed, scale-free fixed-point discriminant of an automorphism.

    For the canonical form ``[[a, b], [conj(b), conj(a)]]`` the squared
    fixed-point separation is proportional to ``|b|^2 - Im(a)^2``.  Returns
    ``(ratio, magnitude)`` with ``ratio = (|b|^2 - Im(a)^2) / (|b|^2 + Im(a)^2)``
    in [-1, 1] and ``magnitude = (|b|^2 + Im(a)^2) / |a|^2``.
    """
    a, b = M.canonical()
    bb, ia = abs(b) ** 2, a.imag ** 2
    total = bb + ia
    if total == 0:
        return 0.0, 0.0
    return (bb - ia) / total, total / abs(a) ** 2


ELLIPTIC = "elliptic"
PARABOLIC = "parabolic"
HYPERBOLIC = "hyperbolic"
IDENTITY = "identity"


def classify_automorphism(M: MoebiusMap) -> str:
    """One of ``"elliptic"``, ``"parabolic"``, ``"hyperbolic"``, ``"identity"``."""
    if not M.is_disk_automorphism():
        raise GeometryError("not a disk automorphism")
    ratio, magnitude = _disc_ratio(M)
    if magnitude <= EPS_GEO ** 2:
        return IDENTITY
    if abs(ratio) <= EPS_GEO:
        return PARABOLIC
    return HYPERBOLIC if ratio > 0 else ELLIPTIC


def automorphism_fixed_points(M: MoebiusMap) -> tuple[ExtendedComplex, ExtendedComplex]:
    """Fixed points ordered so that ``xi_minus`` is the one inside D (elliptic case)."""
    kind = classify_automorphism(M)
    if kind == IDENTITY:
        raise GeometryError("identity map: every point fixed")
    if kind == PARABOLIC:
        a, c, d = M.a, M.c, M.d
        if c == 0:
            return INF, INF
        xi = (a - d) / (2.0 * c)
        return xi, xi
    xm, xp = fixed_points(M)
    if kind == ELLIPTIC and (xm is INF or abs(xm) > 1.0):
        xm, xp = xp, xm
    return xm, xp


# ---------------------------------------------------------------------------
# normal forms


@dataclass(frozen=True)
class NormalForm:
    """``S o M = T o S`` with ``T`` a rotation, translation or dilation.

    ``parameter`` is the rotation angle (radians), the translation offset
    (complex) or the dilation factor (positive real).
    """

    conjugator: MoebiusMap
    kind: str
    parameter: complex | float

    @property
    def model(self) -> MoebiusMap:
        if self.kind == "rotation":
            return MoebiusMap(cmath.exp(1j * self.parameter), 0, 0, 1)
        if self.kind == "translation":
            return MoebiusMap(1, self.parameter, 0, 1)
        return MoebiusMap(self.parameter, 0, 0, 1)


def normal_form(M: MoebiusMap) -> NormalForm:
    kind = classify_automorphism(M)
    if kind == IDENTITY:
        raise GeometryError("identity map has no normal form")
    xm, xp = automorphism_fixed_points(M)

    if kind == PARABOLIC:
        if xm is INF:
            return NormalForm(MoebiusMap.identity(), "translation", M.b / M.d)
        S = MoebiusMap(0, 1, 1, -xm)
        beta = M.c / (M.a - M.c * xm)
        return NormalForm(S, "translation", beta)

    if xp is INF:
        # translation chart: the map is z -> (a/d) z + b/d
        S = MoebiusMap(1, -xm, 0, 1)
        k = M.a / M.d
    elif xm is INF:
        S = MoebiusMap(1, -xp, 0, 1)
        k = M.a / M.d
    else:
        S = MoebiusMap(1, -xm, 1, -xp)
        k = M.derivative_at(xm)
    if kind == ELLIPTIC:
        return NormalForm(S, "rotation", cmath.phase(k))
    return NormalForm(S, "dilation", abs(k))


# ---------------------------------------------------------------------------
# generalized circles


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius > 0:
            raise GeometryError("circle radius must be positive")

    kind = "circle"

    def distance(self, p: complex) -> float:
        return abs(abs(p - self.center) - self.radius)

    def point_at(self, angle: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * angle)

    def angle_of(self, p: complex) -> float:
        return cmath.phase(p - self.center)

    def to_json(self) -> dict:
        return {
            "kind": "circle",
            "center": [self.center.real, self.center.imag],
            "radius": self.radius,
        }


@dataclass(frozen=True)
class Line:
    point: complex
    direction: complex

    def __post_init__(self):
        object.__setattr__(self, "point", complex(self.point))
        u = complex(self.direction)
        if u == 0:
            raise GeometryError("line direction must be nonzero")
        object.__setattr__(self, "direction", u / abs(u))

    kind = "line"

    def distance(self, p: complex) -> float:
        return abs((self.direction.conjugate() * (p - self.point)).imag)

    def to_json(self) -> dict:
        return {
            "kind": "line",
            "point": [self.point.real, self.point.imag],
            "direction": [self.direction.real, self.direction.imag],
        }


GeneralizedCircle = Union[Circle, Line]


def circle_from_json(doc: dict) -> GeneralizedCircle:
    if doc["kind"] == "circle":
        return Circle(complex(*doc["center"]), doc["radius"])
    if doc["kind"] == "line":
        return Line(complex(*doc["point"]), complex(*doc["direction"]))
    raise ValueError(f"unknown curve kind {doc['kind']!r}")


def circle_through(p1: complex, p2: complex, p3: complex, tol: float = EPS_GEO) -> GeneralizedCircle:
    """Circumcircle of three points, or a line when they are collinear within ``tol``."""
    b, c = p2 - p1, p3 - p1
    if abs(b) == 0 or abs(c) == 0 or abs(p3 - p2) == 0:
        raise GeometryError("circle through coincident points")
    cross = (b.conjugate() * c).imag
    if abs(cross) <= tol * abs(b) * abs(c):
        far = c if abs(c) >= abs(b) else b
        return Line(p1, far)
    center = p1 + (abs(b) ** 2 * c - abs(c) ** 2 * b) / (2j * cross)
    return Circle(center, abs(p1 - center))


HYPERBOLIC_CIRCLE = "hyperbolic_circle"
HOROCYCLE = "horocycle"
HYPERCYCLE = "hypercycle"
HYPERBOLIC_LINE = "hyperbolic_line"
NOT_IN_DISK = "not_in_disk"

CURVE_CLASSES = (HYPERBOLIC_CIRCLE, HOROCYCLE, HYPERCYCLE, HYPERBOLIC_LINE, NOT_IN_DISK)


def classify_euclidean_circle(C: GeneralizedCircle, tol: float = EPS_GEO) -> str:
    """Hyperbolic type of a Euclidean circle or line relative to the unit disk."""
    if isinstance(C, Line):
        h = abs((C.direction.conjugate() * C.point).imag)
        if h >= 1.0 - tol:
            return NOT_IN_DISK
        if h <= tol:
            return HYPERBOLIC_LINE
        return HYPERCYCLE
    d, rho = abs(C.center), C.radius
    if rho <= tol:
        raise GeometryError("degenerate circle")
    scaled = tol * max(1.0, d, rho)
    if rho - d >= 1.0 - scaled or d - rho >= 1.0 - scaled:
        return NOT_IN_DISK
    if abs(d + rho - 1.0) <= scaled:
        return HOROCYCLE
    if d + rho < 1.0:
        return HYPERBOLIC_CIRCLE
    if abs(d * d - 1.0 - rho * rho) <= tol * max(1.0, d * d):
        return HYPERBOLIC_LINE
    return HYPERCYCLE


def meets_unit_circle_orthogonally(C: GeneralizedCircle, tol: float = EPS_GEO) -> bool:
    if isinstance(C, Line):
        return abs((C.direction.conjugate() * C.point).imag) <= tol
    d2 = abs(C.center) ** 2
    return abs(d2 - 1.0 - C.radius ** 2) <= tol * max(1.0, d2)


_CLASS_FOR_KIND = {ELLIPTIC: HYPERBOLIC_CIRCLE, PARABOLIC: HOROCYCLE, HYPERBOLIC: HYPERCYCLE}


def _normal_form_curve(M: MoebiusMap, z0: complex) -> GeneralizedCircle:
    """Invariant curve through z0 built from three points of the model orbit."""
    nf = normal_form(M)
    S = nf.conjugator
    Sinv = S.inverse()
    w0 = S(z0)
    if nf.kind == "rotation":
        ws = [w0 * cmath.exp(2j * math.pi * j / 3) for j in range(3)]
    elif nf.kind == "translation":
        ws = [w0 + j * nf.parameter for j in range(3)]
    else:
        ws = [w0 * f for f in (1.0, 2.0, 0.5)]
    return circle_through(*[Sinv(w) for w in ws])


SAGITTA_LINE = 1e-13


def hypercycle_through(z0: complex, p: complex, q: complex) -> GeneralizedCircle:
    """Circle through the boundary points ``p``, ``q`` and ``z0``.

    The center sits on the perpendicular bisector of the chord ``pq`` at
    signed offset ``s`` solving ``|z0 - c| = |p - c|``.  When the arc bulges
    less than ``SAGITTA_LINE`` away from the chord the chord line is returned.
    """
    m = 0.5 * (p + q)
    half = 0.5 * abs(q - p)
    n = 1j * (q - p) / abs(q - p)
    h = (n.conjugate() * (z0 - m)).real  # signed distance of z0 from the chord line
    if h == 0.0:
        return Line(p, q - p)
    s = (abs(z0 - m) ** 2 - half * half) / (2.0 * h)
    r = math.hypot(s, half)
    if half * half / (r + abs(s)) <= SAGITTA_LINE:
        return Line(p, q - p)
    return Circle(m + s * n, r)


def invariant_curve(M: MoebiusMap, z0) -> tuple[GeneralizedCircle, str]:
    """Euclidean carrier of the orbit ``{M^n z0}`` and its hyperbolic class.

    The carrier is the circumcircle of ``z0, M z0, M^2 z0``.  Maps of small
    finite order (where these points nearly repeat) fall back to three points
    of the orbit of the normal-form model.  Hyperbolic orbits use the circle
    through ``z0`` and the two boundary fixed points.
    """
    z0 = disk_point(z0)
    kind = classify_automorphism(M)
    if kind == IDENTITY:
        raise GeometryError("degenerate orbit: identity map")
    z1 = M(z0)
    z2 = M(z1)
    step = abs(z1 - z0)
    if step <= EPS_GEO * max(1.0, abs(z0)):
        raise GeometryError(f"degenerate orbit: {z0} is a fixed point")
    if kind == HYPERBOLIC:
        # the fixed points are far apart on the circle: better conditioned than three nearby orbit points
        curve = hypercycle_through(z0, *automorphism_fixed_points(M))
    elif abs(z2 - z0) < 1e-3 * step or abs(z2 - z1) < 1e-3 * step:
        curve = _normal_form_curve(M, z0)
    else:
        curve = circle_through(z0, z1, z2)
    cls = _CLASS_FOR_KIND[kind]
    if kind == HYPERBOLIC and meets_unit_circle_orthogonally(curve):
        cls = HYPERBOLIC_LINE
    return curve, cls
