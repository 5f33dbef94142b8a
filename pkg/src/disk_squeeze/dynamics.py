"""Disk motions generated by ``H = w a*a + (alpha/2) a^2 + (conj(alpha)/2) a*^2``.

``flow(H, t)`` is the Moebius map taking the squeezed-state label ``z`` of a
state to the label of the evolved state.  With ``s(t) = sin(lt)/l`` and
``C(t) = cos(lt)`` (``l^2 = w^2 - |alpha|^2``; the hyperbolic functions when
``l^2 < 0`` and ``s = t, C = 1`` when ``l = 0``) the map is::

    [[C - i w s,  i conj(alpha) s],
     [-i alpha s, C + i w s      ]]

which has unit determinant and is a disk automorphism for every real ``t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import geometry as geo
from .geometry import INF, MoebiusMap

STABLE = "stable"
FREE = "free"
UNSTABLE = "unstable"

EPS_CLS = 1e-12


class DynamicsError(ValueError):
    pass


@dataclass(frozen=True)
class QuadraticHamiltonian:
    omega: float
    alpha: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "omega", float(self.omega))
        object.__setattr__(self, "alpha", complex(self.alpha))
        if not self.omega >= 0:
            raise DynamicsError(f"omega must be >= 0, got {self.omega}")

    @property
    def is_zero(self) -> bool:
        return self.omega == 0 and self.alpha == 0

    @classmethod
    def with_ground_state(cls, omega: float, xi: complex) -> "QuadraticHamiltonian":
        """Stable Hamiltonian of frequency ``omega`` whose in-disk fixed point is ``xi``."""
        xi = geo.disk_point(xi)
        # xi = conj(alpha) / (omega + lambda)  <=>  alpha = 2 omega conj(xi) / (1 + |xi|^2)
        return cls(omega, 2.0 * omega * xi.conjugate() / (1.0 + abs(xi) ** 2))


@dataclass(frozen=True)
class SpectralClass:
    kind: str
    rate: Optional[float]
    spectrum: str

    @property
    def lam(self) -> Optional[float]:
        return self.rate if self.kind == STABLE else None

    @property
    def gamma(self) -> Optional[float]:
        return self.rate if self.kind == UNSTABLE else None


def classify(H: QuadraticHamiltonian) -> SpectralClass:
    """Stable (``w > |alpha|``), free or unstable, with ``lambda`` or ``gamma`` attached."""
    w, amod = H.omega, abs(H.alpha)
    gap = w - amod
    if abs(gap) <= EPS_CLS * max(w, amod, 1.0):
        return SpectralClass(FREE, None, f"absolutely continuous [{-w!r}, inf)")
    rate = math.sqrt(abs(gap) * (w + amod))
    if gap > 0:
        return SpectralClass(STABLE, rate, f"pure point {rate!r}*(n + 1/2) - {w / 2!r}, n = 0, 1, 2, ...")
    return SpectralClass(UNSTABLE, rate, "absolutely continuous (-inf, inf)")


def fixed_points_of(H: QuadraticHamiltonian) -> tuple:
    """``(xi_minus, xi_plus)``; the minus label carries the minus sign in ``(w -/+ l)/alpha``."""
    if H.is_zero:
        raise DynamicsError("zero Hamiltonian")
    w, alpha = H.omega, H.alpha
    if alpha == 0:
        return 0j, INF
    cls = classify(H)
    if cls.kind == STABLE:
        lam = cls.rate
        # (w - l)/alpha == conj(alpha)/(w + l), free of cancellation
        return alpha.conjugate() / (w + lam), (w + lam) / alpha
    if cls.kind == FREE:
        xi = w / alpha
        return xi, xi
    g = cls.rate
    return (w - 1j * g) / alpha, (w + 1j * g) / alpha


# Beyond this g|t| the unstable flow map is numerically rank one: ad - bc
# cancels to rounding noise.  Orbits are then within ~e^(-2 * 17) of the
# attracting fixed point, so saturating changes results by at most ~2e-15.
UNSTABLE_SATURATION = 17.0


def _clamp_hyperbolic(x: float) -> float:
    return max(-UNSTABLE_SATURATION, min(UNSTABLE_SATURATION, x))


def _flow_coefficients(H: QuadraticHamiltonian, t: float) -> tuple[complex, complex, complex, complex]:
    cls = classify(H)
    w, alpha = H.omega, H.alpha
    if cls.kind == STABLE:
        lam = cls.rate
        C, s = math.cos(lam * t), math.sin(lam * t) / lam
    elif cls.kind == FREE:
        C, s = 1.0, t
    else:
        # divided through by cosh(gt): projectively equal, no overflow
        g = cls.rate
        C, s = 1.0, math.tanh(_clamp_hyperbolic(g * t)) / g
    return (
        complex(C, -w * s),
        1j * alpha.conjugate() * s,
        -1j * alpha * s,
        complex(C, w * s),
    )


@dataclass(frozen=True)
class FlowResult:
    map: MoebiusMap
    spectral_class: SpectralClass
    fixed_points: tuple


def flow(H: QuadraticHamiltonian, t: float) -> FlowResult:
    """Closed-form motion ``z -> z(t)`` of the disk under ``exp(-itH)``."""
    M = MoebiusMap(*_flow_coefficients(H, float(t)))
    fps = (0j, INF) if H.is_zero else fixed_points_of(H)
    return FlowResult(M, classify(H), fps)


def evolve(H: QuadraticHamiltonian, z0, t: float) -> complex:
    """Label of the evolved state.

    Not re-validated: for long unstable evolutions the exact result is inside
    the disk but may round onto the unit circle.
    """
    z0 = geo.disk_point(z0)
    a, b, c, d = _flow_coefficients(H, float(t))
    return (a * z0 + b) / (c * z0 + d)


def sample_time(H: QuadraticHamiltonian) -> float:
    cls = classify(H)
    rate = cls.rate or 0.0
    return 0.1 * min(1.0, 1.0 / max(rate, H.omega, 1.0))


def trajectory_curve(H: QuadraticHamiltonian, z0) -> tuple:
    """Carrier of the full orbit of ``z0`` and its class.

    Stable flows give hyperbolic circles about ``xi_minus``, free flows
    horocycles, unstable flows hypercycles through ``xi_minus`` and
    ``xi_plus``; an unstable orbit on the geodesic joining the fixed points is
    reported as a hyperbolic line.
    """
    z0 = geo.disk_point(z0)
    if H.is_zero:
        raise DynamicsError("zero Hamiltonian: every point is stationary")
    xm, xp = fixed_points_of(H)
    for xi in (xm, xp):
        if xi is not INF and abs(z0 - xi) <= geo.EPS_GEO:
            raise DynamicsError(f"stationary point: z0 = {z0} is the fixed point {xi}")
    M = flow(H, sample_time(H)).map
    return geo.invariant_curve(M, z0)


def period(H: QuadraticHamiltonian) -> Optional[float]:
    cls = classify(H)
    if cls.kind == STABLE:
        return math.pi / cls.rate
    return None


def asymptotic_limits(H: QuadraticHamiltonian, z0) -> Optional[tuple]:
    """``(lim t->-inf, lim t->+inf)`` of ``z(t)`` for unstable flows, else None."""
    geo.disk_point(z0)
    if classify(H).kind != UNSTABLE:
        return None
    return fixed_points_of(H)


def ground_state_point(H: QuadraticHamiltonian) -> complex:
    if classify(H).kind != STABLE:
        raise DynamicsError("only stable Hamiltonians have a ground state in the disk")
    return fixed_points_of(H)[0]


def rotation_angle(H: QuadraticHamiltonian, t: float) -> float:
    """Angle of the stable flow in the chart ``(z - xi_-)/(z - xi_+)``: ``-2 l t``."""
    cls = classify(H)
    if cls.kind != STABLE:
        raise DynamicsError("rotation angle is defined for stable flows only")
    return -2.0 * cls.rate * t


def chart(H: QuadraticHamiltonian):
    """Conjugating map of the flow's normal form (``xi_-`` -> 0)."""
    xm, xp = fixed_points_of(H)
    if xp is INF:
        return MoebiusMap(1, -xm, 0, 1)
    if classify(H).kind == FREE:
        return MoebiusMap(0, 1, 1, -xm)
    return MoebiusMap(1, -xm, 1, -xp)
