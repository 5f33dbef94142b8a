"""Bang-bang control between ``H0 = w a*a`` and a stable ``H1``.

Only moduli matter: ``H0`` rotates about the origin and ``H1`` rotates about
its ground-state point ``xi``.  In hyperbolic radius ``D = d(0, z)`` each use
of ``H1`` can move ``D`` by at most ``2 d(0, xi)``, which is what the radius
recursions express in Euclidean terms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .. import geometry as geo
from .. import kernels
from ..dynamics import STABLE, QuadraticHamiltonian, classify, evolve, fixed_points_of

FEASIBILITY_TOL = 1e-12
MAX_SWITCHES = 10_000_000


class ControlError(ValueError):
    pass


class InfeasibleError(ControlError):
    def __init__(self, message, bounds=None):
        super().__init__(message)
        self.bounds = bounds


@dataclass(frozen=True)
class ReachabilityBounds:
    """``R[j]``, ``r[j]`` are the extreme moduli after ``j`` uses of ``H1`` (step ``2j+1``)."""

    R: tuple
    r: tuple

    @property
    def k(self) -> int:
        return len(self.R) - 1

    def interval(self, j: int | None = None) -> tuple[float, float]:
        j = self.k if j is None else j
        return self.r[j], self.R[j]

    def to_json(self) -> dict:
        return {
            "steps": [
                {"index": 2 * j + 1, "r": self.r[j], "R": self.R[j]} for j in range(len(self.R))
            ]
        }


def _next_max(R: float, x: float) -> float:
    return ((1.0 + x * x) * R + 2.0 * x) / (2.0 * x * R + (1.0 + x * x))


def _next_min(r: float, x: float) -> float:
    if r > 2.0 * x / (1.0 + x * x):
        return ((1.0 + x * x) * r - 2.0 * x) / (-2.0 * x * r + (1.0 + x * x))
    return 0.0


def bang_bang_bounds(z0_mod: float, xi_mod: float, k: int) -> ReachabilityBounds:
    """Radius bounds ``R_1..R_{2k+1}``, ``r_1..r_{2k+1}`` by direct recursion."""
    if not 0.0 <= z0_mod < 1.0:
        raise ControlError("z0_mod must be in [0, 1)")
    if not 0.0 <= xi_mod < 1.0:
        raise ControlError("xi_mod must be in [0, 1)")
    if k < 0:
        raise ControlError("k must be >= 0")
    R, r = [z0_mod], [z0_mod]
    for _ in range(k):
        R.append(_next_max(R[-1], xi_mod))
        r.append(_next_min(r[-1], xi_mod))
    return ReachabilityBounds(tuple(R), tuple(r))


def closed_form_R(z0_mod: float, xi_mod: float, k: int) -> float:
    """``R_{2k+1}`` from the diagonalized recursion, ``Delta = (1 - |xi|)/(1 + |xi|)``."""
    delta = (1.0 - xi_mod) / (1.0 + xi_mod)
    p = delta ** (2 * k)
    return ((1.0 + p) * z0_mod + 1.0 - p) / ((1.0 - p) * z0_mod + 1.0 + p)


def asymptotic_gap(z0_mod: float, xi_mod: float, k: int) -> float:
    """Large-``k`` estimate of ``1 - R_{2k+1}``."""
    delta = (1.0 - xi_mod) / (1.0 + xi_mod)
    return 2.0 * (1.0 - z0_mod) / (1.0 + z0_mod) * delta ** (2 * k)


def _stable_xi(H1: QuadraticHamiltonian) -> complex:
    if classify(H1).kind != STABLE:
        raise ControlError("H1 must be stable (omega > |alpha|)")
    return fixed_points_of(H1)[0]


def bang_bang_feasible(z0, zf, k: int, H1: QuadraticHamiltonian, tol: float = FEASIBILITY_TOL) -> bool:
    z0, zf = geo.disk_point(z0), geo.disk_point(zf)
    xi = _stable_xi(H1)
    r, R = bang_bang_bounds(abs(z0), abs(xi), k).interval()
    return r - tol <= abs(zf) <= R + tol


def min_switches(z0, zf, H1: QuadraticHamiltonian, tol: float = FEASIBILITY_TOL) -> int:
    """Smallest number of ``H1`` pulses reaching ``|zf|`` from ``|z0|``."""
    z0, zf = geo.disk_point(z0), geo.disk_point(zf)
    x = abs(_stable_xi(H1))
    m0, mf = abs(z0), abs(zf)
    if abs(mf - m0) <= tol:
        return 0
    if x == 0:
        raise ControlError("target unreachable: H1 adds no squeezing")
    R, r = m0, m0
    for k in range(1, MAX_SWITCHES):
        R, r = _next_max(R, x), _next_min(r, x)
        if r - tol <= mf <= R + tol:
            return k
    raise ControlError("target unreachable within the switch limit")


@dataclass(frozen=True)
class PulseSequence:
    """Alternating ``(hamiltonian_index, duration)`` steps starting with ``H0``."""

    steps: tuple = field(default_factory=tuple)

    def __post_init__(self):
        steps = tuple((int(i), float(dt)) for i, dt in self.steps)
        for j, (i, dt) in enumerate(steps):
            if i != j % 2:
                raise ControlError("pulse indices must alternate 0, 1, 0, ...")
            if dt < 0:
                raise ControlError("pulse durations must be nonnegative")
        object.__setattr__(self, "steps", steps)

    @property
    def durations(self) -> list[float]:
        return [dt for _, dt in self.steps]

    @property
    def total_time(self) -> float:
        return sum(self.durations)

    @property
    def switches(self) -> int:
        return sum(1 for i, _ in self.steps if i == 1)

    def simulate(self, z0, H0: QuadraticHamiltonian, H1: QuadraticHamiltonian) -> complex:
        z = geo.disk_point(z0)
        for i, dt in self.steps:
            z = evolve(H1 if i else H0, z, dt)
        return z

    def to_json(self) -> dict:
        return {"steps": [{"hamiltonian": i, "duration": dt} for i, dt in self.steps]}


def _rotation_time(src: complex, dst: complex, rate: float) -> float:
    """Time for ``z -> exp(-i rate t) z`` to carry ``arg src`` onto ``arg dst``."""
    if src == 0 or dst == 0:
        return 0.0
    angle = (cmath.phase(src) - cmath.phase(dst)) % (2.0 * math.pi)
    if angle > 2.0 * math.pi - 1e-15:
        angle = 0.0
    return angle / rate


def _point_on_radius(D: float, X: float, rho: float, xi_dir: complex, side: float) -> complex:
    """Point at hyperbolic distance ``D`` from 0 and ``rho`` from ``xi`` (``d(0, xi) = X``)."""
    m = geo.modulus_at_distance(D)
    if m == 0.0:
        return 0j
    if X == 0.0:
        return m * xi_dir
    # cosh(rho) = cosh D cosh X - sinh D sinh X cos(theta)
    cos_theta = (math.cosh(D) * math.cosh(X) - math.cosh(rho)) / (math.sinh(D) * math.sinh(X))
    theta = math.acos(min(1.0, max(-1.0, cos_theta)))
    return m * xi_dir * cmath.exp(1j * side * theta)


def synthesize_pulses(
    z0, zf, k: int, H0: QuadraticHamiltonian, H1: QuadraticHamiltonian
) -> PulseSequence:
    """A ``2k+1``-step pulse sequence steering ``z0`` to ``zf``.

    The hyperbolic radius is moved in ``k`` equal increments.  For each ``H1``
    pulse the radius ``rho`` of the hyperbolic circle about ``xi`` is taken in
    the middle of the range compatible with both the departure and arrival
    radii; departure and arrival points then follow from the hyperbolic law
    of cosines and the pulse durations from the rotation angles.
    """
    z0, zf = geo.disk_point(z0), geo.disk_point(zf)
    if k < 0:
        raise ControlError("k must be >= 0")
    if H0.alpha != 0 or H0.omega <= 0:
        raise ControlError("H0 must be a harmonic oscillator w a*a with w > 0")
    xi = _stable_xi(H1)
    bounds = bang_bang_bounds(abs(z0), abs(xi), k)
    if not bang_bang_feasible(z0, zf, k, H1):
        r, R = bounds.interval()
        raise InfeasibleError(
            f"|zf| = {abs(zf):.17g} outside the reachable interval [{r:.17g}, {R:.17g}] "
            f"for {k} uses of H1",
            bounds,
        )
    if abs(zf - z0) <= 1e-15:
        return PulseSequence(tuple((j % 2, 0.0) for j in range(2 * k + 1)))

    w0 = 2.0 * H0.omega
    lam = classify(H1).rate
    X = geo.distance_from_origin(xi) if xi != 0 else 0.0
    xi_dir = xi / abs(xi) if xi != 0 else 1.0 + 0j
    S = geo.MoebiusMap(1, -xi, 1, -geo.circle_inversion(xi)) if xi != 0 else geo.MoebiusMap.identity()

    D0 = geo.distance_from_origin(z0)
    Df = geo.distance_from_origin(zf)
    steps = []
    z = z0
    for j in range(1, k + 1):
        D_prev = D0 + (j - 1) * (Df - D0) / k
        D_next = D0 + j * (Df - D0) / k
        if X == 0.0 or abs(D_next - D_prev) <= 1e-15:
            steps += [(0, 0.0), (1, 0.0)]
            continue
        lo = max(abs(D_next - X), abs(D_prev - X))
        hi = min(D_next + X, D_prev + X)
        rho = 0.5 * (lo + hi)
        p = _point_on_radius(D_prev, X, rho, xi_dir, +1.0)
        q = _point_on_radius(D_next, X, rho, xi_dir, +1.0)
        # H1 turns S-coordinates by exp(-2i lam t); pick the arrival side that
        # the clockwise motion reaches first
        q_alt = _point_on_radius(D_next, X, rho, xi_dir, -1.0)
        t1 = _rotation_time(S(p), S(q), 2.0 * lam)
        t1_alt = _rotation_time(S(p), S(q_alt), 2.0 * lam)
        if t1_alt < t1:
            q, t1 = q_alt, t1_alt
        t0 = _rotation_time(z, p, w0) if abs(z) > 0 else 0.0
        steps += [(0, t0), (1, t1)]
        z = q
    steps.append((0, _rotation_time(z, zf, w0)))
    return PulseSequence(tuple(steps))


def simulate_batch(z0, durations, H0: QuadraticHamiltonian, H1: QuadraticHamiltonian) -> np.ndarray:
    """Final points of many alternating sequences (rows of ``durations``)."""
    durations = np.atleast_2d(np.asarray(durations, dtype=np.float64))
    n = durations.shape[1]
    z0 = np.broadcast_to(np.asarray(z0, dtype=np.complex128), (durations.shape[0],))
    indices = np.arange(n, dtype=np.int64) % 2
    return kernels.simulate_sequence(z0, durations, indices, *kernels.hamiltonian_params([H0, H1]))
