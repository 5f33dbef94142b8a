"""Truncated Fock-space model of squeezed states.

This is an independent check on the disk geometry: states are amplitude
vectors in the number basis ``|0>, ..., |N-1>``, the Hamiltonian is a dense
Hermitian matrix and time evolution is done by diagonalization.  Nothing here
uses the closed-form Moebius flows.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import geometry as geo
from . import kernels
from .dynamics import QuadraticHamiltonian

DEFAULT_DIM = 128
MIN_VACUUM_AMPLITUDE = 1e-8
MAX_ODD_MASS = 1e-6


class FockError(ValueError):
    pass


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.complex128)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FockVector:
    amplitudes: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "amplitudes", _frozen(self.amplitudes))
        if self.amplitudes.ndim != 1:
            raise FockError("amplitudes must be one-dimensional")

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "FockVector") -> complex:
        """``<self|other>``, antilinear in ``self``."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "amplitudes": [[c.real, c.imag] for c in self.amplitudes.tolist()],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "FockVector":
        amps = [complex(re, im) for re, im in doc["amplitudes"]]
        if len(amps) != doc["dim"]:
            raise FockError("dim does not match amplitude count")
        return cls(np.array(amps))


@dataclass(frozen=True, eq=False)
class FockOperator:
    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen(self.matrix))
        m = self.matrix
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise FockError("operator must be a square matrix")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def squeezed_state_vector(z, N: int = DEFAULT_DIM) -> FockVector:
    z = geo.disk_point(z)
    if N < 2:
        raise FockError("need N >= 2")
    return FockVector(kernels.squeezed_amplitudes(z, int(N)))


def truncation_deficit(z, N: int) -> float:
    """``1 - ||psi_N(z)||^2`` summed from the discarded tail so it does not cancel."""
    z = geo.disk_point(z)
    # tail amplitudes continue the same recurrence beyond index N-1
    r2 = abs(z) ** 2
    c2 = math.sqrt(1.0 - r2)
    m = 0
    total = 0.0
    while True:
        if 2 * m >= N:
            total += c2
            if c2 <= total * 1e-17 or c2 == 0.0:
                break
        c2 *= r2 / 4.0 * (2 * m + 1) * (2 * m + 2) / (m + 1) ** 2
        m += 1
        if m > 10 * N + 100000:
            break
    return total


def overlap(z, w) -> complex:
    """``<psi(z)|psi(w)>`` in closed form (principal square root)."""
    z, w = geo.disk_point(z), geo.disk_point(w)
    norm = ((1.0 - abs(z) ** 2) * (1.0 - abs(w) ** 2)) ** 0.25
    return norm / cmath.sqrt(1.0 - z.conjugate() * w)


def hs_distance_sq(z, w) -> float:
    """``tr((P(z) - P(w))^2) = 2 (1 - (1 + delta)^(-1/2))``."""
    z, w = geo.disk_point(z), geo.disk_point(w)
    delta = geo.distance_delta(z, w)
    return -2.0 * math.expm1(-0.5 * math.log1p(delta))


def projection_distance_sq(psi: FockVector, phi: FockVector) -> float:
    """``tr((P - Q)^2)`` for the rays of two truncated vectors."""
    p = psi.amplitudes / np.linalg.norm(psi.amplitudes)
    q = phi.amplitudes / np.linalg.norm(phi.amplitudes)
    return 2.0 - 2.0 * abs(np.vdot(p, q)) ** 2


def lowering_matrix(N: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, N, dtype=np.float64)), k=1).astype(np.complex128)


def hamiltonian_matrix(H: QuadraticHamiltonian, N: int = DEFAULT_DIM) -> FockOperator:
    if N < 4:
        raise FockError("need N >= 4")
    n = np.arange(N, dtype=np.float64)
    mat = np.diag(H.omega * n).astype(np.complex128)
    # <n-2| a^2 |n> = sqrt(n(n-1))
    pair = np.sqrt(n[2:] * (n[2:] - 1.0))
    idx = np.arange(2, N)
    mat[idx - 2, idx] = 0.5 * H.alpha * pair
    mat[idx, idx - 2] = 0.5 * H.alpha.conjugate() * pair
    return FockOperator(mat)


class Propagator:
    """Reusable ``exp(-i t Hm)`` built from one Hermitian eigendecomposition."""

    def __init__(self, Hm: FockOperator):
        self.dim = Hm.dim
        self.energies, self.vectors = np.linalg.eigh(Hm.matrix)

    def __call__(self, psi: FockVector, t: float) -> FockVector:
        if psi.dim != self.dim:
            raise FockError(f"dimension mismatch: operator {self.dim}, vector {psi.dim}")
        coeffs = self.vectors.conj().T @ psi.amplitudes
        phases = np.exp(-1j * float(t) * self.energies)
        return FockVector(self.vectors @ (phases * coeffs))


def evolve_vector(Hm: FockOperator, psi: FockVector, t: float) -> FockVector:
    return Propagator(Hm)(psi, t)


def extract_disk_point(psi: FockVector) -> complex:
    """Recover ``z`` from ``c_2 / c_0 = -z / sqrt(2)`` (global phase cancels)."""
    amps = psi.amplitudes
    if psi.dim < 3:
        raise FockError("need at least three amplitudes")
    c0 = amps[0]
    if abs(c0) <= MIN_VACUUM_AMPLITUDE:
        raise FockError("vacuum amplitude too small: state too squeezed for this truncation")
    norm2 = float(np.vdot(amps, amps).real)
    odd = float(np.vdot(amps[1::2], amps[1::2]).real) / norm2
    if odd > MAX_ODD_MASS:
        raise FockError(f"not a squeezed-family state (odd mass {odd:.3g})")
    z = complex(-math.sqrt(2.0) * amps[2] / c0)
    return geo.disk_point(z)


def annihilator_residual(z, psi: FockVector) -> float:
    """``||(a + z a*) psi||`` over rows ``0 .. N-3``.

    The last two rows are dropped because the truncated raising operator
    cannot feed them correctly.
    """
    z = geo.disk_point(z)
    N = psi.dim
    if N < 4:
        raise FockError("need N >= 4")
    a = lowering_matrix(N)
    op = a + z * a.conj().T
    out = op @ psi.amplitudes
    return float(np.linalg.norm(out[: N - 2]))


def fubini_study_ratio(z, dz) -> float:
    """``4 tr((P(z) - P(z+dz))^2) / d_h(z, z+dz)^2``; tends to 1 as ``dz -> 0``."""
    z = geo.disk_point(z)
    dz = complex(dz)
    if dz == 0:
        raise FockError("dz must be nonzero")
    w = geo.disk_point(z + dz)
    d = geo.hyperbolic_distance(z, w)
    return 4.0 * hs_distance_sq(z, w) / d ** 2
