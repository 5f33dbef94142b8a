"""Pure-Python/numpy implementations of the hot kernels.

Signatures match the compiled ``_ckernels`` module exactly; ``kernels``
chooses between the two at import time.
"""

import math

import numpy as np

KIND_STABLE, KIND_FREE, KIND_UNSTABLE = 0, 1, 2


def squeezed_amplitudes(z, n):
    """Fock amplitudes of the normalized squeezed state with label ``z``.

    ``c_0 = (1 - |z|^2)^(1/4)``, ``c_{2m+2} = c_{2m} (-z/2) sqrt((2m+1)(2m+2)) / (m+1)``,
    odd entries zero.
    """
    z = complex(z)
    out = np.zeros(n, dtype=np.complex128)
    if n == 0:
        return out
    c = (1.0 - (z.real * z.real + z.imag * z.imag)) ** 0.25 + 0j
    out[0] = c
    m = 0
    while 2 * m + 2 < n:
        c = c * (-0.5 * z) * math.sqrt((2 * m + 1) * (2 * m + 2)) / (m + 1)
        out[2 * m + 2] = c
        m += 1
    return out


def _coefficients(omega, alpha, kind, rate, t):
    if kind == KIND_STABLE:
        C = np.cos(rate * t)
        s = np.sin(rate * t) / rate
    elif kind == KIND_FREE:
        C = np.ones_like(t)
        s = t
    else:
        C = np.ones_like(t)
        s = np.tanh(rate * t) / rate
    a = C - 1j * omega * s
    b = 1j * np.conj(alpha) * s
    c = -1j * alpha * s
    d = C + 1j * omega * s
    return a, b, c, d


def simulate_sequence(z0, durations, indices, omegas, alphas, kinds, rates):
    """Apply a switched sequence of closed-form flows to many start points.

    ``z0`` has shape (m,), ``durations`` shape (m, n); step ``j`` of every row
    evolves under Hamiltonian ``indices[j]`` for ``durations[:, j]``.
    """
    z = np.array(z0, dtype=np.complex128, copy=True)
    durations = np.asarray(durations, dtype=np.float64)
    for j in range(durations.shape[1]):
        h = int(indices[j])
        a, b, c, d = _coefficients(
            float(omegas[h]), complex(alphas[h]), int(kinds[h]), float(rates[h]), durations[:, j]
        )
        z = (a * z + b) / (c * z + d)
    return z


def mobius_orbit(a, b, c, d, z0, n):
    """``[z0, M z0, ..., M^(n-1) z0]`` for a single map."""
    out = np.empty(n, dtype=np.complex128)
    z = complex(z0)
    for k in range(n):
        out[k] = z
        z = (a * z + b) / (c * z + d)
    return out
