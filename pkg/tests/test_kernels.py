import numpy as np
import pytest

from disk_squeeze import _pykernels, kernels
from disk_squeeze.dynamics import QuadraticHamiltonian as H, evolve

try:
    from disk_squeeze import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="cython"))

HS = [H(1.0), H(2.0, 1.0), H(1.0, 1.0j), H(0.0, 1.0), H(0.5, 1.2 - 0.3j)]


@pytest.mark.parametrize("impl", BACKENDS)
def test_squeezed_amplitudes(impl):
    z = 0.4 + 0.3j
    a = impl.squeezed_amplitudes(z, 10)
    assert a[0] == pytest.approx((1 - abs(z) ** 2) ** 0.25)
    assert a[2] / a[0] == pytest.approx(-z / np.sqrt(2))
    assert np.allclose(a, _pykernels.squeezed_amplitudes(z, 10), rtol=1e-14, atol=0)


@pytest.mark.parametrize("impl", BACKENDS)
def test_simulate_sequence_matches_evolve(impl, rng):
    params = kernels.hamiltonian_params(HS)
    idx = np.array([0, 1, 2, 3, 4, 0], dtype=np.int64)
    dur = rng.uniform(0, 1.5, size=(50, len(idx)))
    z0 = (0.5 * rng.uniform(-1, 1, 50) + 0.5j * rng.uniform(-1, 1, 50)).astype(complex)
    out = impl.simulate_sequence(z0, dur, idx, *params)
    for row in range(50):
        z = z0[row]
        for j, i in enumerate(idx):
            z = evolve(HS[i], z, dur[row, j])
        assert abs(out[row] - z) <= 1e-12


@pytest.mark.parametrize("impl", BACKENDS)
def test_mobius_orbit(impl):
    out = impl.mobius_orbit(2.0, 1.0, 1.0, 2.0, 0.0, 4)
    z, ref = 0j, []
    for _ in range(4):
        ref.append(z)
        z = (2 * z + 1) / (z + 2)
    assert np.allclose(out, ref, atol=1e-15)


def test_backends_agree(rng):
    if _ckernels is None:
        pytest.skip("extension not built")
    params = kernels.hamiltonian_params(HS)
    idx = rng.integers(0, len(HS), 7).astype(np.int64)
    dur = rng.exponential(1.0, size=(200, 7))
    z0 = np.zeros(200, complex)
    a = _pykernels.simulate_sequence(z0, dur, idx, *params)
    b = _ckernels.simulate_sequence(z0, dur, idx, *params)
    assert np.max(np.abs(a - b)) <= 1e-13


def test_backend_selected():
    assert kernels.BACKEND in ("python", "cython")


def test_pure_backend_can_be_forced():
    import os
    import subprocess
    import sys

    env = dict(os.environ, DISK_SQUEEZE_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from disk_squeeze import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
