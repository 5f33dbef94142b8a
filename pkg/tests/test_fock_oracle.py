import math

import numpy as np
import pytest
from hypothesis import given

from disk_squeeze import fock_oracle as fo
from disk_squeeze.dynamics import QuadraticHamiltonian as H, evolve

from conftest import disk_points


def test_vacuum_is_first_basis_vector():
    psi = fo.squeezed_state_vector(0, 8)
    assert np.allclose(psi.amplitudes, np.eye(8)[0])


def test_amplitude_ratio():
    z = 0.3 - 0.4j
    a = fo.squeezed_state_vector(z, 16).amplitudes
    assert a[2] / a[0] == pytest.approx(-z / math.sqrt(2), abs=1e-15)
    assert np.all(a[1::2] == 0)


def test_vector_is_read_only():
    psi = fo.squeezed_state_vector(0.2, 8)
    with pytest.raises(ValueError):
        psi.amplitudes[0] = 1


def test_json_roundtrip():
    psi = fo.squeezed_state_vector(0.2 + 0.1j, 6)
    back = fo.FockVector.from_json(psi.to_json())
    assert np.array_equal(back.amplitudes, psi.amplitudes)
    doc = psi.to_json()
    doc["dim"] = 5
    with pytest.raises(fo.FockError):
        fo.FockVector.from_json(doc)


@given(disk_points(0.8))
def test_truncated_norm(z):
    psi = fo.squeezed_state_vector(z, 128)
    assert abs(1 - psi.norm() ** 2 - fo.truncation_deficit(z, 128)) <= 1e-14


def test_truncation_deficit_grows_with_squeezing():
    assert fo.truncation_deficit(0.99, 64) > fo.truncation_deficit(0.5, 64) > 0


@given(disk_points(0.8))
def test_annihilator_residual_small(z):
    assert fo.annihilator_residual(z, fo.squeezed_state_vector(z, 128)) <= 1e-10


def test_overlap_diagonal_and_hermitian():
    z, w = 0.3 + 0.2j, -0.5j
    assert fo.overlap(z, z) == pytest.approx(1.0)
    assert fo.overlap(z, w) == pytest.approx(fo.overlap(w, z).conjugate())


def test_overlap_closed_form_vs_truncated(rng):
    for _ in range(1000):
        z, w = (0.8 * math.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()) for _ in range(2))
        num = fo.squeezed_state_vector(z, 128).inner(fo.squeezed_state_vector(w, 128))
        assert abs(num - fo.overlap(z, w)) <= 1e-10


def test_hs_distance_example():
    assert abs(fo.hs_distance_sq(0, 0.5) - (2 - math.sqrt(3))) <= 1e-12
    psi, phi = fo.squeezed_state_vector(0, 128), fo.squeezed_state_vector(0.5, 128)
    assert abs(fo.projection_distance_sq(psi, phi) - (2 - math.sqrt(3))) <= 1e-9


def test_hs_distance_equals_overlap_form(rng):
    for _ in range(200):
        z, w = (complex(*rng.uniform(-0.6, 0.6, 2)) for _ in range(2))
        assert fo.hs_distance_sq(z, w) == pytest.approx(2 - 2 * abs(fo.overlap(z, w)) ** 2, abs=1e-14)


def test_hamiltonian_matrix_is_hermitian():
    m = fo.hamiltonian_matrix(H(1.3, 0.4 - 0.7j), 20).matrix
    assert np.allclose(m, m.conj().T)
    with pytest.raises(fo.FockError):
        fo.hamiltonian_matrix(H(1, 0), 3)


def test_propagator_dimension_check():
    prop = fo.Propagator(fo.hamiltonian_matrix(H(1, 0.5), 16))
    with pytest.raises(fo.FockError, match="dimension"):
        prop(fo.squeezed_state_vector(0, 8), 1.0)


@pytest.mark.parametrize("omega,alpha", [(2, 1), (1, 1), (0, 1), (1.5, 0.3 + 0.9j)])
def test_flow_matches_fock_evolution(omega, alpha):
    h = H(omega, alpha)
    prop = fo.Propagator(fo.hamiltonian_matrix(h, 128))
    z0 = 0.1 - 0.2j
    psi0 = fo.squeezed_state_vector(z0, 128)
    for t in np.linspace(0.05, 0.6, 8):
        z = evolve(h, z0, t)
        if abs(z) > 0.8:
            continue
        assert abs(fo.extract_disk_point(prop(psi0, t)) - z) <= 1e-6


def test_extract_rejects_non_squeezed():
    amps = np.zeros(8, complex)
    amps[1] = 1
    with pytest.raises(fo.FockError):
        fo.extract_disk_point(fo.FockVector(amps))
    amps = np.zeros(8, complex)
    amps[0], amps[1] = 1, 0.1
    with pytest.raises(fo.FockError, match="odd"):
        fo.extract_disk_point(fo.FockVector(amps))


@pytest.mark.parametrize("z", [0, 0.5, 0.5j])
def test_fubini_study_ratio_converges(z):
    u = (1 + 1j) / math.sqrt(2)
    e1 = fo.fubini_study_ratio(z, 1e-2 * u) - 1
    e2 = fo.fubini_study_ratio(z, 5e-3 * u) - 1
    assert 3.5 <= e1 / e2 <= 4.5
    with pytest.raises(fo.FockError):
        fo.fubini_study_ratio(z, 0)
