import math

import numpy as np
import pytest

import spinpair


def test_hamiltonian_is_hermitian_and_traceless():
    h = spinpair.build_hamiltonian(1.0, 0.5, -0.3)
    assert h.shape == (4, 4)
    assert np.allclose(h, h.conj().T, atol=0)
    assert abs(np.trace(h)) == 0.0


def test_spectrum_matches_numpy():
    s = spinpair.analytic_spectrum(1.0, 1.0, 1.0)
    want = np.linalg.eigvalsh(spinpair.build_hamiltonian(1.0, 1.0, 1.0))
    assert np.allclose(sorted(s["energies"]), want, atol=1e-12)
    h = spinpair.build_hamiltonian(1.0, 1.0, 1.0)
    for e, v in zip(s["energies"], s["eigenvectors"]):
        assert np.allclose(h @ v, e * v, atol=1e-12)


def test_concurrence_paths_agree():
    a = spinpair.concurrence(1.0, 1.0, 1.0, 1.0)
    o = spinpair.concurrence(1.0, 1.0, 1.0, 1.0, method="oracle")
    assert a["path"] == "analytic" and o["path"] == "oracle"
    assert a["value"] == pytest.approx(0.88026156764675457621, abs=1e-14)
    assert abs(a["value"] - o["value"]) <= 1e-9


def test_thermal_state_against_numpy_expm():
    j, dx, gx, t = -0.7, 1.3, 0.4, 0.8
    h = spinpair.build_hamiltonian(j, dx, gx)
    w, v = np.linalg.eigh(h)
    rho = (v * np.exp(-w / t)) @ v.conj().T
    rho /= np.trace(rho)
    assert np.allclose(spinpair.thermal_state(j, dx, gx, t), rho, atol=1e-13)
    assert spinpair.partition_function(j, dx, gx, t) == pytest.approx(
        np.exp(-w / t).sum(), rel=1e-12
    )
    c = spinpair.concurrence_of_state(rho)["value"]
    assert c == pytest.approx(spinpair.concurrence(j, dx, gx, t)["value"], abs=1e-12)


def test_ground_state_and_phase_diagram():
    assert spinpair.classify_ground_state(1.0, 1.0, 3.0)["phase"] == "Phi2"
    boundary = spinpair.classify_ground_state(1.0, 1.0, 1.0 + math.sqrt(2.0))
    assert boundary["phase"] == "DegenerateBoundary"
    assert boundary["levels"] == ["Phi2", "Phi4"]
    rows = spinpair.phase_diagram("dx", -3, 3, 10, "gx", -4, 4, 8)
    assert len(rows) == 8 and all(len(r) == 10 for r in rows)
    assert rows[0][5] == "Phi1" and rows[-1][5] == "Phi2" and rows[4][5] == "Phi4"


def test_sweep_and_critical_temperature():
    x, c = spinpair.sweep_1d("dx", -6.0, 6.0, 121, j=1.0, gx=1.0, temp=1.0)
    assert x[0] == -6.0 and x[-1] == 6.0
    assert np.allclose(c, c[::-1], atol=1e-10)
    tcs = [spinpair.critical_temperature(j, 1.0, 1.0)["tc"] for j in (0.4, 0.6, 0.8)]
    assert tcs == sorted(tcs)


def test_limits_and_verify():
    assert spinpair.limit_high_temperature(100.0)["value"] == 0.0
    dm = spinpair.limit_strong_dm_ksea(0.01, 20.0, 1.0, 1.0)
    assert dm["documented_discrepancy"] and dm["value"] > 1.0
    report = spinpair.verify(samples=500, seed=42, tol=1e-9)
    assert report["failures"] == 0


def test_errors_raise():
    with pytest.raises(spinpair.SpinpairError):
        spinpair.concurrence(1.0, 1.0, 1.0, -1.0)
    with pytest.raises(spinpair.SpinpairError):
        spinpair.sweep_1d("dx", 1.0, -1.0, 5)
