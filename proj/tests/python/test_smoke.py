"""Smoke tests for the python bindings.

These are not the numerical gate (the C++ suites are); they check that the
module imports, the main entry points run end to end, and errors translate
into the right python exception types.
"""

import math

import numpy as np
import pytest

import hyperschrod as hs


def gaussian_profile(alpha, dr=2e-3, n=10001, with_psi=True, shift=0.0):
    r = np.arange(n) * dr
    psi = np.ones(n)
    if with_psi:
        psi[1:] = r[1:] / np.sinh(r[1:])
    return (psi * np.exp(-alpha * r * r + shift * r)).astype(complex), r


def test_version():
    assert hs.__version__ == "1.0.0"


def test_space_info_h3():
    info = hs.space_info("H3")
    assert info["name"] == "H3"
    assert info["rank"] == 1
    assert info["dim"] == 3
    assert info["complex_group"] is True
    assert info["condition_C"] is True
    assert info["rho_norm"] == pytest.approx(1.0)
    assert info["rho_norm_killing"] == pytest.approx(0.5)
    assert hs.space_info("H2")["condition_C"] is False


def test_xi_and_psi_h3():
    assert hs.xi("H3", 1.0) == pytest.approx(1.0 / math.sinh(1.0), rel=1e-12)
    assert hs.psi("H3", 2.0) == pytest.approx(2.0 / math.sinh(2.0), rel=1e-12)
    assert hs.xi("SL3C", 0.0) == 1.0


def test_c_function_normalization():
    for name in ("H2", "H3", "H4", "H5", "SL3C"):
        assert hs.check_c_normalization(name) == pytest.approx(1.0, abs=1e-10)
    assert hs.c0("H3") == pytest.approx(hs.c0_closed_form("H3"), rel=1e-12)


def test_plancherel_density_h3():
    lam = np.linspace(0.1, 10.0, 50)
    dens = hs.plancherel_density("H3", lam)
    assert np.max(np.abs(dens - lam**2) / lam**2) < 1e-8


def test_propagate_euclid_matches_oracle():
    field = hs.gaussian_field(1, 512, 12.0, 1.0 + 0.0j)
    out = hs.propagate_euclid(field, 12.0, 0.2, c=0.5)
    oracle = hs.gaussian_oracle(1, 512, 12.0, 1.0 + 0.0j, 0.5, 0.2)
    rel = np.linalg.norm(out - oracle) / np.linalg.norm(oracle)
    assert rel < 1e-6


def test_spherical_transform_gaussian():
    f, _ = gaussian_profile(1.0)
    result = hs.spherical_transform(f, 2e-3)
    dl = result["dl"]
    values = result["values"]
    k = round(1.0 / dl)
    expected = math.exp(-((k * dl) ** 2) / 4.0) / (2.0 * math.sqrt(math.pi))
    assert abs(values[k] - expected) / expected < 1e-6


def test_propagate_radial_conserves_norm():
    f, r = gaussian_profile(1.0)
    u = hs.propagate_radial(f, 2e-3, 0.7)
    w = np.sinh(r) ** 2
    n_in = np.sum(np.abs(f) ** 2 * w)
    n_out = np.sum(np.abs(u) ** 2 * w)
    assert abs(n_out - n_in) / n_in < 1e-4


def test_extremal_threshold_arithmetic():
    pair = hs.extremal(1.0, 1.0 / 16.0)
    assert pair["t0"] == pytest.approx(1.0, rel=1e-12)
    assert pair["dr"] == pytest.approx(1e-3)
    assert len(pair["f"]) == len(pair["u_envelope"])
    # the datum carries the alpha decay rate
    fit = hs.decay_fit(pair["f"], pair["dr"])
    assert fit["alpha"] == pytest.approx(1.0, rel=1e-6)


def test_decay_fit_and_classify():
    f, _ = gaussian_profile(1.5)
    fit = hs.decay_fit(f, 2e-3, divide_psi=True)
    assert fit["alpha"] == pytest.approx(1.5, rel=1e-6)
    assert fit["r2"] > 0.999999
    assert hs.classify(4.0) == "FORCES_ZERO"
    assert hs.classify(1.0) == "BOUNDARY"
    assert hs.classify(0.5) == "NO_CONCLUSION"


def test_beurling_divergence_tracks_threshold():
    lo, _ = gaussian_profile(2.5 * math.sqrt(0.5), with_psi=False)
    hi, _ = gaussian_profile(5.0, with_psi=False)
    below = hs.beurling(lo, lo, 2e-3, 0.1)
    above = hs.beurling(hi, hi, 2e-3, 0.1)
    assert below["divergent"] is True
    assert above["divergent"] is False
    assert above["value"] > 0.0


def test_input_errors_are_value_errors():
    with pytest.raises(ValueError):
        hs.space_info("H9")
    with pytest.raises(ValueError):
        hs.xi("H3", -1.0)


def test_numeric_errors_are_runtime_errors():
    zeros = np.zeros(101, dtype=complex)
    with pytest.raises(RuntimeError):
        hs.decay_fit(zeros, 0.2)
