"""Smoke tests for the python surface of the C++ core."""

import math

import pytest

import cuspbound as cb


def test_structure_values():
    assert cb.genus(11) == 1
    assert cb.genus(37) == 2
    assert cb.cusp_count(12) == 6
    assert cb.elliptic_counts(13) == (2, 2)
    assert cb.euler_phi(12) == 4
    assert cb.moebius(12) == 0
    assert cb.divisors(12) == [1, 2, 3, 4, 6, 12]


def test_profile_dict():
    p = cb.profile(11)
    assert p["genus"] == 1
    assert p["volume_over_pi"] == "4"
    assert (0, 1) in p["cusps"] and (1, 11) in p["cusps"]
    assert p["elliptic"] == []
    assert '"volume_over_pi": "4/1"' in cb.profile_json(11)


def test_special_functions():
    assert cb.gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-12)
    assert cb.zeta_fn(2.0) == pytest.approx(math.pi**2 / 6, rel=1e-12)
    assert cb.bessel_k(0.5, 1.0) == pytest.approx(
        math.sqrt(math.pi / 2) * math.exp(-1), rel=1e-10
    )
    assert cb.zeta_prime_minus1() == pytest.approx(-0.1654211437, abs=1e-9)


def test_eisenstein_and_klf():
    assert cb.eisenstein_fourier(0.0, 1.0, 2.0) == pytest.approx(2.7842015453, abs=1e-8)
    assert cb.scattering_constant_level1() == pytest.approx(0.8671324277, abs=1e-8)
    assert cb.klf_level1(0.0, 1.0) == pytest.approx(1.8742855478, abs=1e-8)
    # level lowering agrees with the level-1 value at N = 1
    assert cb.eisenstein_level(0.0, 1.0, 2.0, 1) == pytest.approx(
        cb.eisenstein_fourier(0.0, 1.0, 2.0), rel=1e-12
    )


def test_hyperbolic_kernels():
    assert cb.green_h(0, 1, 0, 2) == pytest.approx(math.log(9), rel=1e-12)
    assert cb.hyp_distance(0, 1, 0, 2) == pytest.approx(math.log(2), rel=1e-12)
    assert cb.green_from_heat(0, 1, 0, 2, 1e-5) == pytest.approx(math.log(9), abs=1e-4)
    with pytest.raises(ValueError):
        cb.green_h(0, 1, 0, 1)


def test_scattering_reports():
    r = cb.scattering_const_0inf(2)
    assert r["constant"] == pytest.approx(
        cb.scattering_constant_level1() / 3 + math.log(2) / (3 * math.pi), abs=1e-10
    )
    assert r["residue_check"] == pytest.approx(1.0, abs=1e-4)
    assert "pi_c_over_3" in r["terms"]


def test_ledger_and_sweep():
    led = cb.green_can_ledger(11)
    assert led["total_upper"] - led["total_lower"] == pytest.approx(
        2 * led["delta_x_bound"], rel=1e-12
    )
    rows = cb.sweep(10007, 10037, primes_only=True, threads=2)
    assert [r["n"] for r in rows] == [10007, 10009, 10037]
    assert all(abs(r["ratio"] - 1) <= 0.25 for r in rows)
    with pytest.raises(ValueError):
        cb.green_can_ledger(1)
