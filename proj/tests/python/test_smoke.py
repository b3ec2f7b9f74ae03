"""Smoke tests for the python bindings: one exercise per surface area."""

import json

import numpy as np
import pytest

import thetaloc as tl


def test_characteristic_counts():
    assert tl.even_count(3) == 36
    assert tl.odd_count(3) == 28
    evens = tl.enumerate_characteristics(3, tl.Parity.Even)
    assert len(evens) == 36
    assert all(d.is_even() for d in evens)
    d = tl.Characteristic.from_string("[110|100]")
    assert str(d) == "[110|100]"
    assert d.parity() == tl.Parity.Odd


def test_theta_oracle_value():
    tau = tl.PeriodMatrix(np.array([[1j]]))
    v = tl.eval_thetanull(tl.Characteristic(1), tau)
    assert abs(v.value - 1.0864348112133080) < 1e-10
    assert v.tail_bound < 1e-9
    assert v.normalized_magnitude() > 0.9


def test_odd_thetanull_vanishes():
    omega = tl.sample_generic(3, 7)
    odd = tl.Characteristic([1, 0, 0], [1, 0, 0])
    assert tl.eval_thetanull(odd, omega).normalized_magnitude() < 1e-8


def test_incidence_report_counts():
    point = tl.sample_stratum_point(tl.StratumKind.Red, 5)
    report = tl.vanishing_set_numeric(point)
    assert len(report.vanishing_even) == 6
    assert len(report.readings) == 36
    combinatorial = tl.vanishing_set_combinatorial(point.grouping)
    assert sorted(map(str, report.vanishing_even)) == sorted(map(str, combinatorial))


def test_census_values():
    num, den = tl.component_count(3)
    assert (num, den) == (36, 1)
    assert tl.moduli_betti(3) == 20
    assert tl.moduli_poincare_polynomial(2) == [1, 9, 26, 24]
    assert tl.binomial(8, 3) == 56
    assert tl.genus3_branch_split_count() == 56


def test_symplectic_action():
    omega = tl.sample_generic(2, 11)
    word = tl.random_word(2, 4, 3)
    moved = tl.act(word, omega)
    assert tl.is_member(moved.matrix)
    assert moved.genus == 2
    assert moved.min_imag_eigenvalue > 0


def test_errors_are_typed():
    omega = tl.sample_generic(2, 1)
    opts = tl.ThetaOptions()
    opts.tol = 1e-30
    with pytest.raises(tl.TruncationError):
        tl.eval_thetanull(tl.Characteristic(2), omega, opts)


def test_run_verify_json_subset():
    raw = tl.run_verify_json(seed=7, only=["characteristic-census", "census-formulas"])
    report = json.loads(raw)
    assert report["overall"]["pass"] is True
    names = [c["name"] for c in report["checks"]]
    assert names == ["characteristic-census", "census-formulas"]
    assert all(c["status"] == "pass" for c in report["checks"])
