"""Smoke tests for the _gnormlab extension module."""

import math

import numpy as np
import pytest

import _gnormlab as gl


def test_norms_of_diag():
    a = np.diag([3.0, 4.0]).astype(complex)
    assert gl.uinorm(a, "operator") == pytest.approx(4.0, abs=1e-12)
    assert gl.uinorm(a, "kyfan:2") == pytest.approx(7.0, abs=1e-12)
    assert gl.uinorm(a, "schatten:2") == pytest.approx(5.0, abs=1e-12)
    assert gl.hs_norm_direct(a) == pytest.approx(5.0, abs=1e-14)
    s = gl.singular_values(a)
    assert s == pytest.approx([4.0, 3.0], abs=1e-13)


def test_svd_and_abs():
    rng = np.random.default_rng(1)
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    u, s, v = gl.svd(a)
    assert np.linalg.norm(u @ np.diag(s) @ v.conj().T - a) <= 1e-10 * (1 + np.linalg.norm(a))
    aa = gl.abs_matrix(a)
    assert np.linalg.norm(aa @ aa - a.conj().T @ a) <= 1e-8 * (1 + np.linalg.norm(a) ** 2)


def test_haar_unitary_and_classify():
    u = gl.haar_unitary(4, 7)
    assert np.linalg.norm(u.conj().T @ u - np.eye(4)) <= 1e-12
    flags = gl.classify(u, 1e-10)
    assert flags["unitary"] and flags["normal"]


def test_random_in_disk_ground_truth():
    a, u, eigs = gl.random_in_disk(5, 11, radius=0.9, hermitian=False)
    assert np.linalg.norm(a - u @ np.diag(eigs) @ u.conj().T) <= 1e-12
    assert max(abs(z) for z in eigs) < 0.9
    assert gl.dist_boundary_spectrum(eigs) == pytest.approx(1 - max(abs(z) for z in eigs))


def test_herglotz_evaluation_and_calculus():
    f = gl.HerglotzFunction.single_atom(0.0)
    assert f(0.5) == pytest.approx(3.0, abs=1e-14)
    assert f.conj_eval(0.5j) == pytest.approx(0.6 - 0.8j, abs=1e-13)

    a, u, eigs = gl.random_in_disk(4, 3, radius=0.6, hermitian=False)
    g = gl.HerglotzFunction.random(4, 5)
    via_spectrum = g.apply(u, eigs)
    radius = (max(abs(z) for z in eigs) + 1.0) / 2.0
    via_contour = g.apply_contour(a, radius, 256)
    assert np.linalg.norm(via_spectrum - via_contour) <= 1e-9 * (1 + np.linalg.norm(via_spectrum))


def test_block_constructions():
    a = np.diag([1.0 + 0j])
    b = np.diag([2.0 + 0j])
    off = gl.block_offdiag(a, b)
    assert off[0, 1] == 1.0 and off[1, 0] == 2.0
    ds = gl.direct_sum(a, b)
    assert ds.shape == (2, 2) and ds[1, 1] == 2.0


def test_numerical_range_distance():
    nil = np.array([[0.0, 0.8], [0.0, 0.0]], dtype=complex)
    assert gl.numerical_range_distance(nil) == pytest.approx(0.6, abs=1e-10)


def test_suite_runs_clean_and_deterministic():
    config = {
        "trials": 2,
        "dims": [2, 3],
        "seed": 41,
        "suites": ["submult", "fx_xfbar_sum", "phase_bound"],
    }
    r1 = gl.run_suite(config)
    r2 = gl.run_suite(config)
    assert r1 == r2
    assert r1["violations"] == 0
    assert r1["exit_status"] == 0
    names = [c["name"] for c in r1["checkers"]]
    assert names == ["submult", "fx_xfbar_sum", "phase_bound"]


def test_replay_canonical_witness():
    report = gl.run_suite({"trials": 1, "dims": [1], "seed": 9, "suites": ["posmult_plus"]})
    assert report["exit_status"] == 0  # recording suite
    worst = report["checkers"][0]["worst"]
    assert worst["slack"] == -2.0
    again = gl.replay(worst)
    assert again["lhs"] == worst["lhs"]
    assert again["rhs"] == worst["rhs"]


def test_checker_names_exposed():
    names = gl.checker_names()
    assert "fx_minus_xg" in names and "herglotz_oracle" in names
