import cmath
import math

import numpy as np
import pytest

import anyonsim


def test_version():
    assert anyonsim.__version__.count(".") == 2


def test_fusion_after_exchange_is_even_split():
    d = anyonsim.fusion_distribution("2", "(1,3)(2,4)", shots=10000, seed=7)
    assert d["probabilities"]["00"] == pytest.approx(0.5, abs=1e-12)
    assert d["probabilities"]["11"] == pytest.approx(0.5, abs=1e-12)
    assert sum(d["counts"].values()) == 10000
    again = anyonsim.fusion_distribution("2", "(1,3)(2,4)", shots=10000, seed=7)
    assert again["counts"] == d["counts"]


def test_relations_pass():
    assert anyonsim.check_relations("ising", 8)["pass"]
    assert anyonsim.check_relations("fibonacci", 6)["pass"]


def test_basis_sizes():
    assert anyonsim.enumerate_basis(3, "t") == ["0t0t", "0ttt"]
    assert len(anyonsim.enumerate_basis(6)) == 13


def test_ising_unitary_is_unitary():
    u = anyonsim.ising_unitary("1 2 -1", 6)
    assert np.allclose(u.conj().T @ u, np.eye(u.shape[0]), atol=1e-12)


def test_composite_loop_values():
    w = -cmath.exp(2j * math.pi / 5)
    got = anyonsim.composite_loop()
    for a, b in zip(got, (1.0, w**-4, w**-2)):
        assert abs(a - b) < 1e-12


def test_distance_phase_invariant():
    z = np.diag([1.0, -1.0]).astype(complex)
    assert anyonsim.distance(np.eye(2), 1j * np.eye(2)) < 1e-14
    assert anyonsim.distance(np.eye(2), z) == pytest.approx(math.sqrt(2.0))


def test_compile_weave_default_target():
    r = anyonsim.compile_weave(max_moves=4)
    assert r["distance"] < 0.02
    g = r["controlled_gate"]
    assert np.allclose(g[np.ix_([0, 2], [0, 2])], np.eye(2))


def test_berry_exchange():
    r = anyonsim.berry_exchange(steps=200)
    assert r["distance"] < 1e-3


def test_bdg_end_modes():
    r = anyonsim.bdg_spectrum(sites=120)
    assert r["ph_defect"] < 1e-10
    assert len(r["near_zero"]) == 2


def test_jr_zero_mode_peak_at_wall():
    x, density, residual = anyonsim.jr_zero_mode(spacing=0.02)
    assert abs(x[int(np.argmax(density))]) < 0.05
    assert residual < 1e-2


def test_errors_are_raised():
    with pytest.raises(anyonsim.Error):
        anyonsim.fusion_distribution("1", "(1,2)(1,3)")
