import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eacap.qmat import (
    SIGMA_X,
    BlochVector,
    ConvergenceError,
    binary_entropy,
    bloch_to_density,
    density_to_bloch,
    eig2,
    eig_jacobi,
    eigvals,
    von_neumann_entropy,
)
from eacap.verify import random_hermitian, random_unitary

from conftest import eigh_entropy


def bloch_vectors():
    comp = st.floats(-1, 1, allow_nan=False)
    return st.tuples(comp, comp, comp).filter(lambda w: w[0] ** 2 + w[1] ** 2 + w[2] ** 2 <= 1)


@pytest.mark.parametrize(
    "w, expected",
    [
        ((0, 0, 0), 0.5 * np.eye(2)),
        ((0, 0, 1), np.diag([1, 0])),
        ((1, 0, 0), [[0.5, 0.5], [0.5, 0.5]]),
    ],
)
def test_bloch_to_density_examples(w, expected):
    np.testing.assert_allclose(bloch_to_density(w), expected, atol=1e-15)
    assert density_to_bloch(expected) == BlochVector(*w)


def test_bloch_to_density_layout():
    rho = bloch_to_density((0.1, 0.2, 0.3))
    np.testing.assert_allclose(rho, 0.5 * np.array([[1.3, 0.1 - 0.2j], [0.1 + 0.2j, 0.7]]))


def test_bloch_outside_ball_rejected():
    with pytest.raises(ValueError):
        bloch_to_density((1, 1, 0))
    BlochVector(1 + 5e-13, 0, 0)


@given(bloch_vectors())
def test_bloch_round_trip(w):
    rho = bloch_to_density(w)
    back = density_to_bloch(rho).as_array()
    np.testing.assert_allclose(back, w, atol=1e-14, rtol=0)
    assert abs(np.trace(rho) - 1) <= 1e-14
    assert eig2(rho)[1] >= -1e-12


@given(bloch_vectors())
def test_eig2_matches_bloch_radius(w):
    r = math.sqrt(sum(x * x for x in w))
    hi, lo = eig2(bloch_to_density(w))
    assert hi == pytest.approx(0.5 * (1 + r), abs=1e-12)
    assert lo == pytest.approx(0.5 * (1 - r), abs=1e-12)


def test_eig2_examples():
    assert eig2(np.diag([1.0, 0.0])) == (1.0, 0.0)
    assert eig2(bloch_to_density((0, 0, 0.5))) == pytest.approx((0.75, 0.25), abs=1e-15)
    # exchange matrix of AD(0.2) at the center: diag(1 - eta/2, eta/2)
    assert eig2(np.diag([0.9, 0.1])) == pytest.approx((0.9, 0.1), abs=1e-15)


def test_jacobi_examples():
    assert eig_jacobi(np.eye(4)) == (1.0, 1.0, 1.0, 1.0)
    assert eig_jacobi(np.diag([0.1, 0.4, 0.2, 0.3])) == (0.4, 0.3, 0.2, 0.1)


def test_jacobi_agrees_with_eig2(rng):
    for _ in range(1000):
        m = random_hermitian(rng, 2)
        np.testing.assert_allclose(eig_jacobi(m), eig2(m), atol=1e-12, rtol=0)


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_jacobi_against_numpy(rng, dim):
    for _ in range(200):
        m = random_hermitian(rng, dim)
        lam = eig_jacobi(m)
        np.testing.assert_allclose(lam, np.linalg.eigvalsh(m)[::-1], atol=1e-12, rtol=0)
        assert list(lam) == sorted(lam, reverse=True)
        assert abs(sum(lam) - np.trace(m).real) <= 1e-12


def test_jacobi_degenerate_and_rank_deficient(rng):
    u = random_unitary(rng, 4)
    m = u @ np.diag([0.5, 0.5, 0, 0]) @ u.conj().T
    np.testing.assert_allclose(eig_jacobi(m), (0.5, 0.5, 0, 0), atol=1e-14)


def test_jacobi_reports_nonconvergence(rng):
    with pytest.raises(ConvergenceError):
        eig_jacobi(random_hermitian(rng, 4), max_sweeps=1)


def test_jacobi_rejects_bad_input():
    with pytest.raises(ValueError):
        eig_jacobi(np.array([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        eig_jacobi(np.eye(5))


def test_eigvals_dispatch():
    m = np.diag([0.7, 0.2, 0.1])
    assert eigvals(m) == pytest.approx((0.7, 0.2, 0.1))
    with pytest.raises(ValueError):
        eigvals(m, method="closed")


@pytest.mark.parametrize("p, expected", [(0.5, 1.0), (0.0, 0.0), (1.0, 0.0), (0.1, 0.4689955935892812)])
def test_binary_entropy(p, expected):
    assert binary_entropy(p) == pytest.approx(expected, abs=1e-15)


def test_binary_entropy_clamps_and_rejects():
    assert binary_entropy(-1e-13) == 0.0
    assert binary_entropy(1 + 1e-13) == 0.0
    with pytest.raises(ValueError):
        binary_entropy(1.01)
    with pytest.raises(ValueError):
        binary_entropy(-1e-6)


def test_von_neumann_examples():
    assert von_neumann_entropy(0.5 * np.eye(2)) == pytest.approx(1.0, abs=1e-15)
    assert von_neumann_entropy(np.diag([1.0, 0.0])) == 0.0
    assert von_neumann_entropy(np.diag([0.9, 0.1])) == pytest.approx(binary_entropy(0.1), abs=1e-15)
    assert von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2.0, abs=1e-14)


def test_von_neumann_domain_errors():
    with pytest.raises(ValueError):
        von_neumann_entropy(np.eye(2))
    with pytest.raises(ValueError):
        von_neumann_entropy(np.diag([1.1, -0.1]))
    # tiny negative eigenvalues are clamped
    assert von_neumann_entropy(np.diag([1 + 5e-11, -5e-11])) == pytest.approx(0.0, abs=1e-9)


@settings(max_examples=200)
@given(bloch_vectors())
def test_entropy_invariant_under_pauli_conjugation(w):
    rho = bloch_to_density(w)
    flipped = SIGMA_X @ rho @ SIGMA_X
    assert von_neumann_entropy(flipped) == pytest.approx(von_neumann_entropy(rho), abs=1e-12)
    assert von_neumann_entropy(rho) == pytest.approx(eigh_entropy(rho), abs=1e-12)


def test_entropy_jacobi_route_matches_closed(ball_points):
    for w in ball_points[:200]:
        rho = bloch_to_density(w)
        assert von_neumann_entropy(rho, method="jacobi") == pytest.approx(von_neumann_entropy(rho), abs=1e-12)
