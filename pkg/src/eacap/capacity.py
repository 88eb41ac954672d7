"""Entanglement-assisted capacity: mutual information and its maximization.

The matrix path (:func:`mutual_information`) works for any qubit Kraus
channel. For amplitude damping there is a closed form in the Bloch vector,
and the maximizer sits on the ``w3`` axis, so the capacity reduces to a
one-dimensional root of ``dI/dw3``. :func:`capacity_grid_oracle` searches
the whole Bloch ball by brute force to check that reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import KrausChannel, apply_channel, exchange_matrix, make_amplitude_damping
from .qmat import (
    BALL_TOL,
    JACOBI_TOL,
    BlochVector,
    ConvergenceError,
    as_density,
    binary_entropy,
    bloch_to_density,
    von_neumann_entropy,
)


@dataclass(frozen=True)
class OptimizerConfig:
    tol_w3: float = 1e-9
    tol_grad: float = 1e-12
    grid_n: int = 101
    fd_step: float = 1e-6

    def __post_init__(self):
        for name in ("tol_w3", "tol_grad", "fd_step"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.grid_n < 1 or self.grid_n % 2 == 0:
            raise ValueError("grid_n must be a positive odd integer")
        if self.fd_step >= 0.05:
            raise ValueError("fd_step too large for the w3 bracket")


DEFAULT_CONFIG = OptimizerConfig()


@dataclass(frozen=True)
class MutualInfoBreakdown:
    s_in: float
    s_out: float
    s_exchange: float
    i: float


@dataclass(frozen=True)
class CapacityRecord:
    eta: float
    w3_opt: float
    capacity: float
    i_center: float
    gap: float


def mutual_information(
    ch: KrausChannel, rho, method: str = "auto", tol: float = JACOBI_TOL
) -> MutualInfoBreakdown:
    """``S(rho) + S(E(rho)) - S(E, rho)`` through explicit matrices.

    ``method`` and ``tol`` are forwarded to the eigenvalue routine.
    """
    rho = as_density(rho)
    s_in = von_neumann_entropy(rho, method=method, tol=tol)
    s_out = von_neumann_entropy(apply_channel(ch, rho, validate=False), method=method, tol=tol)
    s_ex = von_neumann_entropy(exchange_matrix(ch, rho, validate=False), method=method, tol=tol)
    return MutualInfoBreakdown(s_in, s_out, s_ex, s_in + s_out - s_ex)


def _check_eta(eta: float) -> float:
    eta = float(eta)
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"eta must lie in [0, 1], got {eta}")
    return eta


def _two_level_entropy(radius: float) -> float:
    """Entropy of a qubit state with Bloch radius ``radius``."""
    return binary_entropy(0.5 * (1.0 - min(radius, 1.0)))


def mutual_information_ad_closed(eta: float, w) -> float:
    """Amplitude-damping mutual information from the eigenvalue closed forms.

    Input, output and exchange spectra are ``(1 +- r) / 2`` with radii
    ``|w|``, ``sqrt((eta + (1-eta) w3)^2 + (1-eta) t)`` and
    ``sqrt((1-eta + eta w3)^2 + eta t)``, where ``t = w1^2 + w2^2``.
    """
    eta = _check_eta(eta)
    w = BlochVector.of(w)
    t = w.w1 * w.w1 + w.w2 * w.w2
    r_in = w.norm()
    r_out = math.sqrt((eta + (1 - eta) * w.w3) ** 2 + (1 - eta) * t)
    r_ex = math.sqrt((1 - eta + eta * w.w3) ** 2 + eta * t)
    return _two_level_entropy(r_in) + _two_level_entropy(r_out) - _two_level_entropy(r_ex)


def i_center_closed(eta: float) -> float:
    """Mutual information at the maximally mixed input: 1 + H2((1+eta)/2) - H2(eta/2)."""
    eta = _check_eta(eta)
    return 1.0 + binary_entropy(0.5 * (1 + eta)) - binary_entropy(0.5 * eta)


def _axis_mi(eta: float, w3: float) -> float:
    return mutual_information_ad_closed(eta, BlochVector(0.0, 0.0, w3))


def grad_w3(eta: float, w3: float, cfg: OptimizerConfig = DEFAULT_CONFIG) -> float:
    """Central difference of the on-axis mutual information along ``w3``."""
    h = cfg.fd_step
    if abs(w3) >= 1 - h:
        raise ValueError(f"|w3| = {abs(w3)} too close to the ball boundary for step {h}")
    return (_axis_mi(eta, w3 + h) - _axis_mi(eta, w3 - h)) / (2 * h)


def optimize_w3(eta: float, cfg: OptimizerConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """Return ``(w3_opt, capacity)`` for amplitude damping.

    Bisects on the sign of ``dI/dw3``, which is decreasing because the
    mutual information is concave.
    """
    eta = _check_eta(eta)
    if eta == 0.0:
        return 0.0, 2.0
    if eta == 1.0:
        return 0.0, 0.0
    lo = -1 + 10 * cfg.fd_step
    hi = 1 - 10 * cfg.fd_step
    g_lo = grad_w3(eta, lo, cfg)
    g_hi = grad_w3(eta, hi, cfg)
    if not (g_lo > 0 > g_hi):
        raise ConvergenceError(
            f"dI/dw3 does not change sign on [{lo}, {hi}] for eta={eta} ({g_lo:.3e}, {g_hi:.3e})"
        )
    while hi - lo > cfg.tol_w3:
        mid = 0.5 * (lo + hi)
        g = grad_w3(eta, mid, cfg)
        if abs(g) <= cfg.tol_grad:
            lo = hi = mid
            break
        if g > 0:
            lo = mid
        else:
            hi = mid
    w3 = 0.5 * (lo + hi)
    return w3, _axis_mi(eta, w3)


def capacity_record(eta: float, cfg: OptimizerConfig = DEFAULT_CONFIG) -> CapacityRecord:
    eta = _check_eta(eta)
    w3, cap = optimize_w3(eta, cfg)
    center = i_center_closed(eta)
    return CapacityRecord(eta, w3, cap, center, cap - center)


def _batch_entropy(mats: np.ndarray) -> np.ndarray:
    lam = np.clip(np.linalg.eigvalsh(mats), 0.0, None)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(lam > 0, lam * np.log2(lam), 0.0)
    return -terms.sum(axis=-1)


def mutual_information_batch(ch: KrausChannel, ws: np.ndarray) -> np.ndarray:
    """Vectorized matrix-path mutual information for an ``(N, 3)`` array of Bloch vectors.

    Uses ``numpy.linalg.eigvalsh`` rather than this package's eigensolvers so
    that it can serve as an independent check.
    """
    ws = np.asarray(ws, dtype=float)
    n = ws.shape[0]
    rho = np.empty((n, 2, 2), dtype=complex)
    rho[:, 0, 0] = 0.5 * (1 + ws[:, 2])
    rho[:, 1, 1] = 0.5 * (1 - ws[:, 2])
    rho[:, 0, 1] = 0.5 * (ws[:, 0] - 1j * ws[:, 1])
    rho[:, 1, 0] = 0.5 * (ws[:, 0] + 1j * ws[:, 1])
    ks = np.stack(ch.kraus)
    out = np.einsum("kab,nbc,kdc->nad", ks, rho, ks.conj())
    omega = np.einsum("iab,nbc,jac->nij", ks, rho, ks.conj())
    return _batch_entropy(rho) + _batch_entropy(out) - _batch_entropy(omega)


def _refine(ch: KrausChannel, start: np.ndarray, step: float, min_step: float = 1e-7):
    """Coordinate ascent with step halving, confined to the Bloch ball."""
    w = start.copy()
    best = mutual_information(ch, bloch_to_density(w)).i
    while step >= min_step:
        improved = False
        for axis in range(3):
            for sign in (1.0, -1.0):
                trial = w.copy()
                trial[axis] += sign * step
                if np.linalg.norm(trial) > 1.0:
                    continue
                value = mutual_information(ch, bloch_to_density(trial)).i
                if value > best:
                    w, best, improved = trial, value, True
                    break
        if not improved:
            step *= 0.5
    return w, best


def capacity_grid_oracle(
    ch: KrausChannel, cfg: OptimizerConfig = DEFAULT_CONFIG, chunk: int = 200_000
) -> tuple[BlochVector, float]:
    """Brute-force ``max_rho I`` over a ``grid_n^3`` lattice in the Bloch ball, then refine.

    Ties go to the first lattice point in ``(w1, w2, w3)`` lexicographic
    order. Meant for validation, not accuracy.
    """
    axis = np.linspace(-1.0, 1.0, cfg.grid_n)
    g1, g2, g3 = np.meshgrid(axis, axis, axis, indexing="ij")
    pts = np.column_stack([g1.ravel(), g2.ravel(), g3.ravel()])
    pts = pts[np.einsum("ij,ij->i", pts, pts) <= 1.0 + BALL_TOL]
    best_val = -np.inf
    best_pt = pts[0]
    for start in range(0, len(pts), chunk):
        block = pts[start:start + chunk]
        vals = mutual_information_batch(ch, block)
        k = int(np.argmax(vals))
        if vals[k] > best_val:
            best_val, best_pt = float(vals[k]), block[k]
    spacing = 2.0 / (cfg.grid_n - 1) if cfg.grid_n > 1 else 1.0
    # lattice points with |w| = 1 + tiny roundoff are pulled back inside
    norm = np.linalg.norm(best_pt)
    if norm > 1.0:
        best_pt = best_pt / norm
    w, value = _refine(ch, best_pt, spacing)
    return BlochVector(*w), value


def amplitude_damping_oracle(eta: float, cfg: OptimizerConfig = DEFAULT_CONFIG):
    return capacity_grid_oracle(make_amplitude_damping(eta), cfg)
