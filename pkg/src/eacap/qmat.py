"""Small dense Hermitian matrices: Bloch parameterization, eigenvalues, entropies.

Matrices are plain ``numpy`` complex arrays of shape ``(d, d)`` with ``d`` in
2..4. All entropies are in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12
BALL_TOL = 1e-12
ENTROPY_TRACE_TOL = 1e-10
ENTROPY_EIG_TOL = 1e-10
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class ConvergenceError(RuntimeError):
    """An iterative numerical routine failed to converge."""


@dataclass(frozen=True)
class BlochVector:
    w1: float
    w2: float
    w3: float

    def __post_init__(self):
        for name in ("w1", "w2", "w3"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"Bloch component {name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if self.norm() > 1 + BALL_TOL:
            raise ValueError(f"|w| = {self.norm():.15g} > 1: not a physical qubit state")

    @classmethod
    def of(cls, w) -> "BlochVector":
        if isinstance(w, BlochVector):
            return w
        w1, w2, w3 = w
        return cls(w1, w2, w3)

    def norm(self) -> float:
        return math.sqrt(self.w1 * self.w1 + self.w2 * self.w2 + self.w3 * self.w3)

    def as_array(self) -> np.ndarray:
        return np.array([self.w1, self.w2, self.w3])


def as_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Return ``m`` as a complex array after checking it is a small Hermitian matrix."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in (2, 3, 4):
        raise ValueError(f"expected a 2x2, 3x3 or 4x4 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    if np.max(np.abs(a - a.conj().T)) > tol:
        raise ValueError("matrix is not Hermitian")
    return a


def as_density(rho, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Check that ``rho`` is a qubit density matrix (Hermitian, unit trace, PSD)."""
    a = as_hermitian(rho, tol)
    if a.shape != (2, 2):
        raise ValueError("a qubit density matrix must be 2x2")
    if abs(np.trace(a) - 1) > tol:
        raise ValueError(f"trace {np.trace(a).real:.15g} != 1")
    if eig2(a)[1] < -tol:
        raise ValueError("density matrix has a negative eigenvalue")
    return a


def bloch_to_density(w) -> np.ndarray:
    """Map a Bloch vector to ``(I + w.sigma) / 2``."""
    w = BlochVector.of(w)
    return 0.5 * np.array(
        [[1 + w.w3, w.w1 - 1j * w.w2], [w.w1 + 1j * w.w2, 1 - w.w3]],
        dtype=complex,
    )


def density_to_bloch(rho) -> BlochVector:
    rho = as_density(rho)
    w1 = 2 * rho[1, 0].real
    w2 = 2 * rho[1, 0].imag
    w3 = (rho[0, 0] - rho[1, 1]).real
    return BlochVector(w1, w2, w3)


def eig2(m) -> tuple[float, float]:
    """Eigenvalues of a 2x2 Hermitian matrix in descending order (closed form)."""
    a = m[0][0].real
    d = m[1][1].real
    b = m[0][1]
    half_trace = 0.5 * (a + d)
    radius = math.hypot(0.5 * (a - d), abs(b))
    return half_trace + radius, half_trace - radius


def _off_diagonal_mass(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def eig_jacobi(m, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> tuple[float, ...]:
    """Eigenvalues of a small Hermitian matrix by cyclic complex Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius mass drops below ``tol``
    (scaled by the matrix norm when that exceeds one). Raises
    :class:`ConvergenceError` after ``max_sweeps`` sweeps.
    """
    a = as_hermitian(m).copy()
    n = a.shape[0]
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    for _ in range(max_sweeps):
        if _off_diagonal_mass(a) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                # phase P makes the pivot real, then a real plane rotation zeroes it
                phase = apq / mag
                theta = 0.5 * math.atan2(2 * mag, (a[q, q] - a[p, p]).real)
                c, s = math.cos(theta), math.sin(theta)
                j = np.eye(n, dtype=complex)
                j[p, p] = c
                j[p, q] = s
                j[q, p] = -s * phase.conjugate()
                j[q, q] = c * phase.conjugate()
                a = j.conj().T @ a @ j
                a[p, q] = a[q, p] = 0.0
    else:
        if _off_diagonal_mass(a) >= threshold:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
    return tuple(sorted(np.diag(a).real.tolist(), reverse=True))


def eigvals(m, method: str = "auto", tol: float = JACOBI_TOL) -> tuple[float, ...]:
    """Dispatch to :func:`eig2` (2x2, ``auto``/``closed``) or :func:`eig_jacobi`."""
    if method not in ("auto", "closed", "jacobi"):
        raise ValueError(f"unknown eigenvalue method {method!r}")
    a = np.asarray(m)
    if method != "jacobi" and a.shape == (2, 2):
        return eig2(a)
    if method == "closed":
        raise ValueError("closed-form eigenvalues only exist here for 2x2 matrices")
    return eig_jacobi(a, tol=tol)


def _xlog2x(x: float) -> float:
    return x * math.log2(x) if x > 0.0 else 0.0


def binary_entropy(p: float) -> float:
    """H2(p) in bits, with 0 log 0 = 0."""
    if not (-BALL_TOL <= p <= 1 + BALL_TOL):
        raise ValueError(f"probability {p} outside [0, 1]")
    p = min(max(p, 0.0), 1.0)
    return -_xlog2x(p) - _xlog2x(1.0 - p)


def entropy_of_spectrum(eigenvalues) -> float:
    total = 0.0
    for lam in eigenvalues:
        if lam < -ENTROPY_EIG_TOL:
            raise ValueError(f"eigenvalue {lam:.3e} is negative")
        total -= _xlog2x(max(lam, 0.0))
    return total


def von_neumann_entropy(m, method: str = "auto", tol: float = JACOBI_TOL) -> float:
    """-tr(m log2 m) for a unit-trace positive semidefinite Hermitian matrix."""
    a = as_hermitian(m)
    trace = np.trace(a).real
    if abs(trace - 1) > ENTROPY_TRACE_TOL:
        raise ValueError(f"trace {trace:.15g} != 1")
    return entropy_of_spectrum(eigvals(a, method=method, tol=tol))
