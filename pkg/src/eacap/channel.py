"""Qubit channels in Kraus form and the entropy-exchange matrix."""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass, field

import numpy as np

from .qmat import SIGMA_X, SIGMA_Y, SIGMA_Z, as_density

COMPLETENESS_TOL = 1e-12


@dataclass(frozen=True)
class KrausChannel:
    """A qubit channel ``rho -> sum_i E_i rho E_i^dagger``.

    Zero operators are kept, so the exchange matrix always has one row per
    listed operator. Pass ``check=False`` to build a deliberately broken set.
    """

    name: str
    kraus: tuple
    params: dict = field(default_factory=dict)
    check: InitVar[bool] = True

    def __post_init__(self, check):
        ops = tuple(np.array(e, dtype=complex) for e in self.kraus)
        if not 1 <= len(ops) <= 4:
            raise ValueError(f"need 1 to 4 Kraus operators, got {len(ops)}")
        for e in ops:
            if e.shape != (2, 2):
                raise ValueError(f"Kraus operators must be 2x2, got {e.shape}")
            e.setflags(write=False)
        object.__setattr__(self, "kraus", ops)
        object.__setattr__(self, "params", dict(self.params))
        if check:
            residual = completeness_residual(self)
            if residual > COMPLETENESS_TOL:
                raise ValueError(f"Kraus operators are not complete (residual {residual:.3e})")

    def __len__(self):
        return len(self.kraus)


def completeness_residual(ch: KrausChannel) -> float:
    """Largest entry of ``|sum_i E_i^dagger E_i - I|``."""
    total = sum(e.conj().T @ e for e in ch.kraus)
    return float(np.max(np.abs(total - np.eye(2))))


def _check_unit_interval(value: float, name: str) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")
    return value


def make_amplitude_damping(eta: float) -> KrausChannel:
    """Amplitude damping with decay probability ``eta``."""
    eta = _check_unit_interval(eta, "eta")
    e0 = np.array([[1, 0], [0, math.sqrt(1 - eta)]], dtype=complex)
    e1 = np.array([[0, math.sqrt(eta)], [0, 0]], dtype=complex)
    return KrausChannel("amplitude_damping", (e0, e1), {"eta": eta})


def make_depolarizing(p: float) -> KrausChannel:
    p = _check_unit_interval(p, "p")
    weights = (1 - 0.75 * p, 0.25 * p, 0.25 * p, 0.25 * p)
    paulis = (np.eye(2, dtype=complex), SIGMA_X, SIGMA_Y, SIGMA_Z)
    ops = tuple(math.sqrt(w) * s for w, s in zip(weights, paulis))
    return KrausChannel("depolarizing", ops, {"p": p})


def mix_kraus(ch: KrausChannel, u) -> KrausChannel:
    """Return the equivalent Kraus set ``F_i = sum_j u_ij E_j`` for a unitary ``u``.

    ``u`` may be ``m x k`` with orthonormal columns (``m >= k``), which pads
    the set with redundant operators.
    """
    u = np.asarray(u, dtype=complex)
    k = len(ch.kraus)
    if u.ndim != 2 or u.shape[1] != k or u.shape[0] < k:
        raise ValueError(f"mixing matrix must be m x {k} with m >= {k}")
    stacked = np.stack(ch.kraus)
    mixed = np.einsum("ij,jab->iab", u, stacked)
    return KrausChannel(ch.name, tuple(mixed), ch.params)


def apply_channel(ch: KrausChannel, rho, validate: bool = True) -> np.ndarray:
    rho = as_density(rho) if validate else np.asarray(rho, dtype=complex)
    return sum(e @ rho @ e.conj().T for e in ch.kraus)


def exchange_matrix(ch: KrausChannel, rho, validate: bool = True) -> np.ndarray:
    """Entropy-exchange matrix ``W[i, j] = tr(E_i rho E_j^dagger)``.

    Built from the trace formula, so it is Hermitian by construction; the
    amplitude-damping case has ``W[1, 0] = sqrt(eta) (w1 + i w2) / 2``.
    """
    rho = as_density(rho) if validate else np.asarray(rho, dtype=complex)
    stacked = np.stack(ch.kraus)
    # tr(E_i rho E_j^dagger) = sum_{a,b,c} E_i[a,b] rho[b,c] conj(E_j[a,c])
    return np.einsum("iab,bc,jac->ij", stacked, rho, stacked.conj())
