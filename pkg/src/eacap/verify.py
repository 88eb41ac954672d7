"""Self-check suite behind ``eacap verify``.

Each group returns a :class:`GroupResult`; a group that raises counts as a
failure. ``eig_tol`` is forwarded to the Jacobi solver so that a loosened
eigensolver can be shown to break path equivalence.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .capacity import (
    DEFAULT_CONFIG,
    capacity_record,
    i_center_closed,
    mutual_information,
    mutual_information_ad_closed,
    optimize_w3,
)
from .channel import (
    KrausChannel,
    completeness_residual,
    exchange_matrix,
    make_amplitude_damping,
    make_depolarizing,
    mix_kraus,
)
from .qmat import JACOBI_TOL, bloch_to_density, eig2, eig_jacobi
from .reference import REFERENCE_ROWS, SPOT_ETAS

SEED = 20240601


@dataclass
class GroupResult:
    name: str
    passed: bool
    detail: str

    def __post_init__(self):
        self.passed = bool(self.passed)


def random_ball(rng: np.random.Generator, n: int) -> np.ndarray:
    """``n`` points uniform in the closed unit ball."""
    d = rng.normal(size=(n, 3))
    d /= np.linalg.norm(d, axis=1, keepdims=True)
    return d * rng.random((n, 1)) ** (1 / 3)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (z + z.conj().T)


def _mi(ch, w, **kw) -> float:
    return mutual_information(ch, bloch_to_density(w), **kw).i


def check_path_equivalence(rng, n=10_000, n_jacobi=1000, eig_tol=JACOBI_TOL) -> GroupResult:
    etas = rng.random(n)
    ws = random_ball(rng, n)
    worst = 0.0
    for eta, w in zip(etas, ws):
        ch = make_amplitude_damping(eta)
        worst = max(worst, abs(_mi(ch, w) - mutual_information_ad_closed(eta, w)))
    # redundant 4-operator representation forces the 4x4 Jacobi route
    worst_j = 0.0
    for eta, w in zip(etas[:n_jacobi], ws[:n_jacobi]):
        ch = mix_kraus(make_amplitude_damping(eta), random_unitary(rng, 4)[:, :2])
        value = _mi(ch, w, method="jacobi", tol=eig_tol)
        worst_j = max(worst_j, abs(value - mutual_information_ad_closed(eta, w)))
    ok = worst <= 1e-12 and worst_j <= 1e-12
    return GroupResult("path equivalence", ok, f"max diff {worst:.2e} (eig2), {worst_j:.2e} (jacobi 4x4)")


def check_partial_symmetry(rng, n=1000) -> GroupResult:
    worst_closed = 0.0
    worst_matrix = 0.0
    for eta, (w1, w2, w3) in zip(rng.random(n), random_ball(rng, n)):
        ch = make_amplitude_damping(eta)
        base_c = mutual_information_ad_closed(eta, (w1, w2, w3))
        base_m = _mi(ch, (w1, w2, w3))
        for flipped in ((-w1, w2, w3), (w1, -w2, w3)):
            worst_closed = max(worst_closed, abs(mutual_information_ad_closed(eta, flipped) - base_c))
            worst_matrix = max(worst_matrix, abs(_mi(ch, flipped) - base_m))
    ok = worst_closed == 0.0 and worst_matrix <= 1e-12
    return GroupResult("partial symmetry", ok, f"closed {worst_closed:.2e}, matrix {worst_matrix:.2e}")


def check_axial_symmetry(rng, n=1000) -> GroupResult:
    worst = 0.0
    for eta, (w1, w2, w3), phi in zip(rng.random(n), random_ball(rng, n), rng.uniform(0, 2 * math.pi, n)):
        c, s = math.cos(phi), math.sin(phi)
        turned = (c * w1 - s * w2, s * w1 + c * w2, w3)
        ch = make_amplitude_damping(eta)
        worst = max(
            worst,
            abs(mutual_information_ad_closed(eta, turned) - mutual_information_ad_closed(eta, (w1, w2, w3))),
            abs(_mi(ch, turned) - _mi(ch, (w1, w2, w3))),
        )
    return GroupResult("axial symmetry", worst <= 1e-12, f"max diff {worst:.2e}")


def check_concavity(rng, n=1000) -> GroupResult:
    worst = math.inf
    for eta, wa, wb, t in zip(rng.random(n), random_ball(rng, n), random_ball(rng, n), rng.random(n)):
        ch = make_amplitude_damping(eta)
        mixed = t * wa + (1 - t) * wb
        slack = _mi(ch, mixed) - (t * _mi(ch, wa) + (1 - t) * _mi(ch, wb))
        worst = min(worst, slack)
    return GroupResult("concavity chords", worst >= -1e-10, f"min slack {worst:.2e}")


def check_exchange_matrix(rng, n=1000) -> GroupResult:
    herm = trace = 0.0
    min_eig = math.inf
    for eta, w in zip(rng.random(n), random_ball(rng, n)):
        omega = exchange_matrix(make_amplitude_damping(eta), bloch_to_density(w))
        herm = max(herm, float(np.max(np.abs(omega - omega.conj().T))))
        trace = max(trace, abs(np.trace(omega) - 1))
        min_eig = min(min_eig, eig2(omega)[1])
    ok = herm <= 1e-12 and trace <= 1e-12 and min_eig >= -1e-10
    return GroupResult(
        "exchange matrix", ok, f"hermitian {herm:.2e}, trace {trace:.2e}, min eig {min_eig:.2e}"
    )


def check_completeness() -> GroupResult:
    grid = np.linspace(0, 1, 101)
    worst = max(
        max(completeness_residual(make_amplitude_damping(x)) for x in grid),
        max(completeness_residual(make_depolarizing(x)) for x in grid),
    )
    ad = make_amplitude_damping(0.3)
    broken = KrausChannel("broken", (ad.kraus[0], 1.01 * ad.kraus[1]), check=False)
    detected = completeness_residual(broken)
    ok = worst <= 1e-15 and detected >= 1e-3
    return GroupResult("kraus completeness", ok, f"max residual {worst:.2e}, broken set {detected:.2e}")


def check_eigensolvers(rng, n=1000, eig_tol=JACOBI_TOL) -> GroupResult:
    worst_pair = 0.0
    worst_trace = 0.0
    for _ in range(n):
        m = random_hermitian(rng, 2)
        closed = eig2(m)
        jac = eig_jacobi(m, tol=eig_tol)
        worst_pair = max(worst_pair, max(abs(a - b) for a, b in zip(closed, jac)))
        worst_trace = max(worst_trace, abs(sum(closed) - np.trace(m).real))
    for dim in (2, 3, 4):
        for _ in range(n // 10):
            m = random_hermitian(rng, dim)
            worst_trace = max(worst_trace, abs(sum(eig_jacobi(m, tol=eig_tol)) - np.trace(m).real))
    ok = worst_pair <= 1e-12 and worst_trace <= 1e-12
    return GroupResult("eigensolver agreement", ok, f"eig2 vs jacobi {worst_pair:.2e}, trace {worst_trace:.2e}")


def check_endpoints() -> GroupResult:
    c0 = optimize_w3(0.0)[1]
    c1 = optimize_w3(1.0)[1]
    m0 = _mi(make_amplitude_damping(0.0), (0, 0, 0))
    ok = abs(c0 - 2) <= 1e-9 and abs(c1) <= 1e-9 and abs(m0 - 2) <= 1e-9
    return GroupResult("endpoints", ok, f"C(0)={c0:.12f}, C(1)={c1:.12f}, I(AD(0), 0)={m0:.12f}")


def check_reference_rows() -> GroupResult:
    rows = {round(r[0], 2): r for r in REFERENCE_ROWS}
    max_c = max_w = max_i = 0.0
    for eta in SPOT_ETAS:
        _, w3_ref, c_ref, i_ref, _ = rows[eta]
        rec = capacity_record(eta, DEFAULT_CONFIG)
        max_c = max(max_c, abs(rec.capacity - c_ref))
        max_w = max(max_w, abs(rec.w3_opt - w3_ref))
        max_i = max(max_i, abs(i_center_closed(eta) - i_ref))
    ok = max_c <= 1e-6 and max_i <= 1e-6 and max_w <= 1e-4
    return GroupResult(
        "reference rows",
        ok,
        f"max |C - C_table| {max_c:.2e}, max |I0 - I0_table| {max_i:.2e}, max |w3 - w3_table| {max_w:.2e}",
    )


def run_verification(eig_tol: float = JACOBI_TOL, seed: int = SEED) -> list[GroupResult]:
    rng = np.random.default_rng(seed)
    checks = [
        ("path equivalence", lambda: check_path_equivalence(rng, eig_tol=eig_tol)),
        ("partial symmetry", lambda: check_partial_symmetry(rng)),
        ("axial symmetry", lambda: check_axial_symmetry(rng)),
        ("concavity chords", lambda: check_concavity(rng)),
        ("exchange matrix", lambda: check_exchange_matrix(rng)),
        ("kraus completeness", check_completeness),
        ("eigensolver agreement", lambda: check_eigensolvers(rng, eig_tol=eig_tol)),
        ("endpoints", check_endpoints),
        ("reference rows", check_reference_rows),
    ]
    results = []
    for name, check in checks:
        start = time.perf_counter()
        try:
            res = check()
        except Exception as exc:  # a crashing group is a failing group
            res = GroupResult(name, False, f"raised {type(exc).__name__}: {exc}")
        res.detail += f" [{time.perf_counter() - start:.2f}s]"
        results.append(res)
    return results
