"""Named verification checks behind the ``verify`` subcommand.

Each check re-derives one headline guarantee numerically and returns a
pass/fail with a short detail string.  All randomness is seeded, so
repeated runs produce identical output.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .closed_form import (
    expected_grover_phase,
    grover_decomposition,
    kn_extrema,
    kn_minus_extrema,
    kn_minus_propagator_entry,
    kn_propagator_entry,
    phase_matches,
)
from .evolution import fidelity_curve, full_space_propagator_oracle, propagator
from .graphs import Graph, complete_graph, complete_minus_matching, laplacian, xyz_hamiltonian
from .linalg import matrix_exponential_series, symmetric_eigendecomposition
from .pst import verify_matching_pst
from .routing import RoutingSchedule, simulate_route, tour_op_count

__all__ = ["CheckResult", "run_all", "CHECK_NAMES"]

_SEED = 20230817


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _random_graph(rng: np.random.Generator, n: int) -> Graph:
    pairs = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < 0.5
    ]
    return Graph(n, tuple(pairs))


def _check_laplacian_identity(rng: np.random.Generator, n_max: int) -> CheckResult:
    top = min(12, n_max)
    worst = 0
    for _ in range(200):
        g = _random_graph(rng, int(rng.integers(1, top + 1)))
        h = xyz_hamiltonian(g)
        ident = g.m * np.eye(g.n, dtype=np.int64) - 2 * laplacian(g)
        worst = max(worst, int(np.max(np.abs(h - ident))))
    return CheckResult(
        "laplacian-identity",
        worst == 0,
        f"max integer deviation {worst} over 200 random graphs",
    )


def _check_spectral_correspondence(rng: np.random.Generator, n_max: int) -> CheckResult:
    top = min(12, n_max)
    worst = 0.0
    for _ in range(200):
        g = _random_graph(rng, int(rng.integers(1, top + 1)))
        lam = symmetric_eigendecomposition(xyz_hamiltonian(g)).values
        mu = symmetric_eigendecomposition(laplacian(g)).values
        mapped = np.sort(g.m - 2.0 * mu)
        worst = max(worst, float(np.max(np.abs(np.sort(lam) - mapped))))
    return CheckResult(
        "spectral-correspondence",
        worst <= 1e-9,
        f"max eigenvalue deviation {worst:.2e}",
    )


def _check_complete_graph_extrema(n_max: int) -> CheckResult:
    worst = 0.0
    excess = 0.0
    for n in range(3, n_max + 1):
        h = xyz_hamiltonian(complete_graph(n))
        mags = np.abs(propagator(h, math.pi / (2 * n)).u)
        offmask = ~np.eye(n, dtype=bool)
        worst = max(worst, float(np.max(np.abs(np.diag(mags) - (1 - 2 / n)))))
        worst = max(worst, float(np.max(np.abs(mags[offmask] - 2 / n))))
        curve = fidelity_curve(h, 1, 2, 2 * math.pi, 10**4)
        excess = max(excess, float(np.max(curve.fidelities)) - 2 / n)
    passed = worst <= 1e-9 and excess <= 1e-9
    return CheckResult(
        "complete-graph-extrema",
        passed,
        f"entry deviation {worst:.2e}, scan excess over 2/n {excess:.2e}",
    )


def _check_single_deletion_pst(n_max: int) -> CheckResult:
    worst = 0.0
    for n in (4, 8, 12, 16):
        if n > n_max:
            break
        h = xyz_hamiltonian(complete_minus_matching(n, [(1, n)]))
        for k in (0, 1, 2):
            t = math.pi / 4 + k * math.pi / 2
            u = propagator(h, t).u
            worst = max(worst, 1.0 - float(np.abs(u[n - 1, 0])))
        u4 = propagator(h, math.pi / 4).u
        worst = max(worst, float(np.abs(u4[0, 0])))
        u_gen = propagator(h, math.pi / (2 * n)).u
        worst = max(worst, abs(float(np.abs(u_gen[1, 1])) - (1 - 2 / n)))
        worst = max(worst, abs(float(np.abs(u_gen[2, 1])) - 2 / n))
    return CheckResult(
        "single-deletion-pst",
        worst <= 1e-9,
        f"max deviation from predicted extrema {worst:.2e}",
    )


def _check_negative_control(n_max: int) -> CheckResult:
    peak = 0.0
    for n in (5, 6, 7, 9, 10, 11):
        if n > n_max:
            break
        h = xyz_hamiltonian(complete_minus_matching(n, [(1, n)]))
        curve = fidelity_curve(h, 1, n, 4 * math.pi, 10**4)
        peak = max(peak, float(np.max(curve.fidelities)))
    return CheckResult(
        "no-pst-off-multiples-of-four",
        peak < 1 - 1e-3,
        f"max transfer fidelity {peak:.6f} (must stay below 0.999)",
    )


def _check_grover(n_max: int) -> CheckResult:
    worst_resid = 0.0
    notes = []
    for n in range(3, n_max + 1):
        t = math.pi / (2 * n)
        u = propagator(xyz_hamiltonian(complete_graph(n)), t).u
        report = grover_decomposition(u, t=t)
        worst_resid = max(worst_resid, report.residual)
        verdict = phase_matches(report.phase, expected_grover_phase(n))
        if verdict != "equal":
            notes.append(f"n={n}:{verdict}")
    c4 = grover_decomposition(propagator(xyz_hamiltonian(complete_graph(4)), math.pi / 8).u).phase
    c5 = grover_decomposition(propagator(xyz_hamiltonian(complete_graph(5)), math.pi / 10).u).phase
    pinned = abs(c5 - 1.0) <= 1e-9 and abs(c4 - cmath.exp(1j * math.pi / 4)) <= 1e-9
    passed = worst_resid <= 1e-9 and pinned and not notes
    detail = f"max residual {worst_resid:.2e}"
    if notes:
        detail += "; phase mismatches: " + ",".join(notes)
    return CheckResult("grover-equivalence", passed, detail)


def _check_matching_pst(n_max: int) -> CheckResult:
    if n_max < 8:
        return CheckResult("matching-pst", True, "skipped: needs n_max >= 8")
    worst = 0.0
    for matching in ([(1, 8)], [(1, 8), (3, 6)], [(1, 8), (2, 7), (3, 6), (4, 5)]):
        for _, f in verify_matching_pst(8, matching):
            worst = max(worst, 1.0 - f)
    return CheckResult(
        "matching-pst",
        worst <= 1e-9,
        f"max transfer shortfall {worst:.2e} across three matchings",
    )


def _check_propagator_agreement(rng: np.random.Generator, n_max: int) -> CheckResult:
    worst = 0.0
    for n in range(3, min(12, n_max) + 1):
        h_kn = xyz_hamiltonian(complete_graph(n))
        h_km = xyz_hamiltonian(complete_minus_matching(n, [(1, n)]))
        ts = rng.uniform(0.0, 2 * math.pi, size=50)
        for t in ts:
            u_spec = propagator(h_kn, t).u
            u_ser = matrix_exponential_series(h_kn, t)
            closed = np.array(
                [[kn_propagator_entry(n, t, i, j) for i in range(1, n + 1)] for j in range(1, n + 1)]
            )
            worst = max(worst, float(np.max(np.abs(u_spec - u_ser))))
            worst = max(worst, float(np.max(np.abs(u_spec - closed))))
            um_spec = propagator(h_km, t).u
            um_ser = matrix_exponential_series(h_km, t)
            m_closed = np.array(
                [
                    [kn_minus_propagator_entry(n, t, i, j) for i in range(1, n + 1)]
                    for j in range(1, n + 1)
                ]
            )
            worst = max(worst, float(np.max(np.abs(um_spec - um_ser))))
            worst = max(worst, float(np.max(np.abs(um_spec - m_closed))))
    full_worst = 0.0
    for n in range(2, min(6, n_max) + 1):
        for _ in range(3):
            g = _random_graph(rng, n)
            t = float(rng.uniform(0.0, 2 * math.pi))
            block = full_space_propagator_oracle(g, t)
            u = propagator(xyz_hamiltonian(g), t).u
            full_worst = max(full_worst, float(np.max(np.abs(block - u))))
    passed = worst <= 1e-8 and full_worst <= 1e-8
    return CheckResult(
        "propagator-agreement",
        passed,
        f"four-way deviation {worst:.2e}, full-space deviation {full_worst:.2e}",
    )


def _check_routing(n_max: int) -> CheckResult:
    worst = 0.0
    ops_ok = True
    for n, path in ((4, (1, 3, 2, 4)), (8, (1, 5, 2, 7))):
        if n > n_max:
            break
        hops = tuple(zip(path, path[1:]))
        report = simulate_route(RoutingSchedule(n=n, hops=hops), path[0])
        worst = max(worst, max(1.0 - f for f in report.hop_fidelities))
        for state in report.state_trace:
            worst = max(worst, abs(float(np.linalg.norm(state)) - 1.0))
        ops_ok = ops_ok and report.switch_ops == 6
        tour = tour_op_count(n)
        ops_ok = ops_ok and tour.counted_ops == 2 * (n - 1)
        ops_ok = ops_ok and tour.quoted_ops == 2 * n - 1 and tour.discrepancy
    return CheckResult(
        "routing",
        worst <= 1e-9 and ops_ok,
        f"max hop/norm deviation {worst:.2e}, op counts {'ok' if ops_ok else 'WRONG'}",
    )


def _check_unitarity(rng: np.random.Generator, n_max: int) -> CheckResult:
    top = min(12, n_max)
    worst = 0.0
    for _ in range(100):
        g = _random_graph(rng, int(rng.integers(2, top + 1)))
        t = float(rng.uniform(0.0, 2 * math.pi))
        u = propagator(xyz_hamiltonian(g), t).u
        worst = max(worst, float(np.max(np.abs(u.conj().T @ u - np.eye(g.n)))))
    return CheckResult(
        "unitarity",
        worst <= 1e-9,
        f"max unitarity defect {worst:.2e} over 100 random propagators",
    )


CHECK_NAMES = [
    "laplacian-identity",
    "spectral-correspondence",
    "complete-graph-extrema",
    "single-deletion-pst",
    "no-pst-off-multiples-of-four",
    "grover-equivalence",
    "matching-pst",
    "propagator-agreement",
    "routing",
    "unitarity",
]


def run_all(n_max: int = 16) -> list[CheckResult]:
    """Run every check up to order n_max (n_max >= 4)."""
    if n_max < 4:
        raise ValueError(f"n_max must be at least 4, got {n_max}")
    rng = np.random.default_rng(_SEED)
    return [
        _check_laplacian_identity(rng, n_max),
        _check_spectral_correspondence(rng, n_max),
        _check_complete_graph_extrema(n_max),
        _check_single_deletion_pst(n_max),
        _check_negative_control(n_max),
        _check_grover(n_max),
        _check_matching_pst(n_max),
        _check_propagator_agreement(rng, n_max),
        _check_routing(n_max),
        _check_unitarity(rng, n_max),
    ]
