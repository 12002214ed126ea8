"""Closed-form propagator entries and extremal fidelities for all-to-all networks.

For the complete graph on n vertices the coupling matrix has eigenvalue
n(n-1)/2 on the uniform vector and n(n-5)/2 on its orthogonal complement,
so every propagator entry is a two-phase expression.  Deleting the edge
{1, n} splits off one more eigenvalue and yields four entry cases.  These
evaluators are exact for every n >= 3; only the extremal and transfer
claims need n divisible by four.

At half-period times the complete-graph propagator collapses to a unit
phase times the reflection-about-the-mean operator I - (2/n)J familiar
from quantum search; grover_decomposition measures how close an arbitrary
unitary is to that form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidVertex, TrivialCase, UnsupportedOrder

__all__ = [
    "TimeFamily",
    "ExtremalReport",
    "GroverReport",
    "kn_propagator_entry",
    "kn_minus_propagator_entry",
    "kn_extrema",
    "kn_minus_extrema",
    "grover_target",
    "grover_decomposition",
    "expected_grover_phase",
    "phase_matches",
]


@dataclass(frozen=True)
class TimeFamily:
    """Arithmetic progression of times: offset + period * k for k >= 0."""

    offset: float
    period: float

    def __post_init__(self) -> None:
        if not self.period > 0:
            raise ValueError(f"period must be positive, got {self.period}")

    def times(self, count: int) -> np.ndarray:
        return self.offset + self.period * np.arange(count, dtype=np.float64)


@dataclass(frozen=True)
class ExtremalReport:
    """Extremal fidelity values of one entry class, with their time families.

    ``case`` is one of diag_special, diag_generic, offdiag_special,
    offdiag_generic; "special" means a vertex incident to the deleted edge
    (the pair {1, n}).  Complete graphs have only generic cases.
    """

    graph_family: str  # "K_n" or "K_n_minus"
    n: int
    case: str
    min_value: float
    min_times: TimeFamily
    max_value: float
    max_times: TimeFamily

    def __post_init__(self) -> None:
        if not 0.0 <= self.min_value <= self.max_value <= 1.0:
            raise ValueError(
                f"need 0 <= min <= max <= 1, got ({self.min_value}, {self.max_value})"
            )


@dataclass(frozen=True)
class GroverReport:
    """Best unit-phase fit of a unitary to the reflection I - (2/n)J."""

    n: int
    t: float
    phase: complex
    residual: float


def _check_vertex(label: int, n: int) -> int:
    if not (1 <= label <= n):
        raise InvalidVertex(f"vertex {label} outside 1..{n}")
    return int(label)


def kn_propagator_entry(n: int, t: float, i: int, j: int) -> complex:
    """Entry (j, i) of the complete-graph propagator at time t.

    Diagonal: e1/n + (n-1)*e2/n; off-diagonal: (e1 - e2)/n, where
    e1 = exp(-i*t*n(n-1)/2) and e2 = exp(-i*t*n(n-5)/2).
    """
    if n < 1:
        raise InvalidVertex(f"need n >= 1, got {n}")
    i = _check_vertex(i, n)
    j = _check_vertex(j, n)
    lam1 = n * (n - 1) // 2
    lam2 = n * (n - 5) // 2
    e1 = cmath.exp(-1j * lam1 * t)
    e2 = cmath.exp(-1j * lam2 * t)
    if i == j:
        return e1 / n + (n - 1) * e2 / n
    return (e1 - e2) / n


def kn_minus_propagator_entry(n: int, t: float, i: int, j: int) -> complex:
    """Entry (j, i) of the propagator for the complete graph minus edge {1, n}.

    Eigenvalues: lam1 = n(n-1)/2 - 1 (uniform vector), lam2 = n(n-1)/2 - 2n + 3
    (the vector e_1 - e_n), lam3 = n(n-5)/2 - 1 (multiplicity n - 2).  Other
    single deletions are handled upstream by relabeling; the complete graph is
    vertex-transitive, so this loses no generality.
    """
    if n < 3:
        raise InvalidVertex(f"need n >= 3, got {n}")
    i = _check_vertex(i, n)
    j = _check_vertex(j, n)
    lam1 = n * (n - 1) // 2 - 1
    lam2 = n * (n - 1) // 2 - 2 * n + 3
    lam3 = n * (n - 5) // 2 - 1
    e1 = cmath.exp(-1j * lam1 * t)
    e2 = cmath.exp(-1j * lam2 * t)
    e3 = cmath.exp(-1j * lam3 * t)
    special = {1, n}
    if i == j:
        if i in special:
            return (e1 + (n / 2) * e2 + (n / 2 - 1) * e3) / n
        return (e1 + (n - 1) * e3) / n
    if {i, j} == special:
        return (e1 - (n / 2) * e2 + (n / 2 - 1) * e3) / n
    return (e1 - e3) / n


def kn_extrema(n: int) -> list[ExtremalReport]:
    """Extremal fidelities of the complete graph: diagonal and off-diagonal.

    Return fidelity f(i, i, t) oscillates between 1 - 2/n (at t = pi/(2n) +
    k*pi/n) and 1 (at t = k*pi/n); transfer fidelity f(i, j, t) between 0
    and 2/n on the swapped time families.  So the complete graph never
    admits perfect transfer for n >= 3.
    """
    if n < 3:
        raise TrivialCase(f"extremal analysis needs n >= 3, got {n}")
    period = math.pi / n
    half = math.pi / (2 * n)
    diag = ExtremalReport(
        graph_family="K_n",
        n=n,
        case="diag_generic",
        min_value=1.0 - 2.0 / n,
        min_times=TimeFamily(offset=half, period=period),
        max_value=1.0,
        max_times=TimeFamily(offset=period, period=period),
    )
    offdiag = ExtremalReport(
        graph_family="K_n",
        n=n,
        case="offdiag_generic",
        min_value=0.0,
        min_times=TimeFamily(offset=period, period=period),
        max_value=2.0 / n,
        max_times=TimeFamily(offset=half, period=period),
    )
    return [diag, offdiag]


def kn_minus_extrema(n: int) -> list[ExtremalReport]:
    """Extremal fidelities for the complete graph minus edge {1, n}.

    Requires n divisible by 4: only then do the three phases align so that
    the endpoints of the deleted edge reach transfer fidelity 1 (at
    t = pi/4 + k*pi/2) and return fidelity 0.  Vertices away from the
    deleted edge behave like the complete graph.
    """
    if n < 4 or n % 4 != 0:
        raise UnsupportedOrder(f"need n divisible by 4, got {n}")
    quarter = math.pi / 4
    half_pi = math.pi / 2
    period = math.pi / n
    half = math.pi / (2 * n)
    diag_special = ExtremalReport(
        graph_family="K_n_minus",
        n=n,
        case="diag_special",
        min_value=0.0,
        min_times=TimeFamily(offset=quarter, period=half_pi),
        max_value=1.0,
        max_times=TimeFamily(offset=half_pi, period=half_pi),
    )
    diag_generic = ExtremalReport(
        graph_family="K_n_minus",
        n=n,
        case="diag_generic",
        min_value=1.0 - 2.0 / n,
        min_times=TimeFamily(offset=half, period=period),
        max_value=1.0,
        max_times=TimeFamily(offset=period, period=period),
    )
    offdiag_special = ExtremalReport(
        graph_family="K_n_minus",
        n=n,
        case="offdiag_special",
        min_value=0.0,
        min_times=TimeFamily(offset=half_pi, period=half_pi),
        max_value=1.0,
        max_times=TimeFamily(offset=quarter, period=half_pi),
    )
    offdiag_generic = ExtremalReport(
        graph_family="K_n_minus",
        n=n,
        case="offdiag_generic",
        min_value=0.0,
        min_times=TimeFamily(offset=period, period=period),
        max_value=2.0 / n,
        max_times=TimeFamily(offset=half, period=period),
    )
    return [diag_special, diag_generic, offdiag_special, offdiag_generic]


def grover_target(n: int) -> np.ndarray:
    """The reflection about the mean: I - (2/n)J."""
    return np.eye(n) - (2.0 / n) * np.ones((n, n))


def grover_decomposition(u: np.ndarray, tol: float = 1e-9, t: float = math.nan) -> GroverReport:
    """Fit a unit scalar c minimizing the max-norm of u - c*(I - (2/n)J).

    The optimal c is the normalized Frobenius inner product of the target
    with u, so the fit is closed-form and tol only labels the threshold a
    caller should hold the residual against.  A large residual is
    reported, never raised: it simply means u is not a phase times the
    reflection.  ``t`` is carried through for bookkeeping only.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {u.shape}")
    n = u.shape[0]
    g = grover_target(n)
    raw = complex(np.vdot(g, u) / np.vdot(g, g))
    phase = raw / abs(raw) if abs(raw) > 0 else 1.0 + 0.0j
    residual = float(np.max(np.abs(u - phase * g)))
    return GroverReport(n=n, t=float(t), phase=phase, residual=residual)


def expected_grover_phase(n: int, k: int = 0) -> complex:
    """Unit phase of the complete-graph propagator at t = pi/(2n) + k*pi/n.

    At those times U factors as phase * (I - (2/n)J) with
    phase = exp(-i * n(n-5)/2 * t) = exp(-i*pi*(n-5)*(2k+1)/4).  This is
    the numerically observed value; printed tabulations of the odd-n case
    differ from it by sign or by misplacing the imaginary unit.
    """
    if n < 1:
        raise InvalidVertex(f"need n >= 1, got {n}")
    return cmath.exp(-1j * math.pi * (n - 5) * (2 * k + 1) / 4.0)


def phase_matches(a: complex, b: complex, tol: float = 1e-9) -> str:
    """Compare unit phases: 'equal', 'sign_or_conjugate', or 'different'.

    The lenient verdict accepts -b, conj(b) and -conj(b), covering the
    sign and conjugation discrepancies in published phase tables.
    """
    if abs(a - b) <= tol:
        return "equal"
    if min(abs(a + b), abs(a - b.conjugate()), abs(a + b.conjugate())) <= tol:
        return "sign_or_conjugate"
    return "different"
