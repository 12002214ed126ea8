"""Command-line front end.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 usage or input error.  All numeric output uses 12 significant digits
with locale-independent decimal points, and identical invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .closed_form import expected_grover_phase, grover_decomposition, phase_matches
from .errors import SpinNetError
from .evolution import fidelity_curve, full_space_propagator_oracle, propagator
from .graphs import (
    Graph,
    complete_graph,
    complete_minus_matching,
    cycle_graph,
    empty_graph,
    graph_from_file,
    path_graph,
    adjacency_matrix,
    laplacian,
    xyz_hamiltonian,
)
from .pst import DEFAULT_EPSILON, DEFAULT_WINDOW, pst_scan
from .routing import schedule_from_json, simulate_route
from .verify import run_all

__all__ = ["main", "parse_graph_spec"]


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _rounded(x: float) -> float:
    # Clamp JSON numbers to the 12-significant-digit output contract.
    return float(_fmt(x))


def parse_graph_spec(spec: str) -> Graph:
    """Parse a graph selector.

    Grammar: ``complete:<n>`` | ``complete-minus:<n>:<u>-<v>[,<u>-<v>]*`` |
    ``empty:<n>`` | ``path:<n>`` | ``cycle:<n>`` | ``file:<path>``.
    """
    kind, _, rest = spec.partition(":")
    if not rest:
        raise ValueError(f"graph spec {spec!r} missing ':<arguments>'")
    if kind == "file":
        return graph_from_file(rest)
    if kind == "complete-minus":
        n_text, _, pairs_text = rest.partition(":")
        if not pairs_text:
            raise ValueError(f"graph spec {spec!r} missing deleted pairs")
        n = _parse_int(n_text, "vertex count")
        pairs = []
        for chunk in pairs_text.split(","):
            u_text, _, v_text = chunk.partition("-")
            if not v_text:
                raise ValueError(f"bad deleted pair {chunk!r} in {spec!r}")
            pairs.append((_parse_int(u_text, "vertex"), _parse_int(v_text, "vertex")))
        return complete_minus_matching(n, pairs)
    n = _parse_int(rest, "vertex count")
    builders = {
        "complete": complete_graph,
        "empty": empty_graph,
        "path": path_graph,
        "cycle": cycle_graph,
    }
    if kind not in builders:
        raise ValueError(f"unknown graph family {kind!r} in {spec!r}")
    return builders[kind](n)


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"{what} {text!r} is not an integer") from None


def _parse_pair(text: str) -> tuple[int, int]:
    i_text, _, j_text = text.partition(",")
    if not j_text:
        raise ValueError(f"pair {text!r} must look like 'i,j'")
    return _parse_int(i_text, "vertex"), _parse_int(j_text, "vertex")


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _matrix_rows(m: np.ndarray) -> list[list[int]]:
    return [[int(x) for x in row] for row in m]


def _cmd_hamiltonian(args: argparse.Namespace) -> int:
    g = parse_graph_spec(args.graph)
    a, lap, h = adjacency_matrix(g), laplacian(g), xyz_hamiltonian(g)
    if args.format == "json":
        payload = {
            "schema": 1,
            "n": g.n,
            "m": g.m,
            "adjacency": _matrix_rows(a),
            "laplacian": _matrix_rows(lap),
            "xyz_hamiltonian": _matrix_rows(h),
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = []
        for name, mat in (("adjacency", a), ("laplacian", lap), ("xyz_hamiltonian", h)):
            lines.append(f"# {name}")
            lines.extend(",".join(str(int(x)) for x in row) for row in mat)
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_curve(args: argparse.Namespace) -> int:
    g = parse_graph_spec(args.graph)
    i, j = _parse_pair(args.pair)
    curve = fidelity_curve(xyz_hamiltonian(g), i, j, args.tmax, args.steps)
    lines = ["t,fidelity"]
    lines.extend(f"{_fmt(t)},{_fmt(f)}" for t, f in zip(curve.times, curve.fidelities))
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_pst(args: argparse.Namespace) -> int:
    g = parse_graph_spec(args.graph)
    i, j = _parse_pair(args.pair)
    finding = pst_scan(
        xyz_hamiltonian(g), i, j, t_max=args.tmax, grid_steps=args.grid, epsilon=args.epsilon
    )
    payload = {
        "schema": 1,
        "graph": args.graph,
        "pair": [finding.pair[0], finding.pair[1]],
        "t_max": _rounded(args.tmax),
        "epsilon": _rounded(finding.epsilon),
        "times": [_rounded(t) for t in finding.times],
        "peak_fidelities": [_rounded(f) for f in finding.peak_fidelities],
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


def _cmd_grover(args: argparse.Namespace) -> int:
    n = args.n
    t = math.pi / (2 * n) + args.k * math.pi / n
    u = propagator(xyz_hamiltonian(complete_graph(n)), t).u
    report = grover_decomposition(u, t=t)
    expected = expected_grover_phase(n, args.k)
    payload = {
        "schema": 1,
        "n": n,
        "k": args.k,
        "t": _rounded(t),
        "phase_re": _rounded(report.phase.real),
        "phase_im": _rounded(report.phase.imag),
        "residual": _rounded(report.residual),
        "expected_phase_re": _rounded(expected.real),
        "expected_phase_im": _rounded(expected.imag),
        "phase_agreement": phase_matches(report.phase, expected),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


def _cmd_route(args: argparse.Namespace) -> int:
    with open(args.schedule, "r", encoding="utf-8") as fh:
        schedule = schedule_from_json(fh.read())
    start = args.start if args.start is not None else schedule.hops[0][0]
    report = simulate_route(schedule, start)
    payload = {
        "schema": 1,
        "n": schedule.n,
        "k": schedule.k,
        "path": [schedule.hops[0][0]] + [b for _, b in schedule.hops],
        "hop_fidelities": [_rounded(f) for f in report.hop_fidelities],
        "switch_ops": report.switch_ops,
        "total_time": _rounded(report.total_time),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = parse_graph_spec(args.graph)
    block = full_space_propagator_oracle(g, args.t)
    u = propagator(xyz_hamiltonian(g), args.t).u
    deviation = float(np.max(np.abs(block - u)))
    ok = deviation <= 1e-8
    print(f"full-space deviation {_fmt(deviation)} (n={g.n}, t={_fmt(args.t)}): " + ("OK" if ok else "FAIL"))
    return 0 if ok else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_all(args.n_max)
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}")
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed: {', '.join(failed)}")
        return 1
    print(f"all {len(results)} checks passed (n_max={args.n_max})")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinnet",
        description="Single-excitation dynamics, state transfer and routing on spin networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hamiltonian", help="dump adjacency, Laplacian and coupling matrices")
    p.add_argument("graph", help="graph spec, e.g. complete:4 or complete-minus:8:1-8")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_hamiltonian)

    p = sub.add_parser("curve", help="sample a fidelity curve to CSV")
    p.add_argument("graph")
    p.add_argument("--pair", required=True, help="'i,j' vertex pair")
    p.add_argument("--tmax", type=float, default=math.pi)
    p.add_argument("--steps", type=int, default=1001)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("pst", help="scan a time window for perfect state transfer")
    p.add_argument("graph")
    p.add_argument("--pair", required=True)
    p.add_argument("--tmax", type=float, default=DEFAULT_WINDOW)
    p.add_argument("--grid", type=int, default=None)
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_pst)

    p = sub.add_parser("grover", help="fit the all-to-all propagator to the reflection operator")
    p.add_argument("n", type=int, help="order of the complete graph")
    p.add_argument("--k", type=int, default=0, help="time-family index: t = pi/(2n) + k*pi/n")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_grover)

    p = sub.add_parser("route", help="simulate a link-switching routing schedule")
    p.add_argument("schedule", help="JSON file: {\"n\": int, \"k\": int, \"path\": [v1, v2, ...]}")
    p.add_argument("--start", type=int, default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_route)

    p = sub.add_parser("oracle", help="cross-check the propagator in the full spin space (n <= 8)")
    p.add_argument("graph")
    p.add_argument("--t", type=float, required=True)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--n-max", type=int, default=16)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpinNetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
