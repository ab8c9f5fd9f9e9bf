"""Command-line front end.

Subcommands: simulate (exact trajectory as CSV or JSON), spectrum
(numeric eigenvalues, optionally checked against the closed form),
analyze (asymptotic report as JSON) and verify (prediction vs simulation,
exit status reflects the outcome).

Exit codes: 0 success/pass, 1 verification failure, 2 usage or parse error.
All rational values are printed exactly as "p/q"; spectra and rates are
decimals with 12 significant digits.  Output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, graphs, mixing, spectral
from .rationals import parse_amounts

_MATCH_TOL = 1e-10


class CliError(Exception):
    """User-input problem; the message names the offending flag."""


def _build_graph(spec: str) -> tuple[graphs.Graph, str]:
    """Resolve a --graph value: cube, cycle:<n> or file:<path>."""
    if spec == "cube":
        return graphs.build_cube(), "cube"
    if spec.startswith("cycle:"):
        try:
            n = int(spec.split(":", 1)[1])
        except ValueError:
            raise CliError(f"--graph: bad cycle size in {spec!r}") from None
        if n < 3:
            raise CliError(f"--graph: cycle size must be >= 3, got {n}")
        return graphs.build_cycle(n), "cycle"
    if spec.startswith("file:"):
        path = Path(spec[len("file:"):])
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise CliError(f"--graph: cannot read {path}: {exc}") from None
        try:
            return graphs.from_edge_list(text), "file"
        except graphs.EdgeListError as exc:
            raise CliError(f"--graph: {path}: {exc}") from None
    raise CliError(f"--graph: expected cube, cycle:<n> or file:<path>, got {spec!r}")


def _load_init(spec: str, node_count: int) -> mixing.Amounts:
    """Resolve an --init value: inline comma-separated rationals or a file path."""
    path = Path(spec)
    text = path.read_text(encoding="utf-8") if path.is_file() else spec
    try:
        amounts = parse_amounts(text)
    except ValueError as exc:
        raise CliError(f"--init: {exc}") from None
    if len(amounts) != node_count:
        raise CliError(f"--init: expected {node_count} amounts, got {len(amounts)}")
    return amounts


def _emit_json(doc) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _decimal(x: float) -> float:
    return float(f"{x:.12g}")


def _cmd_simulate(args) -> int:
    g, _ = _build_graph(args.graph)
    init = _load_init(args.init, g.node_count)
    if args.steps < 0:
        raise CliError(f"--steps: must be >= 0, got {args.steps}")
    trajectory = analysis.simulate(g, init, args.steps)
    if args.format == "csv":
        lines = ["t," + ",".join(f"node{v}" for v in range(g.node_count)) + ",range"]
        for t, state in enumerate(trajectory.states):
            row = ",".join(str(x) for x in state)
            lines.append(f"{t},{row},{trajectory.range_series[t]}")
        print("\n".join(lines))
    else:
        _emit_json({
            "node_count": g.node_count,
            "steps": [
                {
                    "t": t,
                    "amounts": [str(x) for x in state],
                    "range": str(trajectory.range_series[t]),
                }
                for t, state in enumerate(trajectory.states)
            ],
        })
    return 0


def _spectrum_entries(spectrum: spectral.Spectrum) -> list[dict]:
    return [
        {"value": _decimal(e.value), "multiplicity": e.multiplicity, "exact": e.exact}
        for e in spectrum.entries
    ]


def _cmd_spectrum(args) -> int:
    g, kind = _build_graph(args.graph)
    numeric = spectral.spectrum_numeric(mixing.mixing_matrix(g))
    closed = None
    if args.closed_form:
        if kind == "cube":
            closed = spectral.cube_spectrum_closed_form()
        elif kind == "cycle":
            closed = spectral.cycle_spectrum_closed_form(g.node_count)
        else:
            raise CliError(
                "--closed-form: only the built-in cube and cycle:<n> graphs "
                "have closed-form spectra; this graph gets the numeric spectrum only"
            )
    discrepancy = None
    if closed is not None:
        discrepancy = max(
            abs(a - b) for a, b in zip(numeric.values(), closed.values())
        )
    if args.format == "json":
        doc = {"numeric": _spectrum_entries(numeric)}
        if closed is not None:
            doc["closed_form"] = _spectrum_entries(closed)
            doc["max_discrepancy"] = _decimal(discrepancy)
        _emit_json(doc)
    else:
        if closed is None:
            print(numeric.render())
        else:
            print("numeric")
            print(numeric.render())
            print("closed-form")
            print(closed.render())
            print(f"max-discrepancy {discrepancy:.12g}")
    if discrepancy is not None and discrepancy > _MATCH_TOL:
        print(f"error: numeric spectrum departs from closed form by {discrepancy:.3g}",
              file=sys.stderr)
        return 1
    return 0


def _limit_strings(report: analysis.AsymptoticReport) -> tuple[list[str], list[str]]:
    return ([str(x) for x in report.limit_even], [str(x) for x in report.limit_odd])


def _cmd_analyze(args) -> int:
    g, _ = _build_graph(args.graph)
    init = _load_init(args.init, g.node_count)
    if analysis.classify(g) is analysis.Classification.REDUCIBLE:
        _emit_json({
            "classification": analysis.Classification.REDUCIBLE.value,
            "convergence_rate": None,
            "limit_even": None,
            "limit_odd": None,
            "total": str(sum(init)),
        })
        return 0
    report = analysis.predict_limit(g, init)
    even, odd = _limit_strings(report)
    _emit_json({
        "classification": report.classification.value,
        "convergence_rate": _decimal(report.convergence_rate),
        "limit_even": even,
        "limit_odd": odd,
        "total": str(sum(init)),
    })
    return 0


def _cmd_verify(args) -> int:
    g, kind = _build_graph(args.graph)
    init = _load_init(args.init, g.node_count)
    if args.steps < 1:
        raise CliError(f"--steps: must be >= 1, got {args.steps}")
    if args.tol < 0:
        raise CliError(f"--tol: must be >= 0, got {args.tol}")
    report = analysis.verify_convergence(g, init, args.steps, args.tol)
    even, odd = _limit_strings(report.prediction)
    doc = {
        "classification": report.classification.value,
        "convergence_rate": _decimal(report.prediction.convergence_rate),
        "contraction_ratios": [
            None if r is None else str(r) for r in report.contraction_ratios
        ],
        "deviation": f"{float(report.deviation):.12g}",
        "limit_even": even,
        "limit_odd": odd,
        "passed": report.passed,
        "steps": report.steps,
        "tolerance": args.tol,
    }
    passed = report.passed
    if kind == "cube" and args.steps >= 2:
        try:
            log = analysis.cube_elementary_check(init, args.steps)
        except spectral.InvariantViolation as exc:
            doc["cube_elementary_check"] = {"passed": False, "detail": str(exc)}
            passed = False
        else:
            doc["cube_elementary_check"] = {
                "passed": True,
                "opposite_equal_rounds": log.opposite_equal_rounds,
                "exact_halvings": log.exact_halvings,
            }
    doc["passed"] = passed
    _emit_json(doc)
    return 0 if passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gossipavg",
        description="Exact simulator and spectral analyzer for synchronous "
                    "neighbor-averaging dynamics on graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph(p):
        p.add_argument("--graph", required=True,
                       help="cube, cycle:<n>, or file:<path> (edge-list format)")

    def add_init(p):
        p.add_argument("--init", required=True,
                       help="comma-separated rationals (e.g. 1,0,1/2) or a file path")

    p = sub.add_parser("simulate", help="run the dynamics and print the exact trajectory")
    add_graph(p)
    add_init(p)
    p.add_argument("--steps", type=int, default=0, help="rounds to run (default 0)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("spectrum", help="print the operator's eigenvalues")
    add_graph(p)
    p.add_argument("--closed-form", action="store_true",
                   help="also print the closed-form spectrum and the max discrepancy")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("analyze", help="classify the dynamics and print the predicted limits")
    add_graph(p)
    add_init(p)
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("verify", help="check the predicted limits against a simulated run")
    add_graph(p)
    add_init(p)
    p.add_argument("--steps", type=int, default=40, help="rounds to simulate (default 40)")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="max-norm tolerance for the comparison (default 1e-9)")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
