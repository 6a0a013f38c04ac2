"""Command line front end.

Subcommands cover the main workflows: quantize a symbol file, dequantize
an operator file, build Wigner tables from state vectors, integrate
Heisenberg dynamics on the symbol side, and run the acceptance battery.
Exit codes: 0 success, 1 failed selftest, 2 unreadable or malformed
input, 3 inconsistent dimensions, 4 out-of-domain data.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import serialize
from .dequantize import dequantize
from .errors import DimensionError, DomainError, FormatError
from .moyal import HamiltonianSystem, evolve_operator, evolve_symbol
from .quantize import quantize_fourier, quantize_sampled
from .rep import Representation
from .selftest import DEFAULT_SEED, format_result, run
from .symbols import sample
from .wigner import check_symmetries, marginal_p, marginal_x, wigner_state


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _deliver(text: str, path) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _reduced(value: float) -> float:
    folded = value % 1.0
    return 0.0 if folded >= 1.0 else folded


def _pair_list(vector) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(vector, dtype=complex)]


def _rep_from_flags(args) -> Representation:
    if args.N is None:
        raise FormatError("trig polynomial input needs --N to fix the dimension")
    theta1 = 0.0 if args.theta1 is None else args.theta1
    theta2 = 0.0 if args.theta2 is None else args.theta2
    return Representation(theta1, theta2, args.N)


def _check_flag_consistency(args, rep: Representation) -> None:
    flag_dim = getattr(args, "N", None)
    if flag_dim is not None and flag_dim != rep.dim:
        raise DimensionError(f"--N {flag_dim} conflicts with N={rep.dim} from the file")
    for flag, value, stored in (
        ("--theta1", args.theta1, rep.theta1),
        ("--theta2", args.theta2, rep.theta2),
    ):
        if value is not None and abs(_reduced(value) - stored) > 1e-12:
            raise DimensionError(f"{flag} {value} conflicts with the file value {stored}")


def _sibling(path: str) -> str:
    root, dot, suffix = path.rpartition(".")
    if dot:
        return f"{root}.sampled.{suffix}"
    return path + ".sampled"


def _cmd_quantize(args) -> int:
    doc = serialize.loads(_read(args.symbol))
    if isinstance(doc, list):
        tp = serialize.trig_from_json(doc)
        rep = _rep_from_flags(args)
        if args.route == "sampled":
            operator = quantize_sampled(sample(tp, rep))
        elif args.route == "both":
            if args.output is None:
                raise FormatError("route 'both' needs -o to place the two results")
            direct = quantize_fourier(tp, rep)
            via_grid = quantize_sampled(sample(tp, rep))
            gap = float(np.max(np.abs(direct - via_grid)))
            _deliver(serialize.operator_to_json(direct), args.output)
            _deliver(serialize.operator_to_json(via_grid), _sibling(args.output))
            print(f"route discrepancy: {gap:.3e}", file=sys.stderr)
            return 0
        else:
            operator = quantize_fourier(tp, rep)
    elif isinstance(doc, dict):
        if args.route in ("fourier", "both"):
            raise FormatError(
                f"route {args.route!r} needs a trig polynomial document (a JSON array)"
            )
        sym = serialize.sampled_from_json(doc)
        _check_flag_consistency(args, sym.rep)
        operator = quantize_sampled(sym)
    else:
        raise FormatError("symbol document must be a JSON array or object")
    _deliver(serialize.operator_to_json(operator), args.output)
    return 0


def _cmd_dequantize(args) -> int:
    operator = serialize.operator_from_json(serialize.loads(_read(args.operator)))
    theta1 = 0.0 if args.theta1 is None else args.theta1
    theta2 = 0.0 if args.theta2 is None else args.theta2
    rep = Representation(theta1, theta2, operator.shape[0])
    sym = dequantize(rep, operator)
    if args.csv:
        _deliver(serialize.lattice_csv(sym.grid, rep), args.output)
    else:
        _deliver(serialize.sampled_to_json(sym), args.output)
    return 0


def _cmd_wigner(args) -> int:
    psi = serialize.state_from_json(serialize.loads(_read(args.state)))
    if args.state2 is None:
        phi = psi
    else:
        phi = serialize.state_from_json(serialize.loads(_read(args.state2)))
    if phi.size != psi.size:
        raise DimensionError(f"state lengths differ: {psi.size} vs {phi.size}")
    theta1 = 0.0 if args.theta1 is None else args.theta1
    theta2 = 0.0 if args.theta2 is None else args.theta2
    rep = Representation(theta1, theta2, psi.size)
    table = wigner_state(rep, psi, phi)
    if args.csv:
        _deliver(serialize.lattice_csv(table.grid, rep), args.output)
        return 0
    mass = complex(table.grid.sum())
    summary = {
        "mass": [mass.real, mass.imag],
        "marginal_x": _pair_list(marginal_x(table)),
        "marginal_p": _pair_list(marginal_p(table)),
        "symmetry_residual": check_symmetries(table),
    }
    _deliver(serialize.wigner_to_json(table, extra={"summary": summary}), args.output)
    return 0


def _cmd_evolve(args) -> int:
    start = serialize.sampled_from_json(serialize.loads(_read(args.symbol)))
    _check_flag_consistency(args, start.rep)
    doc = serialize.loads(_read(args.hamiltonian))
    if isinstance(doc, list):
        energy = sample(serialize.trig_from_json(doc), start.rep)
    else:
        energy = serialize.sampled_from_json(doc)
    system = HamiltonianSystem(energy, start.rep)
    if args.steps < 1:
        raise FormatError("--steps must be at least 1")
    evolved = evolve_symbol(system, start, args.t, args.steps)
    exact = evolve_operator(system, quantize_sampled(start), args.t)
    defect = float(np.max(np.abs(quantize_sampled(evolved) - exact)))
    print(f"defect vs exact conjugation: {defect:.3e}", file=sys.stderr)
    extra = {"diagnostics": {"t": args.t, "steps": args.steps, "defect": defect}}
    _deliver(serialize.sampled_to_json(evolved, extra=extra), args.output)
    return 0


def _cmd_selftest(args) -> int:
    results = run(args.seed)
    for result in results:
        print(format_result(result))
    passed = sum(1 for result in results if result.passed)
    print(f"{passed}/{len(results)} criteria passed")
    return 0 if passed == len(results) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusq",
        description="Weyl quantization, Wigner tables and Moyal dynamics on the torus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("quantize", help="turn a symbol file into an N x N operator")
    q.add_argument("symbol", help="JSON file: trig polynomial array or sampled symbol object")
    q.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
    q.add_argument("--theta1", type=float, default=None, help="first boundary angle")
    q.add_argument("--theta2", type=float, default=None, help="second boundary angle")
    q.add_argument("--N", type=int, default=None, help="Hilbert space dimension (trig input)")
    q.add_argument(
        "--route",
        choices=("auto", "fourier", "sampled", "both"),
        default="auto",
        help="quantization route; 'both' writes the two results and reports their gap",
    )
    q.set_defaults(handler=_cmd_quantize)

    d = sub.add_parser("dequantize", help="canonical sampled symbol of an operator")
    d.add_argument("operator", help="JSON operator file")
    d.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
    d.add_argument("--theta1", type=float, default=None, help="first boundary angle")
    d.add_argument("--theta2", type=float, default=None, help="second boundary angle")
    d.add_argument("--csv", action="store_true", help="emit a lattice CSV instead of JSON")
    d.set_defaults(handler=_cmd_dequantize)

    w = sub.add_parser("wigner", help="Wigner table of one state or a state pair")
    w.add_argument("state", help="JSON state file, an array of [re, im] pairs")
    w.add_argument("state2", nargs="?", default=None, help="optional second state file")
    w.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
    w.add_argument("--theta1", type=float, default=None, help="first boundary angle")
    w.add_argument("--theta2", type=float, default=None, help="second boundary angle")
    w.add_argument("--csv", action="store_true", help="emit a lattice CSV instead of JSON")
    w.set_defaults(handler=_cmd_wigner)

    e = sub.add_parser("evolve", help="integrate the Heisenberg flow on the symbol side")
    e.add_argument("hamiltonian", help="JSON Hamiltonian: trig polynomial or sampled symbol")
    e.add_argument("symbol", help="JSON sampled symbol to evolve")
    e.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
    e.add_argument("--t", type=float, required=True, help="evolution time")
    e.add_argument("--steps", type=int, default=1000, help="RK4 step count (default 1000)")
    e.add_argument("--theta1", type=float, default=None, help="must match the symbol file")
    e.add_argument("--theta2", type=float, default=None, help="must match the symbol file")
    e.set_defaults(handler=_cmd_evolve)

    s = sub.add_parser("selftest", help="run the acceptance battery")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED, help="base random seed")
    s.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DimensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
