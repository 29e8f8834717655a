"""Command-line entry point: ``hyperramsey <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import circuit as cir
from . import counting
from . import simulator as sim
from .driver import DriverConfig, compute_ramsey
from .encoding import to_bits
from .errors import InconclusiveError, InfeasibleSizeError
from .oracle import DEFAULT_ENUM_CAP, RamseyInstance, count_solutions


def _eps(text: str) -> float:
    return float(Fraction(text))


def _add_instance(p: argparse.ArgumentParser) -> None:
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperramsey", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ramsey", help="compute R(m,n;r) by sweeping N")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mode", choices=("analytic", "statevector", "sv", "classical"), default="analytic")
    p.add_argument("--L", type=int, default=None, help="strict lower bound (default max(m,n)-1)")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--reps", type=int, default=5, help="odd number of runs per N for majority vote")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eps", type=_eps, default=cir.DEFAULT_EPS)
    p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("count", help="exact solution count by brute force")
    _add_instance(p)
    p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("qcount", help="simulated quantum counting")
    _add_instance(p)
    p.add_argument("--mode", choices=("sv", "statevector", "analytic"), default="sv")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--runs", type=int, default=1)
    p.add_argument("--w", type=int, default=None)
    p.add_argument("--eps", type=_eps, default=cir.DEFAULT_EPS)
    p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")

    p = sub.add_parser("build-circuit", help="emit a circuit in text form")
    _add_instance(p)
    p.add_argument("--part", choices=("oracle", "grover", "counting"), default="oracle")
    p.add_argument("--w", type=int, default=None)
    p.add_argument("--eps", type=_eps, default=cir.DEFAULT_EPS)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--json", action="store_true", help="print a JSON summary instead of the circuit")

    p = sub.add_parser("simulate", help="run a circuit file on a basis input")
    p.add_argument("--circuit", required=True)
    p.add_argument("--input", default="", help="bit string over all qubits, or over the input register")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dump-state", action="store_true")
    p.add_argument("--max-qubits", type=int, default=sim.DEFAULT_MAX_QUBITS)
    p.add_argument("--json", action="store_true")
    return parser


def _mode(name: str) -> str:
    return "statevector" if name == "sv" else name


def _cmd_ramsey(args) -> int:
    config = DriverConfig(mode=_mode(args.mode), repetitions=args.reps, seed=args.seed,
                          lower_bound=args.L, n_max=args.n_max, eps=args.eps, enum_cap=args.enum_cap)
    try:
        result = compute_ramsey(args.m, args.n, args.r, config)
    except InconclusiveError as exc:
        if args.json and exc.transcript is not None:
            print(exc.transcript.to_json())
        raise
    if args.json:
        print(result.to_json())
    else:
        print(f"R({args.m},{args.n};{args.r}) = {result.R}")
    return 0


def _cmd_count(args) -> int:
    inst = RamseyInstance(args.N, args.m, args.n, args.r)
    M = count_solutions(inst, args.enum_cap)
    record = {"N": inst.N, "m": inst.m, "n": inst.n, "r": inst.r, "M": M}
    if not args.json:
        print(f"M = {M}")
    print(json.dumps(record))
    return 0


def _cmd_qcount(args) -> int:
    inst = RamseyInstance(args.N, args.m, args.n, args.r)
    estimates = counting.estimate_counts(inst, _mode(args.mode), seed=args.seed, runs=args.runs,
                                         w=args.w, eps=args.eps, enum_cap=args.enum_cap)
    for est in estimates:
        print(json.dumps({"b": est.outcome, "theta": est.theta, "M_hat": est.m_hat, "verdict": est.verdict}))
    return 0


def _cmd_build(args) -> int:
    inst = RamseyInstance(args.N, args.m, args.n, args.r)
    if args.part == "oracle":
        circ = cir.build_oracle_circuit(inst)
    elif args.part == "grover":
        circ = cir.build_grover_circuit(inst)
    else:
        circ = cir.build_counting_circuit(inst, args.w, args.eps)
    if args.json:
        print(json.dumps({"qubits": circ.width, "gates": len(circ.gates),
                          "registers": {r.name: [r.offset, r.size] for r in circ.registers}}))
        return 0
    text = cir.serialize(circ)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _initial_index(circ: cir.Circuit, bits: str) -> int:
    bits = to_bits(bits)
    if len(bits) == circ.width or not bits:
        offset = 0
    elif circ.has_register("input") and len(bits) == circ.register("input").size:
        offset = circ.register("input").offset
    else:
        raise ValueError(f"--input has {len(bits)} bits; expected {circ.width} or the input register size")
    return sum(b << (offset + i) for i, b in enumerate(bits))


def _cmd_simulate(args) -> int:
    with open(args.circuit) as fh:
        circ = cir.parse(fh.read())
    state, outcomes = sim.run_circuit(circ, _initial_index(circ, args.input), args.seed, args.max_qubits)
    if args.json:
        print(json.dumps({"outcomes": outcomes}))
    else:
        print(" ".join(["outcomes", *map(str, outcomes)]))
    if args.dump_state:
        sys.stdout.write(sim.dump_state(state))
    return 0


COMMANDS = {
    "ramsey": _cmd_ramsey,
    "count": _cmd_count,
    "qcount": _cmd_qcount,
    "build-circuit": _cmd_build,
    "simulate": _cmd_simulate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, InconclusiveError, OSError) as exc:
        kind = "infeasible" if isinstance(exc, InfeasibleSizeError) else type(exc).__name__
        print(f"error ({kind}): {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
