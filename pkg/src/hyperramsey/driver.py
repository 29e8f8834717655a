"""Sweep N upward from a strict lower bound until counting says no solutions remain."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import counting
from .circuit import DEFAULT_EPS
from .errors import InconclusiveError
from .oracle import DEFAULT_ENUM_CAP, RamseyInstance, count_solutions
from .simulator import DEFAULT_MAX_QUBITS

MODES = ("statevector", "analytic", "classical")


@dataclass
class DriverConfig:
    mode: str = "analytic"
    repetitions: int = 5
    seed: int = 0
    lower_bound: int | None = None
    n_max: int | None = None
    eps: float = DEFAULT_EPS
    max_qubits: int = DEFAULT_MAX_QUBITS
    enum_cap: int = DEFAULT_ENUM_CAP

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.repetitions < 1 or self.repetitions % 2 == 0:
            raise ValueError("repetitions must be a positive odd integer")
        if self.lower_bound is not None and self.lower_bound < 1:
            raise ValueError("lower bound must be >= 1")


@dataclass
class Step:
    N: int
    runs: list[dict]
    majority: str


@dataclass
class RamseyResult:
    m: int
    n: int
    r: int
    config: DriverConfig
    steps: list[Step] = field(default_factory=list)
    R: int | None = None

    def to_dict(self) -> dict:
        return {
            "m": self.m, "n": self.n, "r": self.r,
            "mode": self.config.mode, "seed": self.config.seed,
            "steps": [{"N": s.N, "runs": s.runs, "majority": s.majority} for s in self.steps],
            "R": self.R,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def default_lower_bound(m: int, n: int) -> int:
    # R(m,n;r) >= max(m,n) whenever m, n >= r
    return max(max(m, n) - 1, 1)


def _classical_step(inst: RamseyInstance, config: DriverConfig) -> Step:
    M = count_solutions(inst, config.enum_cap)
    v = counting.verdict(M)
    return Step(inst.N, [{"b": None, "M_hat": float(M), "verdict": v}], v)


def _quantum_step(inst: RamseyInstance, config: DriverConfig) -> Step:
    run = counting.prepare(inst, config.mode, eps=config.eps,
                           max_qubits=config.max_qubits, enum_cap=config.enum_cap)
    runs = []
    for rep in range(config.repetitions):
        est = run.estimate(np.random.default_rng([config.seed, inst.N, rep]))
        runs.append({"b": est.outcome, "M_hat": est.m_hat, "verdict": est.verdict})
    zeros = sum(r["verdict"] == counting.ZERO for r in runs)
    majority = counting.ZERO if 2 * zeros > len(runs) else counting.POSITIVE
    return Step(inst.N, runs, majority)


def compute_ramsey(m: int, n: int, r: int, config: DriverConfig | None = None) -> RamseyResult:
    """Least N above the lower bound whose majority verdict is 'zero'.

    Raises InconclusiveError (carrying the partial transcript) when the N cap
    is reached first.
    """
    config = config or DriverConfig()
    lower = config.lower_bound if config.lower_bound is not None else default_lower_bound(m, n)
    n_max = config.n_max if config.n_max is not None else lower + 16
    result = RamseyResult(m, n, r, config)
    step_fn = _classical_step if config.mode == "classical" else _quantum_step
    for N in range(lower + 1, n_max + 1):
        step = step_fn(RamseyInstance(N, m, n, r), config)
        result.steps.append(step)
        if step.majority == counting.ZERO:
            result.R = N
            return result
    raise InconclusiveError(f"no zero verdict for N <= {n_max}", result)
