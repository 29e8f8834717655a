"""Quantum counting: phase estimation of the Grover iteration.

Two ways to get the outcome distribution over the counting register:

* ``statevector`` simulates t + B qubits, using the sign-flip oracle in
  place of the ancilla circuit, with counting qubit j controlling 2^j
  Grover iterations and an inverse QFT at the end.
* ``analytic`` works inside the two-dimensional subspace spanned by the
  normalized solution and non-solution superpositions, where the Grover
  iteration is a rotation by theta with sin^2(theta/2) = M / 2^B. It needs
  the true M, taken from brute-force counting, and is only a shortcut for
  simulating the same distribution.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import simulator as sim
from .circuit import DEFAULT_EPS, precision_params
from .errors import InfeasibleSizeError
from .oracle import DEFAULT_ENUM_CAP, RamseyInstance, count_solutions, solution_table

Mode = Literal["statevector", "analytic"]
ZERO, POSITIVE = "zero", "positive"
ZERO_THRESHOLD = 0.5


@dataclass(frozen=True)
class CountEstimate:
    outcome: int
    theta: float
    m_hat: float
    verdict: str
    bound: float | None = None

    def to_dict(self) -> dict:
        d = {"b": self.outcome, "theta": self.theta, "M_hat": self.m_hat, "verdict": self.verdict}
        if self.bound is not None:
            d["bound"] = self.bound
        return d


def decode_outcome(b: int, t: int, n_inputs: int) -> tuple[float, float]:
    """Phase and solution-count estimate for counting-register outcome ``b``."""
    size = 1 << t
    if not 0 <= b < size:
        raise ValueError(f"outcome {b} outside [0, {size})")
    theta = 2 * math.pi * b / size
    return theta, 2.0 ** n_inputs * math.sin(math.pi * b / size) ** 2


def error_bound(M: int, n_inputs: int, w: int) -> float:
    """Upper bound on |M_hat - M| that holds with probability at least 1 - eps."""
    space = 2.0 ** n_inputs
    return 2.0 ** -w * (math.sqrt(M * space) + space / 2.0 ** (w + 2))


def verdict(estimate: CountEstimate | float) -> str:
    m_hat = estimate.m_hat if isinstance(estimate, CountEstimate) else float(estimate)
    return ZERO if m_hat < ZERO_THRESHOLD else POSITIVE


def analytic_distribution(M: int, n_inputs: int, t: int) -> np.ndarray:
    """Exact outcome distribution of phase estimation on the Grover iteration.

    In the (non-solution, solution) basis the input state is
    (cos(theta/2), sin(theta/2)) and G is a rotation by theta, so
    G^k |psi> = (cos((2k+1) theta/2), sin((2k+1) theta/2)). The counting
    register ends in sum_k |k> G^k |psi> / sqrt(T), and the inverse QFT is
    an orthonormal DFT along k.
    """
    space = 1 << n_inputs
    if not 0 <= M <= space:
        raise ValueError(f"M={M} outside [0, {space}]")
    T = 1 << t
    if M == space:
        # the non-solution direction vanishes; |psi> is an eigenvector with phase pi
        probs = np.zeros(T)
        probs[T // 2] = 1.0
        return probs
    theta = 2 * math.asin(math.sqrt(M / space))
    angles = (2 * np.arange(T) + 1) * (theta / 2)
    amps = np.stack([np.cos(angles), np.sin(angles)]) / math.sqrt(T)
    amps = np.fft.fft(amps, axis=1, norm="ortho")
    return (np.abs(amps) ** 2).sum(axis=0)


def _check_width(t: int, n_inputs: int, max_qubits: int) -> None:
    if t + n_inputs > max_qubits:
        raise InfeasibleSizeError(
            f"statevector mode needs {t + n_inputs} qubits (cap {max_qubits}); try analytic mode"
        )


def phase_estimation_state(marks: np.ndarray, t: int, max_qubits: int = sim.DEFAULT_MAX_QUBITS) -> np.ndarray:
    """Final pre-measurement state; counting qubits 0..t-1, input register after them."""
    marks = np.asarray(marks, dtype=bool)
    n_inputs = int(marks.size).bit_length() - 1
    _check_width(t, n_inputs, max_qubits)
    width = t + n_inputs
    counting = list(range(t))
    inputs = list(range(t, width))
    # H on every qubit of |0...0>
    state = np.full(1 << width, 2.0 ** (-width / 2), dtype=np.complex128)
    for j in counting:
        sim.apply_controlled_grover(state, marks, inputs, control=j, power=1 << j)
    sim.apply_iqft(state, counting)
    return state


def statevector_distribution(marks: np.ndarray, t: int, max_qubits: int = sim.DEFAULT_MAX_QUBITS) -> np.ndarray:
    state = phase_estimation_state(marks, t, max_qubits)
    return sim.register_probabilities(state, list(range(t)))


def synthetic_marks(M: int, n_inputs: int, rng: np.random.Generator | int | None = None) -> np.ndarray:
    """Predicate table over 2^B inputs with exactly M marked entries."""
    rng = sim.make_rng(rng)
    marks = np.zeros(1 << n_inputs, dtype=bool)
    marks[rng.choice(1 << n_inputs, size=M, replace=False)] = True
    return marks


def total_variation(p: np.ndarray, q: np.ndarray) -> float:
    return 0.5 * float(np.abs(np.asarray(p) - np.asarray(q)).sum())


@dataclass
class CountingRun:
    """Outcome distribution for one instance, reusable across seeded draws."""

    inst: RamseyInstance
    w: int
    t: int
    probs: np.ndarray
    true_m: int | None = None

    def estimate(self, rng) -> CountEstimate:
        b = sim.sample_index(self.probs, sim.make_rng(rng))
        return make_estimate(b, self.t, self.inst.n_inputs, self.w, self.true_m)


def make_estimate(b: int, t: int, n_inputs: int, w: int, true_m: int | None = None) -> CountEstimate:
    theta, m_hat = decode_outcome(b, t, n_inputs)
    bound = error_bound(true_m, n_inputs, w) if true_m is not None else None
    return CountEstimate(b, theta, m_hat, verdict(m_hat), bound)


def prepare(inst: RamseyInstance, mode: Mode = "statevector", w: int | None = None,
            eps: float = DEFAULT_EPS, true_m: int | None = None,
            max_qubits: int = sim.DEFAULT_MAX_QUBITS, enum_cap: int = DEFAULT_ENUM_CAP) -> CountingRun:
    w, t = precision_params(inst.n_inputs, w, eps)
    if mode == "statevector":
        _check_width(t, inst.n_inputs, max_qubits)
        probs = statevector_distribution(solution_table(inst, enum_cap), t, max_qubits)
    elif mode == "analytic":
        if true_m is None:
            true_m = count_solutions(inst, enum_cap)
        probs = analytic_distribution(true_m, inst.n_inputs, t)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return CountingRun(inst, w, t, probs, true_m)


def estimate_count(inst: RamseyInstance, mode: Mode = "statevector", seed=None, **kwargs) -> CountEstimate:
    """One run of the counting circuit followed by a measurement of the counting register."""
    return prepare(inst, mode, **kwargs).estimate(seed)


def estimate_counts(inst: RamseyInstance, mode: Mode = "statevector", seed=None, runs: int = 1,
                    **kwargs) -> list[CountEstimate]:
    """``runs`` independent seeded runs; the pre-measurement state is computed once."""
    run = prepare(inst, mode, **kwargs)
    seeds = np.random.SeedSequence(seed).spawn(runs)
    return [run.estimate(np.random.default_rng(s)) for s in seeds]
