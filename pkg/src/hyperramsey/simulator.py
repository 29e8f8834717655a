"""Dense statevector simulator.

A state on q qubits is a complex128 numpy array of length 2**q. Qubit j is
bit j of the basis index (qubit 0 is the least significant bit). Kernels
work on the ``(2,) * q`` tensor view of the array, where qubit j lives on
axis ``q - 1 - j``; fixing control axes by integer indexing yields views,
so a gate touches only the amplitudes whose controls match.

Functions mutate the state in place and also return it.
"""
from __future__ import annotations

import math
from typing import Callable, Iterable, Sequence

import numpy as np

from .circuit import BLOCK_KINDS, Circuit, E, Gate, H, IQFT, MEASURE, X, Z
from .errors import InfeasibleSizeError

DEFAULT_MAX_QUBITS = 27
_SQRT1_2 = 1 / math.sqrt(2)

Predicate = Callable[[int], bool] | Sequence[bool] | np.ndarray


def n_qubits(state: np.ndarray) -> int:
    q = int(state.size).bit_length() - 1
    if state.ndim != 1 or 1 << q != state.size:
        raise ValueError("state length must be a power of two")
    return q


def zero_state(width: int, max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    return basis_state(width, 0, max_qubits)


def basis_state(width: int, index: int, max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    if width > max_qubits:
        raise InfeasibleSizeError(f"{width} qubits exceeds simulator cap of {max_qubits}")
    if not 0 <= index < 1 << width:
        raise ValueError(f"basis index {index} out of range for {width} qubits")
    state = np.zeros(1 << width, dtype=np.complex128)
    state[index] = 1.0
    return state


def _check_qubits(qubits: Iterable[int], width: int) -> None:
    for q in qubits:
        if not 0 <= q < width:
            raise ValueError(f"qubit {q} out of range for {width}-qubit state")


def _index(width: int, fixed: dict[int, int]) -> tuple:
    idx = [slice(None)] * width
    for q, v in fixed.items():
        idx[width - 1 - q] = v
    return tuple(idx)


def _control_view(state: np.ndarray, controls: Sequence[tuple[int, bool]]):
    """Tensor view restricted to matching controls, plus the qubit->axis map of what is left."""
    width = n_qubits(state)
    _check_qubits((q for q, _ in controls), width)
    tensor = state.reshape((2,) * width)
    fixed = {q: int(p) for q, p in controls}
    view = tensor[_index(width, fixed)]
    free = [q for q in range(width - 1, -1, -1) if q not in fixed]
    axis_of = {q: i for i, q in enumerate(free)}
    return view, axis_of


def _register_apply(state, qubits, controls, fn):
    """Run ``fn`` on a (rest, 2**k) matrix whose columns index the register value.

    ``qubits[0]`` is the least significant bit of the register value.
    """
    view, axis_of = _control_view(state, controls)
    _check_qubits(qubits, n_qubits(state))
    k = len(qubits)
    src = [axis_of[q] for q in reversed(qubits)]
    moved = np.moveaxis(view, src, list(range(view.ndim - k, view.ndim)))
    mat = moved.reshape(-1, 1 << k)
    moved[...] = fn(mat).reshape(moved.shape)
    return state


def apply_gate(state: np.ndarray, gate: Gate) -> np.ndarray:
    width = n_qubits(state)
    _check_qubits(gate.touched(), width)
    if gate.kind == IQFT:
        return apply_iqft(state, gate.qubits)
    if gate.kind == MEASURE:
        raise ValueError("measure needs an rng; use measure_register or run_circuit")
    view, axis_of = _control_view(state, gate.controls)
    if gate.kind == E:
        view *= -1
        return state
    ax = axis_of[gate.target]
    lo = [slice(None)] * view.ndim
    hi = list(lo)
    lo[ax], hi[ax] = 0, 1
    lo, hi = tuple(lo), tuple(hi)
    if gate.kind == X:
        a = view[lo].copy()
        view[lo] = view[hi]
        view[hi] = a
    elif gate.kind == Z:
        view[hi] *= -1
    elif gate.kind == H:
        a, b = view[lo].copy(), view[hi].copy()
        view[lo] = (a + b) * _SQRT1_2
        view[hi] = (a - b) * _SQRT1_2
    else:
        raise ValueError(f"unknown gate kind {gate.kind!r}")
    return state


def apply_iqft(state: np.ndarray, qubits: Sequence[int]) -> np.ndarray:
    """Inverse QFT: |k> -> 2^(-k/2) sum_b exp(-2 pi i k b / 2^k) |b>."""
    return _register_apply(state, qubits, (), lambda m: np.fft.fft(m, axis=1, norm="ortho"))


def _marks(predicate: Predicate, size: int) -> np.ndarray:
    if callable(predicate):
        return np.fromiter((bool(predicate(v)) for v in range(1 << size)), dtype=bool, count=1 << size)
    marks = np.asarray(predicate, dtype=bool)
    if marks.shape != (1 << size,):
        raise ValueError(f"predicate table must have {1 << size} entries, got {marks.shape}")
    return marks


def apply_phase_oracle(state: np.ndarray, predicate: Predicate, qubits: Sequence[int],
                       controls: Sequence[tuple[int, bool]] = ()) -> np.ndarray:
    """Negate amplitudes whose register value satisfies ``predicate``."""
    signs = np.where(_marks(predicate, len(qubits)), -1.0, 1.0)
    return _register_apply(state, qubits, controls, lambda m: m * signs)


def _reflect_about_mean(m: np.ndarray) -> np.ndarray:
    return 2 * m.mean(axis=1, keepdims=True) - m


def apply_diffusion(state: np.ndarray, qubits: Sequence[int],
                    controls: Sequence[tuple[int, bool]] = ()) -> np.ndarray:
    """Apply 2|psi><psi| - I on the register (a -> 2 mean - a), blockwise."""
    return _register_apply(state, qubits, controls, _reflect_about_mean)


def apply_controlled_grover(state: np.ndarray, predicate: Predicate, qubits: Sequence[int],
                            control: int, power: int = 1) -> np.ndarray:
    """Apply (diffusion . phase oracle)^power where ``control`` is |1>."""
    signs = np.where(_marks(predicate, len(qubits)), -1.0, 1.0)

    def body(m):
        for _ in range(power):
            m = m * signs
            m = 2 * m.mean(axis=1, keepdims=True) - m
        return m

    return _register_apply(state, qubits, [(control, True)], body)


def register_probabilities(state: np.ndarray, qubits: Sequence[int]) -> np.ndarray:
    view = np.moveaxis(state.reshape((2,) * n_qubits(state)),
                       [n_qubits(state) - 1 - q for q in reversed(qubits)],
                       list(range(n_qubits(state) - len(qubits), n_qubits(state))))
    probs = (np.abs(view.reshape(-1, 1 << len(qubits))) ** 2).sum(axis=0)
    return probs


def make_rng(seed: int | np.random.Generator | None) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def sample_index(probs: np.ndarray, rng: np.random.Generator) -> int:
    """Inverse-CDF draw from one uniform variate."""
    cdf = np.cumsum(probs)
    u = rng.random() * cdf[-1]
    return int(min(np.searchsorted(cdf, u, side="right"), len(probs) - 1))


def measure_register(state: np.ndarray, qubits: Sequence[int],
                     rng: int | np.random.Generator | None = None) -> tuple[int, np.ndarray]:
    """Sample the register value and collapse the state onto it."""
    _check_qubits(qubits, n_qubits(state))
    rng = make_rng(rng)
    probs = register_probabilities(state, qubits)
    outcome = sample_index(probs, rng)
    keep = np.zeros(1 << len(qubits), dtype=bool)
    keep[outcome] = True
    _register_apply(state, qubits, (), lambda m: np.where(keep, m, 0))
    state /= math.sqrt(probs[outcome])
    return outcome, state


def run_circuit(circuit: Circuit, initial: int | np.ndarray = 0,
                seed: int | np.random.Generator | None = None,
                max_qubits: int = DEFAULT_MAX_QUBITS) -> tuple[np.ndarray, list[int]]:
    """Apply every instruction in order; returns the final state and measurement outcomes."""
    if isinstance(initial, np.ndarray):
        if initial.size != 1 << circuit.width:
            raise ValueError("initial state does not match circuit width")
        state = initial.astype(np.complex128, copy=True)
    else:
        state = basis_state(circuit.width, initial, max_qubits)
    rng = make_rng(seed)
    outcomes = []
    for g in circuit.gates:
        if g.kind == MEASURE:
            b, state = measure_register(state, g.qubits, rng)
            outcomes.append(b)
        else:
            apply_gate(state, g)
    return state, outcomes


def dump_state(state: np.ndarray, cutoff: float = 1e-12) -> str:
    lines = []
    for i in np.flatnonzero(np.abs(state) > cutoff):
        a = state[i]
        lines.append(f"{i} {a.real:.17g} {a.imag:.17g}")
    return "\n".join(lines) + ("\n" if lines else "")
