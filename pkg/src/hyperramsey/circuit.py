"""Gate/circuit representation and the oracle, Grover and counting circuit builders.

Gates are X, H, Z and E (= -I, a global phase) with an arbitrary list of
controls, each control either positive (fires on |1>) or negative (fires on
|0>). Two register-level instructions complete the set: ``iqft`` (inverse
quantum Fourier transform over a list of qubits, first listed qubit = least
significant) and ``measure``.

Text format, one instruction per line::

    qubits 18
    reg input 0 6
    h 3
    mcx +1 -2 0
    ce +4
    iqft 0 1 2
    measure 0 1 2
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .oracle import RamseyInstance, subset_bit_positions
from .errors import InfeasibleSizeError

X, H, Z, E, IQFT, MEASURE = "x", "h", "z", "e", "iqft", "measure"
GATE_KINDS = (X, H, Z, E)
BLOCK_KINDS = (IQFT, MEASURE)

DEFAULT_MAX_WIDTH = 4096
DEFAULT_MAX_GATES = 2_000_000
DEFAULT_EPS = 1 / 6

Control = tuple[int, bool]


@dataclass(frozen=True)
class Gate:
    """One instruction. ``controls`` pairs are (qubit, positive?)."""

    kind: str
    target: int | None = None
    controls: tuple[Control, ...] = ()
    qubits: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple((int(q), bool(p)) for q, p in self.controls))
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if self.kind in BLOCK_KINDS:
            if self.target is not None or self.controls:
                raise ValueError(f"{self.kind} takes a qubit list only")
            if len(set(self.qubits)) != len(self.qubits) or not self.qubits:
                raise ValueError(f"{self.kind} needs distinct qubits")
            return
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.qubits:
            raise ValueError("qubit list is only for iqft/measure")
        if self.kind == E:
            if self.target is not None:
                raise ValueError("E has no target")
        elif self.target is None:
            raise ValueError(f"{self.kind} needs a target")
        if self.kind == H and self.controls:
            raise ValueError("controlled H is not part of the gate set")
        ctrl = [q for q, _ in self.controls]
        if len(set(ctrl)) != len(ctrl) or self.target in ctrl:
            raise ValueError("control qubits must be distinct and differ from the target")

    def touched(self) -> tuple[int, ...]:
        out = [q for q, _ in self.controls] + list(self.qubits)
        if self.target is not None:
            out.append(self.target)
        return tuple(out)

    def with_control(self, qubit: int, positive: bool = True) -> "Gate":
        return Gate(self.kind, self.target, ((qubit, positive),) + self.controls, self.qubits)


def x(target: int, controls: Iterable[Control] = ()) -> Gate:
    return Gate(X, target, tuple(controls))


def z(target: int, controls: Iterable[Control] = ()) -> Gate:
    return Gate(Z, target, tuple(controls))


def h(target: int) -> Gate:
    return Gate(H, target)


def e(controls: Iterable[Control] = ()) -> Gate:
    return Gate(E, None, tuple(controls))


def pos(qubits: Iterable[int]) -> tuple[Control, ...]:
    return tuple((q, True) for q in qubits)


def neg(qubits: Iterable[int]) -> tuple[Control, ...]:
    return tuple((q, False) for q in qubits)


@dataclass(frozen=True)
class Register:
    name: str
    offset: int
    size: int

    @property
    def qubits(self) -> tuple[int, ...]:
        return tuple(range(self.offset, self.offset + self.size))


REGISTER_ORDER = (
    "counting", "input", "clique_ancilla", "clique_flag",
    "indep_ancilla", "indep_flag", "f_flag", "output",
)


@dataclass(frozen=True)
class RegisterLayout:
    """Register sizes of the counting circuit, in qubit order."""

    counting: int
    input: int
    clique_ancilla: int
    indep_ancilla: int
    clique_flag: int = 1
    indep_flag: int = 1
    f_flag: int = 1
    output: int = 1

    @classmethod
    def for_instance(cls, inst: RamseyInstance, counting: int = 0) -> "RegisterLayout":
        return cls(counting, inst.n_inputs, inst.n_clique_sets, inst.n_indep_sets)

    @property
    def total(self) -> int:
        return sum(getattr(self, name) for name in REGISTER_ORDER)

    @property
    def ancillas(self) -> int:
        return self.clique_ancilla + self.indep_ancilla + self.clique_flag + self.indep_flag + self.f_flag

    def registers(self) -> tuple[Register, ...]:
        out, offset = [], 0
        for name in REGISTER_ORDER:
            size = getattr(self, name)
            if size:
                out.append(Register(name, offset, size))
            offset += size
        return tuple(out)


@dataclass(frozen=True)
class Circuit:
    width: int
    registers: tuple[Register, ...] = ()
    gates: tuple[Gate, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "registers", tuple(self.registers))
        object.__setattr__(self, "gates", tuple(self.gates))
        for reg in self.registers:
            if reg.offset < 0 or reg.offset + reg.size > self.width:
                raise ValueError(f"register {reg.name} exceeds width {self.width}")
        for g in self.gates:
            if any(q < 0 or q >= self.width for q in g.touched()):
                raise ValueError(f"gate {g} exceeds width {self.width}")

    def register(self, name: str) -> Register:
        for reg in self.registers:
            if reg.name == name:
                return reg
        raise KeyError(name)

    def has_register(self, name: str) -> bool:
        return any(reg.name == name for reg in self.registers)


def precision_params(n_inputs: int, w: int | None = None, eps: float = DEFAULT_EPS) -> tuple[int, int]:
    """Accuracy bits ``w`` and counting-register size ``t`` for a B-bit search space.

    Defaults to w = ceil(B/2) + 1; t = w + ceil(log2(2 + 1/(2 eps))).
    """
    if not 0 < eps < 1:
        raise ValueError(f"eps must be in (0, 1), got {eps}")
    if w is None:
        w = (n_inputs + 1) // 2 + 1
    if w < 1:
        raise ValueError("w must be positive")
    target = 2 + 1 / (2 * eps)
    extra = 0
    while 2 ** extra < target:
        extra += 1
    return w, w + extra


def qubit_budget(inst: RamseyInstance, w: int | None = None, eps: float = DEFAULT_EPS) -> RegisterLayout:
    _, t = precision_params(inst.n_inputs, w, eps)
    return RegisterLayout.for_instance(inst, counting=t)


def closed_form_qubits(inst: RamseyInstance) -> int:
    """Closed-form qubit count ceil(3B/2) + B(N,m) + B(N,n) + 8 at the default precision."""
    return math.ceil(3 * inst.n_inputs / 2) + inst.n_clique_sets + inst.n_indep_sets + 8


def _check_width(layout: RegisterLayout, max_width: int) -> None:
    if layout.total > max_width:
        raise InfeasibleSizeError(f"circuit needs {layout.total} qubits; max width is {max_width}")


def _regs(layout: RegisterLayout) -> dict[str, Register]:
    regs = {r.name: r for r in layout.registers()}
    for name in REGISTER_ORDER:
        regs.setdefault(name, Register(name, 0, 0))
    return regs


def _compute_gates(inst: RamseyInstance, regs: dict[str, Register]) -> list[Gate]:
    """Gates computing the oracle value into f_flag (the part that gets mirrored)."""
    inputs = regs["input"].qubits
    gates = []
    clique_anc = regs["clique_ancilla"].qubits
    for anc, bits in zip(clique_anc, subset_bit_positions(inst.N, inst.m, inst.r)):
        gates.append(x(anc, pos(inputs[b] for b in bits)))
    gates.append(x(regs["clique_flag"].offset, neg(clique_anc)))
    indep_anc = regs["indep_ancilla"].qubits
    for anc, bits in zip(indep_anc, subset_bit_positions(inst.N, inst.n, inst.r)):
        gates.append(x(anc, neg(inputs[b] for b in bits)))
    gates.append(x(regs["indep_flag"].offset, neg(indep_anc)))
    gates.append(x(regs["f_flag"].offset, pos([regs["clique_flag"].offset, regs["indep_flag"].offset])))
    return gates


def _oracle_gates(inst: RamseyInstance, regs: dict[str, Register], control: int | None = None) -> list[Gate]:
    compute = _compute_gates(inst, regs)
    copy = x(regs["output"].offset, pos([regs["f_flag"].offset]))
    if control is not None:
        # compute/uncompute cancel when the control is off, so only the copy needs it
        copy = copy.with_control(control)
    return compute + [copy] + compute[::-1]


def _diffusion_gates(regs: dict[str, Register], control: int | None = None) -> list[Gate]:
    """2|psi><psi| - I on the input register: H^B, sign flip of |0..0>, E, H^B."""
    inputs = regs["input"].qubits
    if not inputs:
        return []
    last = inputs[-1]
    flip = z(last, neg(inputs[:-1]))
    phase = e()
    if control is not None:
        flip = flip.with_control(control)
        phase = phase.with_control(control)
    hs = [h(q) for q in inputs]
    return hs + [x(last), flip, x(last), phase] + hs


def _grover_gates(inst, regs, control=None) -> list[Gate]:
    return _oracle_gates(inst, regs, control) + _diffusion_gates(regs, control)


def _output_prep(regs) -> list[Gate]:
    out = regs["output"].offset
    return [x(out), h(out)]


def build_oracle_circuit(inst: RamseyInstance, max_width: int = DEFAULT_MAX_WIDTH) -> Circuit:
    """Reversible circuit mapping |x, 0.., y> to |x, 0.., y XOR f(x)>."""
    layout = RegisterLayout.for_instance(inst)
    _check_width(layout, max_width)
    return Circuit(layout.total, layout.registers(), _oracle_gates(inst, _regs(layout)))


def build_grover_circuit(inst: RamseyInstance, prepare_output: bool = True,
                         max_width: int = DEFAULT_MAX_WIDTH) -> Circuit:
    """One Grover iteration (diffusion after oracle).

    With ``prepare_output`` the output qubit is first taken from |0> to
    (|0> - |1>)/sqrt(2), which makes the oracle act as a sign flip.
    """
    layout = RegisterLayout.for_instance(inst)
    _check_width(layout, max_width)
    regs = _regs(layout)
    gates = (_output_prep(regs) if prepare_output else []) + _grover_gates(inst, regs)
    return Circuit(layout.total, layout.registers(), gates)


def counting_gate_count(inst: RamseyInstance, t: int) -> int:
    B = inst.n_inputs
    compute = inst.n_clique_sets + inst.n_indep_sets + 3
    body = 2 * compute + 1 + (2 * B + 4 if B else 0)
    return t + 2 + B + (2 ** t - 1) * body + 2


def build_counting_circuit(inst: RamseyInstance, w: int | None = None, eps: float = DEFAULT_EPS,
                           max_width: int = DEFAULT_MAX_WIDTH,
                           max_gates: int = DEFAULT_MAX_GATES) -> Circuit:
    """Phase estimation of the Grover iteration.

    Counting qubit j (0-based, qubit j of the circuit) controls 2^j Grover
    iterations, so after the inverse QFT the counting register read as an
    integer with qubit 0 as its least significant bit is the outcome b.
    """
    layout = qubit_budget(inst, w, eps)
    _check_width(layout, max_width)
    t = layout.counting
    n_gates = counting_gate_count(inst, t)
    if n_gates > max_gates:
        raise InfeasibleSizeError(f"counting circuit has {n_gates} gates; cap is {max_gates}")
    regs = _regs(layout)
    counting = regs["counting"].qubits
    gates = [h(q) for q in counting] + _output_prep(regs) + [h(q) for q in regs["input"].qubits]
    for j, ctrl in enumerate(counting):
        body = _grover_gates(inst, regs, control=ctrl)
        for _ in range(2 ** j):
            gates.extend(body)
    gates.append(Gate(IQFT, qubits=counting))
    gates.append(Gate(MEASURE, qubits=counting))
    return Circuit(layout.total, layout.registers(), gates)


def _fmt_controls(controls: Sequence[Control]) -> list[str]:
    return [("+" if p else "-") + str(q) for q, p in controls]


def format_gate(g: Gate) -> str:
    if g.kind in BLOCK_KINDS:
        return " ".join([g.kind, *map(str, g.qubits)])
    if g.kind == E:
        return " ".join(["ce", *_fmt_controls(g.controls)]) if g.controls else "e"
    if g.controls:
        return " ".join(["mc" + g.kind, *_fmt_controls(g.controls), str(g.target)])
    return f"{g.kind} {g.target}"


def serialize(circuit: Circuit) -> str:
    lines = [f"qubits {circuit.width}"]
    lines += [f"reg {r.name} {r.offset} {r.size}" for r in circuit.registers]
    lines += [format_gate(g) for g in circuit.gates]
    return "\n".join(lines) + "\n"


def _parse_controls(tokens: Sequence[str], lineno: int) -> tuple[Control, ...]:
    out = []
    for tok in tokens:
        if tok[:1] not in "+-" or not tok[1:].isdigit():
            raise ValueError(f"line {lineno}: bad control {tok!r}")
        out.append((int(tok[1:]), tok[0] == "+"))
    return tuple(out)


def parse_gate(line: str, lineno: int = 0) -> Gate:
    op, *args = line.split()
    if op in (X, H, Z):
        if len(args) != 1:
            raise ValueError(f"line {lineno}: {op} takes one qubit")
        return Gate(op, int(args[0]))
    if op == E:
        if args:
            raise ValueError(f"line {lineno}: e takes no arguments")
        return e()
    if op == "ce":
        return e(_parse_controls(args, lineno))
    if op in ("mcx", "mcz"):
        if not args:
            raise ValueError(f"line {lineno}: {op} needs a target")
        return Gate(op[2:], int(args[-1]), _parse_controls(args[:-1], lineno))
    if op in BLOCK_KINDS:
        return Gate(op, qubits=tuple(int(a) for a in args))
    raise ValueError(f"line {lineno}: unknown instruction {op!r}")


def parse(text: str) -> Circuit:
    width = None
    registers, gates = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        op, *args = line.split()
        if op == "qubits":
            width = int(args[0])
        elif op == "reg":
            registers.append(Register(args[0], int(args[1]), int(args[2])))
        else:
            gates.append(parse_gate(line, lineno))
    if width is None:
        raise ValueError("missing 'qubits' header")
    return Circuit(width, registers, gates)
