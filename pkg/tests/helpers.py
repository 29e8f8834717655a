import math

import numpy as np

from hyperramsey import simulator as sim
from hyperramsey.circuit import build_grover_circuit


def grover_matrix_from_circuit(inst):
    """Matrix of the Grover circuit on the input register, output qubit projected on |->."""
    circ = build_grover_circuit(inst, prepare_output=True)
    B = inst.n_inputs
    out = circ.register("output").offset
    dim = 1 << B
    mat = np.zeros((dim, dim), dtype=complex)
    leak = 0.0
    for x in range(dim):
        state, _ = sim.run_circuit(circ, x)
        tensor = state.reshape(1 << (circ.width - B), dim)
        zero_anc = tensor[0]
        minus = tensor[1 << (out - B)]
        mat[:, x] = (zero_anc - minus) / math.sqrt(2)
        leak = max(leak, abs(1 - np.linalg.norm(mat[:, x])))
    return mat, leak


def grover_matrix_reference(marks):
    marks = np.asarray(marks, dtype=bool)
    dim = marks.size
    psi = np.full(dim, 1 / math.sqrt(dim))
    return (2 * np.outer(psi, psi) - np.eye(dim)) @ np.diag(np.where(marks, -1.0, 1.0))
