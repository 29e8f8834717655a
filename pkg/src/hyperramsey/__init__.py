"""Two-color hypergraph Ramsey numbers via simulated quantum counting."""
from .circuit import (
    Circuit, Gate, Register, RegisterLayout, build_counting_circuit, build_grover_circuit,
    build_oracle_circuit, parse, qubit_budget, serialize,
)
from .counting import CountEstimate, analytic_distribution, decode_outcome, error_bound, estimate_count, verdict
from .driver import DriverConfig, RamseyResult, compute_ramsey
from .encoding import Hypergraph, binomial, decode, encode, rank_subset, unrank_subset
from .errors import InconclusiveError, InfeasibleSizeError
from .oracle import (
    RamseyInstance, clique_count, cost, count_solutions, independent_count, oracle_bit, ramsey_classical,
)

__version__ = "0.1.0"
