import json

import pytest

from hyperramsey.driver import DriverConfig, compute_ramsey, default_lower_bound
from hyperramsey.errors import InconclusiveError, InfeasibleSizeError


def test_config_validation():
    with pytest.raises(ValueError):
        DriverConfig(repetitions=4)
    with pytest.raises(ValueError):
        DriverConfig(mode="adiabatic")
    with pytest.raises(ValueError):
        DriverConfig(lower_bound=0)


def test_default_lower_bound():
    assert default_lower_bound(3, 3) == 2
    assert default_lower_bound(2, 2) == 1
    assert default_lower_bound(4, 6) == 5


@pytest.mark.parametrize("mode", ["classical", "analytic", "statevector"])
def test_r222(mode):
    assert compute_ramsey(2, 2, 2, DriverConfig(mode=mode, lower_bound=1)).R == 2


def test_r332_analytic_and_classical():
    for mode in ("classical", "analytic"):
        result = compute_ramsey(3, 3, 2, DriverConfig(mode=mode, lower_bound=2))
        assert result.R == 6
        assert [s.N for s in result.steps] == [3, 4, 5, 6]
        assert [s.majority for s in result.steps] == ["positive"] * 3 + ["zero"]


@pytest.mark.parametrize("k", range(2, 6))
def test_trivial_diagonals_agree(k):
    for m, n in ((2, k), (k, 2)):
        classical = compute_ramsey(m, n, 2, DriverConfig(mode="classical", lower_bound=1)).R
        analytic = compute_ramsey(m, n, 2, DriverConfig(mode="analytic", lower_bound=1, seed=k)).R
        assert classical == analytic == k


def test_hypergraph_instance_agrees():
    # R(3,3;3) = 3: every 3-uniform hypergraph on 3 vertices has the single triple or not
    for mode in ("classical", "analytic", "statevector"):
        assert compute_ramsey(3, 3, 3, DriverConfig(mode=mode, lower_bound=1)).R == 3


def test_deterministic_given_seed():
    a = compute_ramsey(3, 3, 2, DriverConfig(seed=42)).to_dict()
    b = compute_ramsey(3, 3, 2, DriverConfig(seed=42)).to_dict()
    assert a == b


def test_transcript_schema():
    result = compute_ramsey(3, 3, 2, DriverConfig(seed=1))
    doc = json.loads(result.to_json())
    assert set(doc) == {"m", "n", "r", "mode", "seed", "steps", "R"}
    assert doc["R"] == 6
    for step in doc["steps"]:
        assert set(step) == {"N", "runs", "majority"}
        assert len(step["runs"]) == 5
        for run in step["runs"]:
            assert set(run) == {"b", "M_hat", "verdict"}


def test_positive_verdict_rate_below_r():
    counts = positive = 0
    for seed in range(20):
        result = compute_ramsey(3, 3, 2, DriverConfig(seed=seed))
        for step in result.steps:
            if step.N < 6:
                counts += len(step.runs)
                positive += sum(r["verdict"] == "positive" for r in step.runs)
    assert positive / counts >= 5 / 6


def test_inconclusive_carries_transcript():
    with pytest.raises(InconclusiveError) as info:
        compute_ramsey(3, 3, 2, DriverConfig(mode="classical", lower_bound=2, n_max=4))
    assert [s.N for s in info.value.transcript.steps] == [3, 4]


def test_r443_is_infeasible():
    with pytest.raises(InfeasibleSizeError):
        compute_ramsey(4, 4, 3, DriverConfig(mode="analytic"))
