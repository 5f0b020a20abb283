"""Smoke tests for the Python bindings: thin checks that the compiled module
exposes the main operations and matches the headline numbers. The exhaustive
suites live in the C++ tests."""

import math

import numpy as np
import pytest

import paritydistill as pd

SQRT_HALF = 1 / math.sqrt(2)


def test_basis_sizes():
    assert len(pd.basis_occupancies("boson")) == 10
    assert len(pd.basis_occupancies("fermion")) == 6
    assert pd.basis_occupancies("boson")[0] == (2, 0, 0, 0)


def test_named_states():
    assert pd.named_labels("fermion") == ["1-LR", "1+LR", "2-LR", "2+LR", "1-NO", "1+NO"]
    singlet = pd.named_state("1-LR", "fermion")
    assert singlet.shape == (6,)
    assert np.isclose(np.linalg.norm(singlet), 1.0)
    with pytest.raises(pd.SimulatorError):
        pd.named_state("U+NO", "fermion")


def test_beam_splitter_table():
    bs = pd.lift("BS", "fermion")
    singlet = pd.named_state("1-LR", "fermion")
    noon = pd.named_state("1-NO", "fermion")
    assert np.allclose(bs @ singlet, noon, atol=1e-12)
    triplet = pd.named_state("1+LR", "fermion")
    assert np.allclose(bs @ triplet, -triplet, atol=1e-12)


def test_disturbance_probability():
    assert pd.disturbance_probability(0.0) == 0.0
    assert abs(pd.disturbance_probability(3 * math.pi / 2) - 1.0) < 1e-12


def test_channel_and_detector():
    rho = np.outer(pd.named_state("1-LR", "fermion"), pd.named_state("1-LR", "fermion").conj())
    evolved = pd.evolve("dep", rho, 1.0, "fermion")
    assert np.allclose(evolved, pd.reset_depolarize("fermion"), atol=1e-12)
    measurement = pd.parity_measure(evolved, "fermion")
    assert np.isclose(measurement["odd"]["probability"] + measurement["even"]["probability"], 1.0)


def test_protocol_closed_form():
    run = pd.run_exact("reset-dep", "fermion", iterations=10)
    last = run["iterations"][-1]
    assert abs(last["cumulative_success"] - (1 - 0.75**10)) < 1e-12
    assert last["target_label"] == "1-NO"

    odd, even = pd.closed_form_probabilities("pd", "boson", SQRT_HALF, math.pi, 0.3)
    assert abs(odd - (0.5 + 0.7 / 2)) < 1e-12
    assert abs(odd + even - 1.0) < 1e-12

    rho_bs = pd.post_bs_state("pd", "boson", SQRT_HALF, math.pi, 0.3)
    m = pd.parity_measure(rho_bs, "boson")
    assert abs(m["odd"]["probability"] - odd) < 1e-12


def test_monte_carlo_reproducible():
    a = pd.run_monte_carlo("reset-ad", "fermion", trials=2000, seed=7, iterations=5)
    b = pd.run_monte_carlo("reset-ad", "fermion", trials=2000, seed=7, iterations=5)
    assert a["empirical"] == b["empirical"]
    assert abs(a["empirical"][0]["success_freq"] - 0.5) < 0.05


def test_po_reachability():
    reached = pd.po_reach_labels("1-LR", "fermion", depth=4)
    assert set(reached) == {"1-LR", "1+LR", "2-LR", "2+LR", "1-NO", "1+NO"}
    report = pd.verify_stated_edges("fermion")
    assert report["all_pass"]
    components = pd.po_components("boson", depth=3)
    assert components["1-LR"] != components["U+NO"]


def test_sweep_csv_header():
    csv = pd.sweep_csv("pd", "boson", a_steps=2, t_steps=3, phis=[0.0])
    header = csv.splitlines()[0]
    assert header.startswith("statistics,channel,a,phi,gamma,lambda,t,p_disturb")
    assert len(csv.splitlines()) == 1 + 2 * 1 * 3
