"""Smoke tests for the python bindings: wiring, not numerics."""

import math

import pytest

import pskrx


def test_alphabet_basics():
    alphabet = pskrx.PskAlphabet(4, 0.5)
    assert alphabet.m == 4
    assert alphabet.mean_photons() == pytest.approx(0.25)
    assert alphabet.prior(0) == pytest.approx(0.25)
    first = alphabet.amplitude(1)
    assert first.real == pytest.approx(0.0, abs=1e-15)
    assert first.imag == pytest.approx(0.5)


def test_engine_matches_closed_form():
    receiver = pskrx.baselines.analytic_receiver_qpsk()
    for alpha in (0.0, 0.3, 0.8, 1.2):
        engine = pskrx.success_probability(receiver, pskrx.PskAlphabet(4, alpha))
        closed = pskrx.baselines.analytic_success_qpsk(alpha)
        assert engine == pytest.approx(closed, abs=1e-12)


def test_baseline_ordering():
    helstrom = pskrx.baselines.helstrom_mpsk(4, 0.5)
    heterodyne = pskrx.baselines.heterodyne_qpsk(0.5)
    analytic = pskrx.baselines.analytic_success_qpsk(0.5)
    assert helstrom > analytic > heterodyne
    assert pskrx.baselines.heterodyne_mpsk(4, 0.5) == pytest.approx(heterodyne, abs=1e-10)


def test_optimize_small():
    settings = pskrx.OptimizerSettings()
    settings.starts = 4
    settings.seed = 1
    result = pskrx.optimize(pskrx.PskAlphabet(4, 0.4), 2, pskrx.NoiseModel.ideal(), settings)
    assert result.success >= pskrx.baselines.analytic_success_qpsk(0.4) - 1e-12
    assert result.success <= pskrx.baselines.helstrom_mpsk(4, 0.4) + 1e-9
    assert len(result.params.u) == 2
    assert math.isclose(sum(x * x for x in result.params.u), 1.0, abs_tol=1e-10)


def test_simulate_reproducible():
    plan = pskrx.TrialPlan()
    plan.shots_per_run = 2000
    plan.runs = 3
    plan.seed = 11
    alphabet = pskrx.PskAlphabet(4, 0.5)
    receiver = pskrx.baselines.analytic_receiver_qpsk()
    noise = pskrx.NoiseModel(efficiency=0.66, dark_prob=2.5e-3)
    first = pskrx.simulate(alphabet, receiver, noise, plan)
    second = pskrx.simulate(alphabet, receiver, noise, plan)
    assert first.success_estimate == second.success_estimate
    assert first.total_shots == 6000
    assert len(first.per_run) == 3
    assert sum(sum(row) for row in first.confusion) == 6000


def test_decode_table_shape():
    table = pskrx.build_decode_table(
        pskrx.baselines.analytic_receiver_qpsk(), pskrx.PskAlphabet(4, 0.8)
    )
    assert table.n_modes == 2
    assert len(table.entries) == 4
    assert all(0.0 <= entry.posterior <= 1.0 for entry in table.entries)
    pattern = pskrx.ClickPattern.from_mask(0, 2)
    decoded = pskrx.ml_decode(
        pskrx.baselines.analytic_receiver_qpsk(),
        pskrx.PskAlphabet(4, 0.8),
        pskrx.NoiseModel.ideal(),
        pattern,
    )
    assert decoded == table.entries[0].best_x


def test_validation_raises():
    with pytest.raises(ValueError):
        pskrx.PskAlphabet(1, 0.5).validate()
    with pytest.raises(ValueError):
        pskrx.NoiseModel(efficiency=0.0).validate()
