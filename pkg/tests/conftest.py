"""Shared fixtures: the fixed parameter sets used by the figure presets."""

import pytest

from mirrorphase import ModelParams


def params_fig2(velocity: float) -> ModelParams:
    return ModelParams(gamma0=0.05, lambda_tilde=5.0, omega_tilde=0.03, velocity=velocity)


def params_fig6(velocity: float) -> ModelParams:
    return ModelParams(gamma0=0.05, lambda_tilde=1.0, omega_tilde=0.03, velocity=velocity)


def params_fig7(velocity: float) -> ModelParams:
    return ModelParams(gamma0=0.5, lambda_tilde=5.0, omega_tilde=0.03, velocity=velocity)


@pytest.fixture
def fig2():
    return params_fig2


@pytest.fixture
def fig6():
    return params_fig6


@pytest.fixture
def fig7():
    return params_fig7
