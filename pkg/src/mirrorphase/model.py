"""Dissipative model of a two-level particle moving parallel to an imperfect mirror.

Everything here is dimensionless: ``gamma0`` couples the qubit to the
vacuum field, ``lambda_tilde`` couples the vacuum field to the plate
oscillators, ``omega_tilde`` and ``omega0_tilde`` are frequencies scaled by
the particle-plate distance, and ``velocity`` is a fraction of the speed of
light. Time ``s`` is measured in units of the inverse qubit level
splitting, so one isolated precession period is ``s = 2*pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NoDecoherenceError
from .numerics import find_root_bracketed


@dataclass(frozen=True)
class ModelParams:
    """Physical couplings and dimensionless frequencies of the friction model.

    ``omega0_tilde`` only enters the in-out action and defaults to 1; all
    other fields must be supplied explicitly.
    """

    gamma0: float
    lambda_tilde: float
    omega_tilde: float
    velocity: float
    omega0_tilde: float = 1.0

    def __post_init__(self) -> None:
        if not self.gamma0 >= 0.0:
            raise DomainError(f"gamma0 must be >= 0, got {self.gamma0}")
        if not self.lambda_tilde >= 0.0:
            raise DomainError(f"lambda_tilde must be >= 0, got {self.lambda_tilde}")
        if not self.omega_tilde > 0.0:
            raise DomainError(f"omega_tilde must be > 0, got {self.omega_tilde}")
        if not self.omega0_tilde > 0.0:
            raise DomainError(f"omega0_tilde must be > 0, got {self.omega0_tilde}")
        if not 0.0 <= self.velocity < 1.0:
            raise DomainError(
                f"velocity must lie in [0, 1); got {self.velocity} "
                "(the influence action diverges as 1/(1 - velocity^2))")


def _require_time(s: float) -> None:
    if not s >= 0.0:
        raise DomainError(f"time must be >= 0, got {s}")


def velocity_damping(velocity: float, omega_tilde: float) -> float:
    """exp(-(2*omega_tilde/velocity)*sqrt(1 - velocity^2)), continued to 0 at rest.

    The exponential suppression beats every inverse power of the velocity,
    so the limit at velocity = 0 is exactly 0.
    """
    if velocity == 0.0:
        return 0.0
    return math.exp(-(2.0 * omega_tilde / velocity) * math.sqrt(1.0 - velocity * velocity))


def friction_factor(params: ModelParams) -> float:
    """Velocity-dependent plate contribution to the dephasing rate.

    lambda_tilde^2 * v * exp(-(2*omega_tilde/v)*sqrt(1-v^2)) / (1-v^2);
    zero at v = 0 or lambda_tilde = 0, strictly increasing in v otherwise.
    """
    v = params.velocity
    lam2 = params.lambda_tilde * params.lambda_tilde
    return lam2 * v * velocity_damping(v, params.omega_tilde) / (1.0 - v * v)


def dephasing_multiplier(params: ModelParams) -> float:
    """Dimensionless bracket multiplying gamma0*s/2 in the influence action."""
    v = params.velocity
    return 1.0 + (2.0 / 3.0) * v * v + friction_factor(params)


def im_influence_action(params: ModelParams, s: float) -> float:
    """Imaginary part of the influence action accumulated up to time ``s``.

    Linear in ``s``: (gamma0*s/2) * (1 + (2/3)v^2 + friction_factor).
    """
    _require_time(s)
    return 0.5 * params.gamma0 * s * dephasing_multiplier(params)


def decoherence_factor(params: ModelParams, s: float) -> float:
    """Multiplicative decay r(s) of the density-matrix off-diagonals.

    r = exp(-im_influence_action); equal to 1 at s = 0 and strictly
    decreasing in ``s`` whenever gamma0 > 0. Mathematically positive, but
    underflows to 0.0 once the action exceeds ~745; consumers that need
    r > 0 reject that edge explicitly.
    """
    return math.exp(-im_influence_action(params, s))


def decoherence_time(params: ModelParams) -> float:
    """Time at which the influence action reaches unity.

    Solved with a generic bracketing root-finder (so the operation survives
    future non-linear models) and checked against the analytic inversion of
    the linear action, 2 / (gamma0 * multiplier).
    """
    if params.gamma0 <= 0.0:
        raise NoDecoherenceError(
            "gamma0 = 0: the influence action stays at 0 and never reaches 1")
    root = find_root_bracketed(lambda s: im_influence_action(params, s) - 1.0,
                               xtol=1e-12)
    analytic = 2.0 / (params.gamma0 * dephasing_multiplier(params))
    if abs(root - analytic) > 1e-9 * max(1.0, abs(analytic)):
        raise RuntimeError(
            f"root finder ({root}) disagrees with the analytic inversion ({analytic})")
    return root


def im_inout_action(params: ModelParams, flight_time: float) -> float:
    """Imaginary part of the in-out effective action for a flight of given duration.

    Signals excitation of the mirror degrees of freedom (non-contact
    friction). Provided for completeness; it does not feed the geometric
    phase. The squared plate coupling is reconstructed as
    lambda_tilde^2 * omega_tilde^3.
    """
    _require_time(flight_time)
    v = params.velocity
    if v == 0.0 or params.gamma0 == 0.0:
        return 0.0
    freq_sum = params.omega0_tilde + params.omega_tilde
    denom = freq_sum * freq_sum - v * v * params.omega_tilde * params.omega_tilde
    if not denom > 0.0:
        raise DomainError(
            "(omega0_tilde + omega_tilde)^2 - velocity^2 * omega_tilde^2 must be > 0")
    lam2 = params.lambda_tilde * params.lambda_tilde * params.omega_tilde ** 3
    prefactor = (flight_time * v * math.pi * lam2 * params.gamma0
                 / (32.0 * params.omega_tilde * params.omega0_tilde))
    return prefactor * math.exp(-(2.0 / v) * math.sqrt(denom)) / denom
