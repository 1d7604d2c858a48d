"""Closed-loop derivative and the fixed-step RK4 integrator.

The state vector is (x0, y0, z0, theta, phi, psi, alpha). {F_L} is the
tangent frame turned by -psi about n_hat, so a positive turn rate about the
normal decreases psi.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from app.control.pursuit import compute_rates, snapshot
from app.frames.contact import sample_from_slopes, transform_lw, velocity_to_world
from app.models.enums import RobotClass
from app.models.robot import RobotState
from app.robots.kinematics import body_velocity, effective_psi, heading_rate
from app.utils.errors import SimulationError

logger = logging.getLogger(__name__)

MAX_HALVINGS = 10


@dataclass(frozen=True, eq=False)
class Evaluation:
    """Everything the controller and kinematics produced at one (state, t)"""
    state: RobotState
    sample: object
    transform: object
    target: np.ndarray
    snapshot: object
    rates: object
    turn_rate: float
    vector: np.ndarray


@dataclass
class StepStats:
    max_correction: float = 0.0
    rejected_steps: int = 0


def _limit_tilt(scenario, state, rates):
    if scenario.robot_class is not RobotClass.RS:
        return rates
    if (state.phi >= scenario.phi_max and rates.phi_dot > 0) or \
            (state.phi <= -scenario.phi_max and rates.phi_dot < 0):
        return rates.replace(phi_dot=0.0)
    return rates


def evaluate(scenario, state, t):
    robot_class = scenario.robot_class
    fx, fy = scenario.surface.grad(state.x, state.y)
    sample = sample_from_slopes(fx, fy)
    transform = transform_lw(state.p0, sample, effective_psi(robot_class, state))
    target = scenario.path.position(t)
    snap = snapshot(target, state.p0, transform)
    rates = compute_rates(robot_class, snap, scenario.path.velocity(t), scenario.gains, scenario.radius)
    rates = _limit_tilt(scenario, state, rates)
    v_world = velocity_to_world(transform, body_velocity(robot_class, state, rates, scenario.radius))
    turn = heading_rate(robot_class, state, rates)
    vector = np.array([v_world[0], v_world[1], v_world[2],
                       rates.theta_dot, rates.phi_dot, -turn, rates.alpha_dot])
    return Evaluation(state=state, sample=sample, transform=transform, target=target,
                      snapshot=snap, rates=rates, turn_rate=turn, vector=vector)


def derivative(scenario, state, t):
    """Time derivative of the state vector under the class controller"""
    return evaluate(scenario, state, t).vector


def _rk4(scenario, vector, t, h, k1=None):
    def f(v, tau):
        return derivative(scenario, RobotState.from_vector(v, tau), tau)

    if k1 is None:
        k1 = f(vector, t)
    k2 = f(vector + 0.5 * h * k1, t + 0.5 * h)
    k3 = f(vector + 0.5 * h * k2, t + 0.5 * h)
    k4 = f(vector + h * k3, t + h)
    return vector + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _advance(scenario, state, t, dt, stats, depth, k1=None):
    trial = _rk4(scenario, state.as_vector(), t, dt, k1)
    surface_z = scenario.surface.eval(trial[0], trial[1])
    correction = abs(trial[2] - surface_z)
    if not math.isfinite(correction):
        raise SimulationError('State became non-finite', t=t)
    if correction > scenario.z_tol:
        if depth >= MAX_HALVINGS:
            raise SimulationError(
                f"Contact drift {correction:.3e} m exceeds z_tol after {MAX_HALVINGS} halvings", t=t)
        stats.rejected_steps += 1
        logger.debug(f"Rejected step at t={t:.6f} (dt={dt:.3e}, depth={depth}, drift={correction:.3e})")
        half = 0.5 * dt
        middle = _advance(scenario, state, t, half, stats, depth + 1)
        return _advance(scenario, middle, t + half, half, stats, depth + 1)
    stats.max_correction = max(stats.max_correction, correction)
    trial[2] = surface_z
    if scenario.robot_class is RobotClass.RS:
        trial[4] = min(scenario.phi_max, max(-scenario.phi_max, trial[4]))
    return RobotState.from_vector(trial, t + dt)


def rk4_step(scenario, state, t, dt, stats=None, k1=None):
    """One RK4 step followed by projection of z0 back onto the surface.

    A step whose projection distance exceeds ``scenario.z_tol`` is split into
    two half steps, recursively, at most ``MAX_HALVINGS`` levels deep.
    """
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}")
    return _advance(scenario, state, t, dt, stats if stats is not None else StepStats(), 0, k1)
