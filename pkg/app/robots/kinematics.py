"""Rolling kinematics of the four spherical robot classes.

Local velocities are expressed in {F_L}: x along the heading, y lateral,
z along the robot-side normal. The third component is always zero.
"""
import math

import numpy as np

from app.frames.contact import sample_surface, transform_lw, velocity_to_world
from app.models.enums import RobotClass
from app.utils.errors import ClassRateError, FrameConsistencyError

CENTER_TOLERANCE = 1e-12


def validate_rates(robot_class, rates):
    for name, value in rates.as_dict().items():
        if not math.isfinite(value):
            raise ClassRateError(f"{name} must be finite, got {value!r}")
    for name in robot_class.forbidden:
        value = getattr(rates, name)
        if value != 0.0:
            raise ClassRateError(f"{robot_class.value} robots cannot actuate {name} (got {value!r})")


def body_velocity(robot_class, state, rates, radius):
    validate_rates(robot_class, rates)
    if radius <= 0:
        raise ValueError(f"Sphere radius must be positive, got {radius}")
    if robot_class is RobotClass.RS:
        return np.array([radius * rates.alpha_dot * math.cos(state.phi), -radius * rates.phi_dot, 0.0])
    if robot_class is RobotClass.RT:
        return np.array([radius * rates.theta_dot, 0.0, 0.0])
    return np.array([radius * rates.theta_dot, -radius * rates.phi_dot, 0.0])


def effective_psi(robot_class, state):
    """2R robots never turn, so their heading angle is pinned to zero"""
    return 0.0 if robot_class is RobotClass.TWO_R else state.psi


def world_velocity(robot_class, state, rates, surface, radius):
    v_local = body_velocity(robot_class, state, rates, radius)
    sample = sample_surface(surface, state.x, state.y)
    transform = transform_lw(state.p0, sample, effective_psi(robot_class, state))
    return velocity_to_world(transform, v_local)


def heading_rate(robot_class, state, rates):
    """Turn rate about n_hat, right-handed.

    3R and RT take psi_dot from the controller, 2R never turns and RS turns
    through the normal component of its body angular velocity.
    """
    if robot_class is RobotClass.TWO_R:
        return 0.0
    if robot_class is RobotClass.RS:
        return -rates.alpha_dot * math.sin(state.phi)
    return rates.psi_dot


def rs_angular_velocity(state, rates):
    """Body angular velocity of an RS robot in {F_L}.

    Tilt about the heading, forward roll about the tilted transverse axis.
    """
    return np.array([
        rates.phi_dot,
        rates.alpha_dot * math.cos(state.phi),
        -rates.alpha_dot * math.sin(state.phi),
    ])


def center_point(state, sample, radius, transform=None):
    """Sphere center O_Sp, computed from n_hat and checked against T_LW column 3"""
    direct = state.p0 + radius * sample.n_hat
    if transform is None:
        transform = transform_lw(state.p0, sample, state.psi)
    via_transform = radius * transform.normal + transform.translation
    gap = float(np.max(np.abs(direct - via_transform)))
    if gap > CENTER_TOLERANCE:
        raise FrameConsistencyError(f"Center point routes disagree by {gap:.3e} m")
    return direct
