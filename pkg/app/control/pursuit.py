"""Direct-error pure pursuit for the four robot classes.

The deviation angle is signed: the tracking error is projected onto the
tangent plane and measured from the heading counter-clockwise about n_hat,
so a target on the robot's left gives a positive angle.
"""
import math
from dataclasses import dataclass, fields

import numpy as np

from app.models.enums import RobotClass
from app.models.robot import ActuationRates

E_EPSILON = 1e-9


@dataclass(frozen=True)
class Gains:
    k_theta: float = 5.0
    k_theta1: float = 5.0
    k_theta2: float = 0.5
    k_phi1: float = 5.0
    k_phi2: float = 0.5
    k_psi: float = 4.0
    k_alpha: float = 5.0
    k_phi: float = 2.0
    k_e: float = 1.0
    e_steer: float = 0.01

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"Gain {item.name} must be positive, got {value!r}")

    def as_dict(self):
        return {item.name: getattr(self, item.name) for item in fields(self)}


@dataclass(frozen=True, eq=False)
class TrackingSnapshot:
    e: np.ndarray
    zeta: float
    e_norm: float


def tracking_error(target, p0):
    return np.asarray(target, dtype=float) - np.asarray(p0, dtype=float)


def _triple(a, b, c):
    """(a x b) . c"""
    return ((a[1] * b[2] - a[2] * b[1]) * c[0]
            + (a[2] * b[0] - a[0] * b[2]) * c[1]
            + (a[0] * b[1] - a[1] * b[0]) * c[2])


def deviation_angle(e, heading, normal, e_epsilon=E_EPSILON):
    e = np.asarray(e, dtype=float)
    normal = np.asarray(normal, dtype=float)
    e_t = e - float(e @ normal) * normal
    if math.sqrt(float(e_t @ e_t)) < e_epsilon:
        return 0.0
    zeta = math.atan2(_triple(heading, e_t, normal), float(np.dot(heading, e_t)))
    if zeta <= -math.pi:
        zeta = math.pi
    return zeta


def snapshot(target, p0, transform, e_epsilon=E_EPSILON):
    """Tracking error and deviation angle with the heading and normal read off T_LW"""
    e = tracking_error(target, p0)
    e_norm = math.sqrt(float(e @ e))
    zeta = deviation_angle(e, transform.heading, transform.normal, e_epsilon)
    return TrackingSnapshot(e=e, zeta=zeta, e_norm=e_norm)


def error_gain(e_norm, k_e):
    return e_norm / (k_e + e_norm)


def _speed(desired_velocity):
    v = np.asarray(desired_velocity, dtype=float)
    return math.sqrt(float(v @ v))


def control_3r(snap, desired_velocity, gains, radius):
    g = error_gain(snap.e_norm, gains.k_e)
    sin_z = math.sin(snap.zeta)
    return ActuationRates(
        theta_dot=gains.k_theta * g * math.cos(snap.zeta) + _speed(desired_velocity) / radius,
        phi_dot=-(gains.k_phi1 * g * sin_z + gains.k_phi2 * sin_z),
        psi_dot=gains.k_psi * snap.zeta,
    )


def control_2r(snap, gains):
    # the k_theta2 term survives at zero error; kept as the law states it
    g = error_gain(snap.e_norm, gains.k_e)
    cos_z, sin_z = math.cos(snap.zeta), math.sin(snap.zeta)
    return ActuationRates(
        theta_dot=gains.k_theta1 * g * cos_z + gains.k_theta2 * cos_z,
        phi_dot=-(gains.k_phi1 * g * sin_z + gains.k_phi2 * sin_z),
        psi_dot=0.0,
    )


def control_rt(snap, desired_velocity, gains, radius):
    g = error_gain(snap.e_norm, gains.k_e)
    return ActuationRates(
        theta_dot=gains.k_theta * g * math.cos(snap.zeta) + _speed(desired_velocity) / radius,
        phi_dot=0.0,
        psi_dot=gains.k_psi * snap.zeta,
    )


def steering_angle(zeta):
    """Deviation folded onto whichever end of the robot faces the target.

    Equals zeta while the target is ahead and tends to 0 as the target comes
    directly behind, so it is continuous across the +/-pi wrap.
    """
    return math.asin(math.sin(zeta))


def control_rs(snap, desired_velocity, gains, radius):
    """Forward roll and tilt for an RS robot; its heading is driven, not commanded.

    Tilting by a negative phi turns the robot left while it rolls forward, so the
    tilt opposes the steering angle (turning sense: see ``app.sim.integrator``).
    The forward term is projected on the heading, so a target behind reverses the
    roll, and the tilt fades out within ``gains.e_steer`` of the target.
    """
    g = error_gain(snap.e_norm, gains.k_e)
    fade = snap.e_norm / (gains.e_steer + snap.e_norm)
    return ActuationRates(
        alpha_dot=(gains.k_alpha * g + _speed(desired_velocity) / radius) * math.cos(snap.zeta),
        phi_dot=-gains.k_phi * steering_angle(snap.zeta) * fade,
    )


def compute_rates(robot_class, snap, desired_velocity, gains, radius):
    if robot_class is RobotClass.THREE_R:
        return control_3r(snap, desired_velocity, gains, radius)
    if robot_class is RobotClass.TWO_R:
        return control_2r(snap, gains)
    if robot_class is RobotClass.RT:
        return control_rt(snap, desired_velocity, gains, radius)
    return control_rs(snap, desired_velocity, gains, radius)
