"""Contact-frame geometry on a surface z = f(x, y).

Every matrix entry is built from the slopes (fx, fy), the normal scale
``s_n = (1 + fx^2 + fy^2)^-1/2`` and ``q_c = s_n^2 / (1 + s_n)``. The last one
stays finite on flat ground, so the hot path never branches on degeneracy.
The axis/angle and quaternion routes exist for diagnostics and cross-checks.
"""
import math
from collections import OrderedDict
from dataclasses import dataclass

import numpy as np

from app.utils.errors import RollingContactError

EULER_EPSILON = 1e-12


@dataclass(frozen=True, eq=False)
class SurfaceSample:
    fx: float
    fy: float
    s_n: float
    q_c: float
    n_hat: np.ndarray


@dataclass(frozen=True, eq=False)
class EulerRotation:
    e_hat: np.ndarray
    gamma: float
    degenerate: bool


def sample_from_slopes(fx, fy):
    fx, fy = float(fx), float(fy)
    s_n = 1.0 / math.sqrt(1.0 + fx * fx + fy * fy)
    q_c = s_n * s_n / (1.0 + s_n)
    n_hat = np.array([-s_n * fx, -s_n * fy, s_n])
    return SurfaceSample(fx=fx, fy=fy, s_n=s_n, q_c=q_c, n_hat=n_hat)


def sample_surface(surface, x, y):
    """Local geometry of ``surface`` under the point (x, y)"""
    fx, fy = surface.grad(x, y)
    return sample_from_slopes(fx, fy)


def euler_rotation(sample):
    """Horizontal axis and angle of the single rotation taking z_W onto n_hat"""
    rho2 = sample.fx * sample.fx + sample.fy * sample.fy
    if rho2 <= EULER_EPSILON:
        return EulerRotation(e_hat=np.zeros(3), gamma=0.0, degenerate=True)
    rho = math.sqrt(rho2)
    e_hat = np.array([sample.fy / rho, -sample.fx / rho, 0.0])
    # both atan2 arguments carry the s_n factor so sin and cos stay consistent
    gamma = math.atan2(sample.s_n * rho, sample.s_n)
    return EulerRotation(e_hat=e_hat, gamma=gamma, degenerate=False)


def rotation_rodrigues(sample):
    fx, fy, s_n, q = sample.fx, sample.fy, sample.s_n, sample.q_c
    return np.array([
        [1.0 - q * fx * fx, -q * fx * fy, -s_n * fx],
        [-q * fx * fy, 1.0 - q * fy * fy, -s_n * fy],
        [s_n * fx, s_n * fy, s_n],
    ])


def rotation_axis_angle(sample):
    """I + sin(gamma) E + (1 - cos(gamma)) E^2 with E the cross matrix of e_hat"""
    rotation = euler_rotation(sample)
    if rotation.degenerate:
        return np.eye(3)
    ex, ey, ez = rotation.e_hat
    cross = np.array([
        [0.0, -ez, ey],
        [ez, 0.0, -ex],
        [-ey, ex, 0.0],
    ])
    return (np.eye(3) + math.sin(rotation.gamma) * cross
            + (1.0 - math.cos(rotation.gamma)) * cross @ cross)


def quaternion(sample):
    """Unit quaternion (q_r, q_i, q_j, q_k) of the Euler rotation; q_k is always 0"""
    rotation = euler_rotation(sample)
    if rotation.degenerate:
        return 1.0, 0.0, 0.0, 0.0
    half = 0.5 * rotation.gamma
    sin_half = math.sin(half)
    return (math.cos(half), rotation.e_hat[0] * sin_half,
            rotation.e_hat[1] * sin_half, rotation.e_hat[2] * sin_half)


def rotation_quaternion(sample):
    q0, q1, q2, q3 = quaternion(sample)
    return np.array([
        [1.0 - 2.0 * (q2 * q2 + q3 * q3), 2.0 * (q1 * q2 - q0 * q3), 2.0 * (q1 * q3 + q0 * q2)],
        [2.0 * (q1 * q2 + q0 * q3), 1.0 - 2.0 * (q1 * q1 + q3 * q3), 2.0 * (q2 * q3 - q0 * q1)],
        [2.0 * (q1 * q3 - q0 * q2), 2.0 * (q2 * q3 + q0 * q1), 1.0 - 2.0 * (q1 * q1 + q2 * q2)],
    ])


def tangent_axes(sample):
    """World-frame i_T and j_T = n_hat x i_T of the tangent frame"""
    i_t = rotation_rodrigues(sample)[:, 0]
    return i_t, np.cross(sample.n_hat, i_t)


class TransformLW:
    """Homogeneous transform from the local robot frame to the world frame.

    Column 1 of the rotation block is the heading, column 3 the robot-side
    normal and the translation column is the contact point.
    """

    __slots__ = ('a',)

    def __init__(self, matrix):
        self.a = np.asarray(matrix, dtype=float).reshape(4, 4)

    def element(self, i, j):
        """Entry a_ij with 1-based indices"""
        return float(self.a[i - 1, j - 1])

    @property
    def rotation(self):
        return self.a[:3, :3]

    @property
    def translation(self):
        return self.a[:3, 3]

    @property
    def heading(self):
        return self.a[:3, 0]

    @property
    def normal(self):
        return self.a[:3, 2]

    def apply_point(self, p_local):
        return (self.a @ np.append(np.asarray(p_local, dtype=float), 1.0))[:3]

    def __repr__(self):
        return f"TransformLW({self.a.tolist()})"


def transform_lw(p0, sample, psi):
    fx, fy, s_n, q = sample.fx, sample.fy, sample.s_n, sample.q_c
    c, s = math.cos(psi), math.sin(psi)
    qxy = q * fx * fy
    rxx = 1.0 - q * fx * fx
    ryy = 1.0 - q * fy * fy
    x0, y0, z0 = (float(v) for v in p0)
    return TransformLW([
        [rxx * c + qxy * s, rxx * s - qxy * c, -s_n * fx, x0],
        [-qxy * c - ryy * s, -qxy * s + ryy * c, -s_n * fy, y0],
        [s_n * (fx * c - fy * s), s_n * (fx * s + fy * c), s_n, z0],
        [0.0, 0.0, 0.0, 1.0],
    ])


def velocity_to_world(transform, v_local):
    g1, g2, w = (float(v) for v in v_local)
    if w != 0.0:
        raise RollingContactError(f"Local velocity has normal component {w!r}; rolling contact needs 0")
    # fourth homogeneous element is 0, so the translation column drops out
    return (transform.a @ np.array([g1, g2, 0.0, 0.0]))[:3]


def frames_report(surface, x, y, psi):
    """Every contact-frame quantity at (x, y) in display order"""
    sample = sample_surface(surface, x, y)
    rotation = euler_rotation(sample)
    r_rodrigues = rotation_rodrigues(sample)
    r_quaternion = rotation_quaternion(sample)
    i_t, j_t = tangent_axes(sample)
    p0 = (x, y, surface.eval(x, y))
    report = OrderedDict()
    report['surface'] = surface.label
    report['point'] = np.array(p0)
    report['psi'] = psi
    report['fx'] = sample.fx
    report['fy'] = sample.fy
    report['s_n'] = sample.s_n
    report['q_c'] = sample.q_c
    report['n_hat'] = sample.n_hat
    report['e_hat'] = rotation.e_hat
    report['gamma'] = rotation.gamma
    report['degenerate'] = rotation.degenerate
    report['i_T'] = i_t
    report['j_T'] = j_t
    report['R_Tr (rodrigues)'] = r_rodrigues
    report['R_Tr (quaternion)'] = r_quaternion
    report['R_Tr (axis-angle)'] = rotation_axis_angle(sample)
    report['T_LW'] = transform_lw(p0, sample, psi).a
    report['rodrigues vs quaternion'] = float(np.max(np.abs(r_rodrigues - r_quaternion)))
    return report
