import math
import unittest

import numpy as np
import numpy.testing as npt

from app.frames.contact import sample_from_slopes, transform_lw
from app.models.enums import RobotClass
from app.models.robot import ActuationRates, RobotState
from app.robots.kinematics import (
    body_velocity,
    center_point,
    heading_rate,
    rs_angular_velocity,
    validate_rates,
    world_velocity,
)
from app.terrain.surfaces import SinusoidalParams, make_plane, make_sinusoidal
from app.utils.errors import ClassRateError, FrameConsistencyError

R = 0.2


def state_at(surface, x, y, **angles):
    return RobotState(p0=(x, y, surface.eval(x, y)), **angles)


class BodyVelocityTestCase(unittest.TestCase):
    """Test local velocities for each robot class"""

    def setUp(self):
        self.state = RobotState(p0=(0.0, 0.0, 0.0))

    def test_three_r(self):
        """Test the 3R body velocity"""
        v = body_velocity(RobotClass.THREE_R, self.state, ActuationRates(theta_dot=1.0, phi_dot=0.5), R)
        npt.assert_allclose(v, [0.2, -0.1, 0.0], atol=1e-15)

    def test_rt(self):
        """Test the RT body velocity"""
        v = body_velocity(RobotClass.RT, self.state, ActuationRates(theta_dot=2.0), R)
        npt.assert_allclose(v, [0.4, 0.0, 0.0], atol=1e-15)

    def test_rs_uses_tilt(self):
        """Test that the RS forward speed shrinks with tilt"""
        state = self.state.replace(phi=math.pi / 3)
        v = body_velocity(RobotClass.RS, state, ActuationRates(alpha_dot=1.0), R)
        npt.assert_allclose(v, [0.1, 0.0, 0.0], atol=1e-15)

    def test_rest(self):
        """Test that zero rates give zero velocity"""
        for robot_class in RobotClass:
            with self.subTest(robot_class=robot_class):
                npt.assert_array_equal(body_velocity(robot_class, self.state, ActuationRates(), R), [0, 0, 0])

    def test_rs_matches_cross_product_oracle(self):
        """V = Omega x r with r = R n_hat expressed in the local frame"""
        rng = np.random.default_rng(4)
        for phi, phi_dot, alpha_dot in rng.uniform(-1, 1, size=(50, 3)):
            state = self.state.replace(phi=float(phi))
            rates = ActuationRates(phi_dot=float(phi_dot), alpha_dot=float(alpha_dot))
            omega = rs_angular_velocity(state, rates)
            npt.assert_allclose(body_velocity(RobotClass.RS, state, rates, R),
                                np.cross(omega, [0.0, 0.0, R]), atol=1e-15)


class ClassRateTestCase(unittest.TestCase):
    """Test that each class refuses rates it cannot produce"""

    def test_forbidden_rates(self):
        """Test that rates a class cannot drive are rejected"""
        state = RobotState(p0=(0.0, 0.0, 0.0))
        cases = [
            (RobotClass.TWO_R, ActuationRates(psi_dot=0.1)),
            (RobotClass.RT, ActuationRates(phi_dot=0.1)),
            (RobotClass.RS, ActuationRates(theta_dot=0.1)),
            (RobotClass.THREE_R, ActuationRates(alpha_dot=0.1)),
        ]
        for robot_class, rates in cases:
            with self.subTest(robot_class=robot_class):
                with self.assertRaises(ClassRateError):
                    body_velocity(robot_class, state, rates, R)

    def test_rs_ignores_psi_dot(self):
        """Test that the RS ignores a commanded turn rate"""
        validate_rates(RobotClass.RS, ActuationRates(alpha_dot=1.0, psi_dot=3.0))

    def test_non_finite_rates(self):
        """Test that non-finite rates are rejected"""
        with self.assertRaises(ClassRateError):
            validate_rates(RobotClass.THREE_R, ActuationRates(theta_dot=float('nan')))

    def test_world_velocity_propagates_violation(self):
        """Test that world_velocity checks the rates too"""
        surface = make_plane(0.0, 0.0)
        state = state_at(surface, 0.0, 0.0)
        with self.assertRaises(ClassRateError):
            world_velocity(RobotClass.TWO_R, state, ActuationRates(psi_dot=1.0), surface, R)


class WorldVelocityTestCase(unittest.TestCase):
    """Test world-frame velocities and the reductions between classes"""

    def setUp(self):
        self.surface = make_sinusoidal(SinusoidalParams(a=0.2, omega=2.0))
        self.rng = np.random.default_rng(42)

    def random_inputs(self, count=100):
        for x, y, psi, phi, theta_dot, phi_dot, psi_dot in self.rng.uniform(-3, 3, size=(count, 7)):
            yield (state_at(self.surface, float(x), float(y), psi=float(psi), phi=float(phi) / 4),
                   float(theta_dot), float(phi_dot), float(psi_dot))

    def test_flat_examples(self):
        """Test world velocities on a flat plane"""
        flat = make_plane(0.0, 0.0)
        v = world_velocity(RobotClass.THREE_R, state_at(flat, 0.0, 0.0),
                           ActuationRates(theta_dot=1.0), flat, R)
        npt.assert_allclose(v, [0.2, 0.0, 0.0], atol=1e-15)
        v = world_velocity(RobotClass.RS, state_at(flat, 0.0, 0.0, psi=math.pi / 2),
                           ActuationRates(alpha_dot=1.0), flat, R)
        npt.assert_allclose(v, [0.0, -0.2, 0.0], atol=1e-15)

    def test_incline_climbs(self):
        """Test that rolling up an incline gains height"""
        incline = make_plane(1.0, 0.0)
        v = world_velocity(RobotClass.THREE_R, state_at(incline, 0.0, 0.0),
                           ActuationRates(theta_dot=1.0), incline, R)
        npt.assert_allclose(v, [0.2 / math.sqrt(2), 0.0, 0.2 / math.sqrt(2)], atol=1e-15)

    def test_flat_three_r_is_classical_ball(self):
        """Test that a flat 3R rolls like a plain ball"""
        flat = make_plane(0.0, 0.0)
        for x, y, psi, theta_dot, phi_dot, psi_dot in self.rng.uniform(-3, 3, size=(100, 6)):
            state = state_at(flat, x, y, psi=psi)
            rates = ActuationRates(theta_dot=theta_dot, phi_dot=phi_dot, psi_dot=psi_dot)
            c, s = math.cos(psi), math.sin(psi)
            expected = [R * (theta_dot * c - phi_dot * s), -R * (theta_dot * s + phi_dot * c), 0.0]
            npt.assert_allclose(world_velocity(RobotClass.THREE_R, state, rates, flat, R), expected,
                                rtol=0, atol=1e-14)

    def test_two_r_is_three_r_without_turning(self):
        """Test that 2R matches 3R with no turn"""
        for state, theta_dot, phi_dot, _ in self.random_inputs():
            rates = ActuationRates(theta_dot=theta_dot, phi_dot=phi_dot)
            two_r = world_velocity(RobotClass.TWO_R, state, rates, self.surface, R)
            three_r = world_velocity(RobotClass.THREE_R, state.replace(psi=0.0), rates, self.surface, R)
            npt.assert_allclose(two_r, three_r, rtol=0, atol=1e-14)

    def test_rt_is_three_r_without_tilt(self):
        """Test that RT matches 3R with no tilt"""
        for state, theta_dot, _, psi_dot in self.random_inputs():
            rt = world_velocity(RobotClass.RT, state, ActuationRates(theta_dot=theta_dot, psi_dot=psi_dot),
                                self.surface, R)
            three_r = world_velocity(RobotClass.THREE_R, state,
                                     ActuationRates(theta_dot=theta_dot, psi_dot=psi_dot), self.surface, R)
            npt.assert_allclose(rt, three_r, rtol=0, atol=1e-14)

    def test_upright_rs_is_rt(self):
        """Test that an upright RS matches RT"""
        for state, theta_dot, _, _ in self.random_inputs():
            upright = state.replace(phi=0.0)
            rs = world_velocity(RobotClass.RS, upright, ActuationRates(alpha_dot=theta_dot), self.surface, R)
            rt = world_velocity(RobotClass.RT, upright, ActuationRates(theta_dot=theta_dot), self.surface, R)
            npt.assert_allclose(rs, rt, rtol=0, atol=1e-14)

    def test_tangency_and_speed(self):
        """Test that world velocities are tangent with the body speed"""
        for state, theta_dot, phi_dot, psi_dot in self.random_inputs():
            fx, fy = self.surface.grad(state.x, state.y)
            for robot_class, rates in (
                (RobotClass.THREE_R, ActuationRates(theta_dot=theta_dot, phi_dot=phi_dot, psi_dot=psi_dot)),
                (RobotClass.TWO_R, ActuationRates(theta_dot=theta_dot, phi_dot=phi_dot)),
                (RobotClass.RT, ActuationRates(theta_dot=theta_dot, psi_dot=psi_dot)),
                (RobotClass.RS, ActuationRates(alpha_dot=theta_dot, phi_dot=phi_dot)),
            ):
                v = world_velocity(robot_class, state, rates, self.surface, R)
                local = body_velocity(robot_class, state, rates, R)
                self.assertAlmostEqual(v[2], fx * v[0] + fy * v[1], delta=1e-12)
                self.assertAlmostEqual(np.linalg.norm(v), np.linalg.norm(local), delta=1e-12)


class HeadingRateTestCase(unittest.TestCase):
    """Test the turn rate about the normal"""

    def setUp(self):
        self.state = RobotState(p0=(0.0, 0.0, 0.0))

    def test_two_r_never_turns(self):
        """Test that the 2R turn rate is zero"""
        self.assertEqual(heading_rate(RobotClass.TWO_R, self.state, ActuationRates(theta_dot=3.0)), 0.0)

    def test_controller_supplies_turn_rate(self):
        """Test that 3R and RT turn at the commanded rate"""
        rates = ActuationRates(theta_dot=1.0, psi_dot=0.4)
        self.assertEqual(heading_rate(RobotClass.THREE_R, self.state, rates), 0.4)
        self.assertEqual(heading_rate(RobotClass.RT, self.state, rates), 0.4)

    def test_rs_turns_through_tilt(self):
        """Test the RS turn rate from roll and tilt"""
        tilted = self.state.replace(phi=math.pi / 6)
        self.assertAlmostEqual(heading_rate(RobotClass.RS, tilted, ActuationRates(alpha_dot=2.0)), -1.0,
                               places=15)
        self.assertEqual(heading_rate(RobotClass.RS, self.state, ActuationRates(alpha_dot=5.0)), -0.0)

    def test_rs_turn_is_normal_component_of_spin(self):
        """Test that the RS turn rate is the normal part of its spin"""
        tilted = self.state.replace(phi=0.3)
        rates = ActuationRates(alpha_dot=1.7, phi_dot=0.2)
        self.assertEqual(heading_rate(RobotClass.RS, tilted, rates), rs_angular_velocity(tilted, rates)[2])


class CenterPointTestCase(unittest.TestCase):
    """Test the sphere center point"""

    def test_flat(self):
        """Test the center point on a flat plane"""
        state = RobotState(p0=(0.0, 0.0, 0.0))
        npt.assert_allclose(center_point(state, sample_from_slopes(0.0, 0.0), R), [0.0, 0.0, 0.2])

    def test_incline(self):
        """Test the center point on an incline"""
        state = RobotState(p0=(1.0, 0.0, 1.0))
        expected = [1.0 - 0.2 / math.sqrt(2), 0.0, 1.0 + 0.2 / math.sqrt(2)]
        npt.assert_allclose(center_point(state, sample_from_slopes(1.0, 0.0), R), expected, atol=1e-15)

    def test_routes_agree_on_random_samples(self):
        """Test that both center routes agree on random samples"""
        rng = np.random.default_rng(8)
        for fx, fy, x, y, z, psi in rng.uniform(-5, 5, size=(100, 6)):
            state = RobotState(p0=(x, y, z), psi=psi)
            sample = sample_from_slopes(fx, fy)
            via_transform = transform_lw(state.p0, sample, psi).apply_point([0.0, 0.0, R])
            npt.assert_allclose(center_point(state, sample, R), via_transform, rtol=0, atol=1e-12)

    def test_inconsistent_transform_detected(self):
        """Test that a mismatched transform is reported"""
        state = RobotState(p0=(0.0, 0.0, 0.0))
        wrong = transform_lw(state.p0, sample_from_slopes(1.0, 0.0), 0.0)
        with self.assertRaises(FrameConsistencyError):
            center_point(state, sample_from_slopes(0.0, 0.0), R, transform=wrong)


if __name__ == '__main__':
    unittest.main()
