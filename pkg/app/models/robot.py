"""Robot state and actuation value types."""
from dataclasses import dataclass, replace

import numpy as np


@dataclass(frozen=True, eq=False)
class RobotState:
    """Contact point plus orientation angles at time ``t``.

    theta, phi and alpha are unbounded accumulators; psi is only wrapped
    when it is reported.
    """
    p0: np.ndarray
    theta: float = 0.0
    phi: float = 0.0
    psi: float = 0.0
    alpha: float = 0.0
    t: float = 0.0

    def __post_init__(self):
        p0 = np.array(self.p0, dtype=float).reshape(3)
        object.__setattr__(self, 'p0', p0)

    @property
    def x(self):
        return float(self.p0[0])

    @property
    def y(self):
        return float(self.p0[1])

    @property
    def z(self):
        return float(self.p0[2])

    def as_vector(self):
        return np.array([self.p0[0], self.p0[1], self.p0[2],
                         self.theta, self.phi, self.psi, self.alpha])

    @classmethod
    def from_vector(cls, vector, t):
        return cls(p0=vector[:3], theta=float(vector[3]), phi=float(vector[4]),
                   psi=float(vector[5]), alpha=float(vector[6]), t=float(t))

    def replace(self, **changes):
        return replace(self, **changes)

    def __eq__(self, other):
        if not isinstance(other, RobotState):
            return NotImplemented
        return self.t == other.t and np.array_equal(self.as_vector(), other.as_vector())

    def __repr__(self):
        return (f"RobotState(p0={self.p0.tolist()}, theta={self.theta}, phi={self.phi}, "
                f"psi={self.psi}, alpha={self.alpha}, t={self.t})")


@dataclass(frozen=True)
class ActuationRates:
    """Angular rates in rad/s; rates a class does not use stay at zero"""
    theta_dot: float = 0.0
    phi_dot: float = 0.0
    psi_dot: float = 0.0
    alpha_dot: float = 0.0

    def as_dict(self):
        return {'theta_dot': self.theta_dot, 'phi_dot': self.phi_dot,
                'psi_dot': self.psi_dot, 'alpha_dot': self.alpha_dot}

    def replace(self, **changes):
        return replace(self, **changes)
