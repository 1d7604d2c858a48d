import math
from dataclasses import dataclass, field, replace

from app.control.pursuit import Gains
from app.models.enums import RobotClass
from app.models.robot import RobotState

DEFAULT_PHI_MAX = math.pi / 4
DEFAULT_Z_TOL = 1e-6
DEFAULT_START = (0.5, -0.5)


def initial_state_on(surface, x=DEFAULT_START[0], y=DEFAULT_START[1], **angles):
    """A resting state whose contact point sits exactly on ``surface``"""
    return RobotState(p0=(x, y, surface.eval(x, y)), **angles)


@dataclass(frozen=True)
class Scenario:
    surface: object
    robot_class: RobotClass
    radius: float
    path: object
    initial_state: RobotState
    gains: Gains = field(default_factory=Gains)
    t_end: float = 100.0
    dt: float = 0.01
    phi_max: float = DEFAULT_PHI_MAX
    z_tol: float = DEFAULT_Z_TOL
    label: str = ''

    def __post_init__(self):
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise ValueError(f"dt must be positive, got {self.dt}")
        if not (self.t_end > 0 and math.isfinite(self.t_end)):
            raise ValueError(f"t_end must be positive, got {self.t_end}")
        if not self.radius > 0:
            raise ValueError(f"Sphere radius must be positive, got {self.radius}")
        if not (0 < self.phi_max <= math.pi / 2):
            raise ValueError(f"phi_max must lie in (0, pi/2], got {self.phi_max}")
        if not self.z_tol > 0:
            raise ValueError(f"z_tol must be positive, got {self.z_tol}")
        state = self.initial_state
        gap = abs(state.z - self.surface.eval(state.x, state.y))
        if gap > self.z_tol:
            raise ValueError(f"Initial contact point is {gap:.3e} m off the surface")
        if self.robot_class is RobotClass.TWO_R and state.psi != 0.0:
            raise ValueError("2R robots cannot turn; initial psi must be 0")
        if self.robot_class is RobotClass.RS and abs(state.phi) > self.phi_max:
            raise ValueError(f"Initial tilt {state.phi} exceeds phi_max {self.phi_max}")

    @property
    def step_count(self):
        return int(math.floor(self.t_end / self.dt + 1e-9))

    def for_class(self, robot_class):
        """Same scenario for another class, with the start state made legal for it"""
        state = self.initial_state
        if robot_class is RobotClass.TWO_R:
            state = state.replace(psi=0.0)
        if robot_class is RobotClass.RS:
            state = state.replace(phi=max(-self.phi_max, min(self.phi_max, state.phi)))
        return replace(self, robot_class=robot_class, initial_state=state)
