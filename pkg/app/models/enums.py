from enum import Enum


class RobotClass(Enum):
    THREE_R = '3R'
    TWO_R = '2R'
    RT = 'RT'
    RS = 'RS'

    @property
    def forbidden(self):
        """Rates that must stay exactly zero when handed to this class"""
        return _FORBIDDEN[self]

    @classmethod
    def from_label(cls, label):
        key = str(label).strip().upper()
        for member in cls:
            if key in (member.value, member.name, member.name.replace('_', '')):
                return member
        raise ValueError(f"Unknown robot class: {label}")


# RS turns through its tilt, so a psi_dot handed to it is ignored, not rejected
_FORBIDDEN = {
    RobotClass.THREE_R: ('alpha_dot',),
    RobotClass.TWO_R: ('psi_dot', 'alpha_dot'),
    RobotClass.RT: ('phi_dot', 'alpha_dot'),
    RobotClass.RS: ('theta_dot',),
}


class SurfaceKind(Enum):
    SINUSOIDAL = 'sinusoidal'
    PLANE = 'plane'


class PathName(Enum):
    BENCHMARK = 'benchmark'
    CIRCLE = 'circle'
    LINE = 'line'


class PathVariant(Enum):
    LITERAL = 'literal'
    SINE_CORRECTED = 'sine-corrected'
