import math

TWO_PI = 2.0 * math.pi


def format_float(value):
    """Render a float with 17 significant digits so it parses back exactly"""
    return format(float(value), '.17g')


def wrap_angle(angle):
    """Wrap an angle to (-pi, pi]"""
    wrapped = math.remainder(angle, TWO_PI)
    if wrapped <= -math.pi:
        wrapped += TWO_PI
    return wrapped
