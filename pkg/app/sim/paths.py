"""Built-in desired paths."""
import math

from app.control.paths import DesiredPath
from app.models.enums import PathName, PathVariant

BENCHMARK_AMPLITUDE = 2.0
BENCHMARK_RATE = 0.05


def make_benchmark_path(surface, variant=PathVariant.SINE_CORRECTED,
                        amplitude=BENCHMARK_AMPLITUDE, rate=BENCHMARK_RATE):
    """Slow loop of radius ``amplitude`` around the origin.

    The literal variant drives x and y with the same cosine, which collapses
    the loop into a back-and-forth run along the diagonal.
    """
    variant = PathVariant(variant)

    if variant is PathVariant.LITERAL:
        def planar(t):
            c = amplitude * math.cos(rate * t)
            v = -amplitude * rate * math.sin(rate * t)
            return c, c, v, v
    else:
        def planar(t):
            return (amplitude * math.cos(rate * t), amplitude * math.sin(rate * t),
                    -amplitude * rate * math.sin(rate * t), amplitude * rate * math.cos(rate * t))

    return DesiredPath(f"benchmark-{variant.value}", surface, planar)


def make_circle_path(surface, center=(0.0, 0.0), radius=1.0, rate=0.1, phase=0.0):
    cx, cy = center

    def planar(t):
        angle = rate * t + phase
        return (cx + radius * math.cos(angle), cy + radius * math.sin(angle),
                -radius * rate * math.sin(angle), radius * rate * math.cos(angle))

    return DesiredPath(f"circle(r={radius:g})", surface, planar)


def make_line_path(surface, start=(0.0, 0.0), heading=0.0, speed=0.1):
    """Constant-speed straight line in the xy-plane; heading is measured from +x"""
    x0, y0 = start
    vx, vy = speed * math.cos(heading), speed * math.sin(heading)

    def planar(t):
        return x0 + vx * t, y0 + vy * t, vx, vy

    return DesiredPath(f"line(speed={speed:g})", surface, planar)


def build_path(name, variant, params, surface):
    name = PathName(name)
    if name is PathName.BENCHMARK:
        return make_benchmark_path(surface, variant, **params)
    if name is PathName.CIRCLE:
        return make_circle_path(surface, center=(params['center_x'], params['center_y']),
                                radius=params['radius'], rate=params['rate'], phase=params['phase'])
    return make_line_path(surface, start=(params['start_x'], params['start_y']),
                          heading=params['heading'], speed=params['speed'])
