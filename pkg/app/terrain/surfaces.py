"""Analytic terrains z = f(x, y) with closed-form slopes."""
import math
from dataclasses import dataclass

import numpy as np

from app.models.enums import SurfaceKind


@dataclass(frozen=True)
class SinusoidalParams:
    a: float
    omega: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a >= 0):
            raise ValueError(f"Amplitude must be finite and non-negative, got {self.a}")
        if not math.isfinite(self.omega):
            raise ValueError(f"Spatial frequency must be finite, got {self.omega}")


class Surface:
    """Immutable terrain with an analytic gradient.

    ``height`` and ``gradient`` take scalar coordinates; ``expression`` is the
    same height written for gnuplot in the variables x and y.
    """

    __slots__ = ('label', 'kind', 'params', '_height', '_gradient', '_expression')

    def __init__(self, label, kind, params, height, gradient, expression):
        object.__setattr__(self, 'label', label)
        object.__setattr__(self, 'kind', kind)
        object.__setattr__(self, 'params', dict(params))
        object.__setattr__(self, '_height', height)
        object.__setattr__(self, '_gradient', gradient)
        object.__setattr__(self, '_expression', expression)

    def __setattr__(self, name, value):
        raise AttributeError('Surface is immutable')

    def eval(self, x, y):
        return self._height(x, y)

    def grad(self, x, y):
        return self._gradient(x, y)

    def gnuplot_expr(self):
        return self._expression

    def __repr__(self):
        return f"<Surface {self.label}>"


def make_sinusoidal(params):
    a, w = float(params.a), float(params.omega)

    def height(x, y):
        return a * (math.cos(w * x) + math.cos(w * y) - 2.0)

    def gradient(x, y):
        return -a * w * math.sin(w * x), -a * w * math.sin(w * y)

    return Surface(
        label=f"sinusoidal(a={a:g}, omega={w:g})",
        kind=SurfaceKind.SINUSOIDAL,
        params={'a': a, 'omega': w},
        height=height,
        gradient=gradient,
        expression=f"{a!r}*(cos({w!r}*x)+cos({w!r}*y)-2)",
    )


def make_plane(slope_x, slope_y):
    sx, sy = float(slope_x), float(slope_y)
    if not (math.isfinite(sx) and math.isfinite(sy)):
        raise ValueError(f"Plane slopes must be finite, got ({slope_x}, {slope_y})")

    def height(x, y):
        return sx * x + sy * y

    def gradient(x, y):
        return sx, sy

    return Surface(
        label=f"plane(slope_x={sx:g}, slope_y={sy:g})",
        kind=SurfaceKind.PLANE,
        params={'slope_x': sx, 'slope_y': sy},
        height=height,
        gradient=gradient,
        expression=f"{sx!r}*x+{sy!r}*y",
    )


def build_surface(kind, params):
    """Construct a surface from its config tag and parameter record"""
    kind = SurfaceKind(kind) if not isinstance(kind, SurfaceKind) else kind
    if kind is SurfaceKind.SINUSOIDAL:
        return make_sinusoidal(SinusoidalParams(a=params['a'], omega=params['omega']))
    return make_plane(params['slope_x'], params['slope_y'])


def check_gradient(surface, x, y, h=1e-5):
    """Largest relative gap between the analytic slopes and central differences"""
    if h <= 0:
        raise ValueError(f"Step must be positive, got {h}")
    fx, fy = surface.grad(x, y)
    numeric_fx = (surface.eval(x + h, y) - surface.eval(x - h, y)) / (2.0 * h)
    numeric_fy = (surface.eval(x, y + h) - surface.eval(x, y - h)) / (2.0 * h)
    return max(
        abs(fx - numeric_fx) / max(1.0, abs(fx)),
        abs(fy - numeric_fy) / max(1.0, abs(fy)),
    )


def gradient_grid_error(surface, lo=-3.0, hi=3.0, n=10, h=1e-5):
    axis = np.linspace(lo, hi, n)
    return max(check_gradient(surface, float(x), float(y), h) for x in axis for y in axis)
