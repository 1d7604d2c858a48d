"""Desired trajectories lying on a surface."""
import math

import numpy as np


class DesiredPath:
    """A planar trajectory (x_d, y_d) lifted onto ``surface``.

    ``planar`` maps t to (x, y, dx/dt, dy/dt); z_d and its rate follow from the
    surface height and slopes, so the path always lies on the terrain.
    """

    def __init__(self, label, surface, planar):
        self.label = label
        self.surface = surface
        self._planar = planar

    def position(self, t):
        x, y, _, _ = self._planar(t)
        return np.array([x, y, self.surface.eval(x, y)])

    def velocity(self, t):
        x, y, vx, vy = self._planar(t)
        fx, fy = self.surface.grad(x, y)
        return np.array([vx, vy, fx * vx + fy * vy])

    def speed(self, t):
        v = self.velocity(t)
        return math.sqrt(float(v @ v))

    def __repr__(self):
        return f"<DesiredPath {self.label}>"
