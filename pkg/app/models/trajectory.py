"""Recorded trajectories and their CSV form."""
import csv
from dataclasses import dataclass, field

import numpy as np

from app.utils.helpers import format_float

CSV_COLUMNS = (
    't', 'x0', 'y0', 'z0', 'xd', 'yd', 'zd',
    'theta', 'phi', 'psi', 'alpha',
    'theta_dot', 'phi_dot', 'psi_dot', 'alpha_dot',
    'ex', 'ey', 'ez', 'e_norm', 'zeta', 'ox', 'oy', 'oz',
)


@dataclass(frozen=True)
class TrajectoryRow:
    """One recorded step; psi is already wrapped and psi_dot is the turn rate"""
    t: float
    x0: float
    y0: float
    z0: float
    xd: float
    yd: float
    zd: float
    theta: float
    phi: float
    psi: float
    alpha: float
    theta_dot: float
    phi_dot: float
    psi_dot: float
    alpha_dot: float
    ex: float
    ey: float
    ez: float
    e_norm: float
    zeta: float
    ox: float
    oy: float
    oz: float

    def values(self):
        return tuple(getattr(self, name) for name in CSV_COLUMNS)


@dataclass
class TrajectoryRecord:
    robot_class: object
    label: str = ''
    rows: list = field(default_factory=list)
    max_correction: float = 0.0
    rejected_steps: int = 0

    def __len__(self):
        return len(self.rows)

    def append(self, row):
        if self.rows and row.t <= self.rows[-1].t:
            raise ValueError(f"Row time {row.t} does not advance past {self.rows[-1].t}")
        self.rows.append(row)

    def column(self, name):
        if name not in CSV_COLUMNS:
            raise KeyError(name)
        return np.array([getattr(row, name) for row in self.rows])

    def write_csv(self, stream):
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        for row in self.rows:
            writer.writerow([format_float(value) for value in row.values()])


def read_csv(stream):
    """Parse rows written by ``TrajectoryRecord.write_csv``"""
    reader = csv.reader(stream)
    header = next(reader)
    if tuple(header) != CSV_COLUMNS:
        raise ValueError(f"Unexpected trajectory header: {header}")
    return [TrajectoryRow(*(float(value) for value in line)) for line in reader if line]
