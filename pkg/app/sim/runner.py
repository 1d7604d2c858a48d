"""Scenario runs, class comparison and run summaries."""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from app.models.enums import RobotClass
from app.models.trajectory import TrajectoryRecord, TrajectoryRow
from app.robots.kinematics import center_point
from app.sim.integrator import StepStats, evaluate, rk4_step
from app.utils.helpers import wrap_angle

logger = logging.getLogger(__name__)

TAIL_FRACTION = 0.2


def _row(scenario, evaluation, t):
    # psi_dot is d(psi)/dt; the turn rate itself is measured about +n_hat
    state = evaluation.state
    snap = evaluation.snapshot
    rates = evaluation.rates
    center = center_point(state, evaluation.sample, scenario.radius, evaluation.transform)
    return TrajectoryRow(
        t=t,
        x0=state.x, y0=state.y, z0=state.z,
        xd=float(evaluation.target[0]), yd=float(evaluation.target[1]), zd=float(evaluation.target[2]),
        theta=state.theta, phi=state.phi, psi=wrap_angle(state.psi), alpha=state.alpha,
        theta_dot=rates.theta_dot, phi_dot=rates.phi_dot,
        psi_dot=0.0 - evaluation.turn_rate, alpha_dot=rates.alpha_dot,
        ex=float(snap.e[0]), ey=float(snap.e[1]), ez=float(snap.e[2]),
        e_norm=snap.e_norm, zeta=snap.zeta,
        ox=float(center[0]), oy=float(center[1]), oz=float(center[2]),
    )


def run(scenario):
    """Integrate ``scenario`` from t = 0 to t_end, one row per dt"""
    stats = StepStats()
    record = TrajectoryRecord(robot_class=scenario.robot_class,
                              label=scenario.label or scenario.path.label)
    state = scenario.initial_state.replace(t=0.0)
    steps = scenario.step_count
    for k in range(steps + 1):
        t = k * scenario.dt
        evaluation = evaluate(scenario, state, t)
        record.append(_row(scenario, evaluation, t))
        if k == steps:
            break
        state = rk4_step(scenario, state, t, scenario.dt, stats, k1=evaluation.vector)
    record.max_correction = stats.max_correction
    record.rejected_steps = stats.rejected_steps
    logger.debug(f"{scenario.robot_class.value}: {len(record)} rows, "
                 f"{stats.rejected_steps} rejected steps, max correction {stats.max_correction:.3e}")
    return record


def compare(scenario, classes=tuple(RobotClass), workers=4):
    """Run ``scenario`` once per class; results come back in ``classes`` order"""
    scenarios = [scenario.for_class(robot_class) for robot_class in classes]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        records = list(pool.map(run, scenarios))
    return dict(zip(classes, records))


@dataclass(frozen=True)
class RunSummary:
    robot_class: RobotClass
    rows: int
    final_error: float
    tail_mean_error: float
    max_error: float
    max_correction: float
    rejected_steps: int
    time_to_bound: float = None

    @property
    def converged(self):
        return self.time_to_bound is not None


def time_to_bound(record, bound):
    """Earliest t after which e_norm stays below ``bound``, or None"""
    entered = None
    for row in record.rows:
        if row.e_norm < bound:
            if entered is None:
                entered = row.t
        else:
            entered = None
    return entered


def summarize(record, bound=0.3):
    errors = [row.e_norm for row in record.rows]
    tail = errors[int(math.floor(len(errors) * (1.0 - TAIL_FRACTION))):] or errors[-1:]
    return RunSummary(
        robot_class=record.robot_class,
        rows=len(record),
        final_error=errors[-1],
        tail_mean_error=sum(tail) / len(tail),
        max_error=max(errors),
        max_correction=record.max_correction,
        rejected_steps=record.rejected_steps,
        time_to_bound=time_to_bound(record, bound),
    )
