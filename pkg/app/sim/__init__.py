from app.sim.scenario import Scenario, initial_state_on
from app.sim.integrator import derivative, evaluate, rk4_step, StepStats
from app.sim.runner import run, compare, summarize, RunSummary
from app.sim.paths import make_benchmark_path, make_circle_path, make_line_path, build_path
