import csv
import json
import os
import time
from dataclasses import dataclass
from datetime import datetime, timezone

from flask import current_app

from app.models.enums import RobotClass
from app.scenarios.document import load_scenario
from app.sim.runner import compare, run, summarize
from app.utils.errors import ConfigError, SimulationError
from app.utils.helpers import format_float
from app.utils.plotting import render_plot_script

SUMMARY_COLUMNS = ('class', 'rows', 'final_e_norm', 'tail_mean_e_norm', 'max_e_norm',
                   'max_correction', 'rejected_steps', 'time_to_bound', 'converged')


@dataclass
class RunResult:
    summaries: dict
    files: list
    output_dir: str
    elapsed: float


class SimulationService:
    """Loads scenario documents, runs them and writes the run artifacts"""

    def __init__(self):
        self.default_out = current_app.config.get('SPHEREKIN_OUT')
        self.workers = current_app.config.get('COMPARE_WORKERS', 4)
        self.bound = current_app.config.get('CONVERGENCE_BOUND', 0.3)

    def load(self, config_path, dt=None, t_end=None, path_variant=None):
        config = current_app.config
        try:
            scenario_config = load_scenario(
                config_path,
                config['SCENARIO_DEFAULTS'],
                config['SURFACE_PARAM_DEFAULTS'],
                config['PATH_PARAM_DEFAULTS'],
                dt=dt, t_end=t_end, path_variant=path_variant,
            )
        except ConfigError as e:
            current_app.logger.error(f"Invalid scenario config: {e}")
            raise
        current_app.logger.info(f"Loaded scenario {config_path}")
        return scenario_config

    def output_dir(self, scenario_config, out=None):
        """--out beats the document's output.directory, which beats SPHEREKIN_OUT"""
        directory = out or scenario_config.output['directory'] or self.default_out
        os.makedirs(directory, exist_ok=True)
        return directory

    def run(self, scenario_config, out=None):
        directory = self.output_dir(scenario_config, out)
        scenario = scenario_config.build_scenario()
        current_app.logger.info(
            f"Running {scenario.robot_class.value} on {scenario.surface.label}, "
            f"{scenario.step_count} steps of {scenario.dt:g} s")
        started = time.perf_counter()
        try:
            record = run(scenario)
        except SimulationError as e:
            current_app.logger.error(f"Run failed for {scenario.robot_class.value}: {e}")
            raise
        elapsed = time.perf_counter() - started

        files = [self._write_trajectory(record, os.path.join(directory, 'trajectory.csv'))]
        if scenario_config.output['emit_plot_script']:
            files.append(self._write_plot(directory, 'plot.gp', {scenario.robot_class.value: 'trajectory.csv'},
                                          scenario, scenario_config.output['plot_extent']))
        summary = summarize(record, self.bound)
        self._log_rejections(summary)
        files.append(self._write_meta(directory, scenario_config, elapsed, [scenario.robot_class]))
        return RunResult(summaries={scenario.robot_class: summary}, files=files,
                         output_dir=directory, elapsed=elapsed)

    def compare(self, scenario_config, out=None):
        directory = self.output_dir(scenario_config, out)
        scenario = scenario_config.build_scenario()
        classes = tuple(RobotClass)
        current_app.logger.info(f"Comparing {', '.join(c.value for c in classes)} "
                                f"with {self.workers} workers")
        started = time.perf_counter()
        try:
            records = compare(scenario, classes, workers=self.workers)
        except SimulationError as e:
            current_app.logger.error(f"Compare run failed: {e}")
            raise
        elapsed = time.perf_counter() - started

        files, summaries, names = [], {}, {}
        for robot_class, record in records.items():
            name = f"trajectory_{robot_class.value}.csv"
            names[robot_class.value] = name
            files.append(self._write_trajectory(record, os.path.join(directory, name)))
            summaries[robot_class] = summarize(record, self.bound)
            self._log_rejections(summaries[robot_class])
        files.append(self._write_summary(os.path.join(directory, 'summary.csv'), summaries))
        if scenario_config.output['emit_plot_script']:
            files.append(self._write_plot(directory, 'plot_compare.gp', names, scenario,
                                          scenario_config.output['plot_extent']))
        files.append(self._write_meta(directory, scenario_config, elapsed, classes))
        return RunResult(summaries=summaries, files=files, output_dir=directory, elapsed=elapsed)

    def _log_rejections(self, summary):
        if summary.rejected_steps:
            current_app.logger.warning(
                f"{summary.robot_class.value}: {summary.rejected_steps} steps were halved "
                f"to hold contact within z_tol")

    def _write_trajectory(self, record, path):
        with open(path, 'w', newline='', encoding='utf-8') as handle:
            record.write_csv(handle)
        return path

    def _write_summary(self, path, summaries):
        with open(path, 'w', newline='', encoding='utf-8') as handle:
            writer = csv.writer(handle, lineterminator='\n')
            writer.writerow(SUMMARY_COLUMNS)
            for robot_class, summary in summaries.items():
                writer.writerow([
                    robot_class.value,
                    summary.rows,
                    format_float(summary.final_error),
                    format_float(summary.tail_mean_error),
                    format_float(summary.max_error),
                    format_float(summary.max_correction),
                    summary.rejected_steps,
                    '' if summary.time_to_bound is None else format_float(summary.time_to_bound),
                    'yes' if summary.converged else 'no',
                ])
        return path

    def _write_plot(self, directory, name, csv_files, scenario, extent):
        path = os.path.join(directory, name)
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(render_plot_script(csv_files, scenario.surface, extent,
                                            title=f"{scenario.path.label} on {scenario.surface.label}"))
        return path

    def _write_meta(self, directory, scenario_config, elapsed, classes):
        """Timestamps live here so the data files stay byte-identical across runs"""
        path = os.path.join(directory, 'run_meta.json')
        meta = {
            'created_at': datetime.now(timezone.utc).isoformat(),
            'elapsed_seconds': round(elapsed, 3),
            'classes': [c.value for c in classes],
            'source': scenario_config.source,
            'config': scenario_config.document,
        }
        with open(path, 'w', encoding='utf-8') as handle:
            json.dump(meta, handle, sort_keys=True, indent=2)
            handle.write('\n')
        return path
